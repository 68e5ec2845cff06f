"""Optimal zero-error code for the (1,w) skew channel."""

from .capacity import aas_sandwich, binet, capacity_1w, fibonacci, lower_bound_check
from .channel import ReceivedBlock, SkewMode, SkewPattern, confusable_bruteforce, enumerate_skews, transmit
from .coding import Codebook, Message, ParityViolation, build_codebook, decode, encode, f_map, rank
from .graph import WeightComponent, build_component, is_edge, max_independent_set, oracle_component
from .words import BinaryWord, OffsetTuple, from_offsets, to_offsets

__version__ = "0.1.0"
