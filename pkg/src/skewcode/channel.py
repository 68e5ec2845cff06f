"""Discrete (1,w)-channel on a half-slot grid.

A pulse sent in slot ``k`` (1-based) with deviation ``sigma_k`` half-slots
arrives at index ``2k + sigma_k``.  The receiver sees the sorted multiset of
arrival indices; coinciding pulses stay countable.
"""

from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .words import BinaryWord

ORACLE_MAX_W = 16


class SkewMode(enum.Enum):
    BINARY = "binary"
    TERNARY = "ternary"


@dataclass(frozen=True)
class SkewPattern:
    sigmas: tuple[int, ...]

    def __post_init__(self):
        sigmas = tuple(int(s) for s in self.sigmas)
        object.__setattr__(self, "sigmas", sigmas)
        if not sigmas:
            raise ValueError("empty skew pattern")
        if any(s not in (-1, 0, 1) for s in sigmas):
            raise ValueError(f"deviations must be in {{-1, 0, +1}}: {sigmas}")
        # no pulse may leave its block
        if sigmas[0] < 0 or sigmas[-1] > 0:
            raise ValueError(f"pattern crosses a block boundary: {sigmas}")

    @property
    def w(self) -> int:
        return len(self.sigmas)

    def admissible(self, mode: SkewMode, forced_boundary: bool = False) -> bool:
        choices = slot_choices(self.w, mode, forced_boundary)
        return all(s in c for s, c in zip(self.sigmas, choices))


@dataclass(frozen=True)
class ReceivedBlock:
    """Sorted arrival indices (a multiset) of one block."""

    arrivals: tuple[int, ...]
    w: int

    def __post_init__(self):
        arrivals = tuple(sorted(int(r) for r in self.arrivals))
        object.__setattr__(self, "arrivals", arrivals)
        for r in arrivals:
            if not 1 <= r <= 2 * self.w + 1:
                raise ValueError(f"arrival {r} outside [1, {2 * self.w + 1}]")

    def __len__(self) -> int:
        return len(self.arrivals)


@dataclass(frozen=True)
class ChannelTiming:
    T: float
    tau: float = 0.0

    def __post_init__(self):
        if not self.T > 0:
            raise ValueError("signaling interval must be positive")
        if self.tau < 0:
            raise ValueError("propagation delay must be nonnegative")

    def timestamps(self, rx: ReceivedBlock, block: int = 0) -> list[float]:
        """Physical arrival times in seconds; ``block`` shifts by whole blocks."""
        base = self.tau + block * rx.w * self.T
        return [base + (r / 2) * self.T for r in rx.arrivals]

    def to_json(self, rx: ReceivedBlock, block: int = 0) -> str:
        return json.dumps(self.timestamps(rx, block))


def slot_choices(w: int, mode: SkewMode, forced_boundary: bool = False) -> list[tuple[int, ...]]:
    """Allowed deviations per slot.

    ``forced_boundary`` only affects TERNARY: the first/last slot are then
    pinned to +1/-1 exactly as in BINARY mode.  A one-slot block can only
    hold its pulse in place, so ``w == 1`` gives ``[(0,)]`` in every mode.
    """
    if w < 1:
        raise ValueError("block length must be at least 1")
    if w == 1:
        return [(0,)]
    if mode is SkewMode.BINARY:
        first, inner, last = (1,), (-1, 1), (-1,)
    elif forced_boundary:
        first, inner, last = (1,), (-1, 0, 1), (-1,)
    else:
        first, inner, last = (0, 1), (-1, 0, 1), (-1, 0)
    return [first] + [inner] * (w - 2) + [last]


def enumerate_skews(w: int, mode: SkewMode, forced_boundary: bool = False) -> Iterator[SkewPattern]:
    for sigmas in product(*slot_choices(w, mode, forced_boundary)):
        yield SkewPattern(sigmas)


def count_skews(w: int, mode: SkewMode, forced_boundary: bool = False) -> int:
    n = 1
    for choices in slot_choices(w, mode, forced_boundary):
        n *= len(choices)
    return n


def random_skew(w: int, mode: SkewMode, rng: random.Random, forced_boundary: bool = False) -> SkewPattern:
    return SkewPattern(tuple(rng.choice(c) for c in slot_choices(w, mode, forced_boundary)))


def transmit(word: BinaryWord, skew: SkewPattern) -> ReceivedBlock:
    if word.w != skew.w:
        raise ValueError(f"word length {word.w} != skew length {skew.w}")
    return ReceivedBlock(
        tuple(2 * k + s for k, (a, s) in enumerate(zip(word.bits, skew.sigmas), start=1) if a),
        word.w,
    )


@lru_cache(maxsize=1 << 16)
def output_set(word: BinaryWord, mode: SkewMode, forced_boundary: bool = False) -> frozenset[ReceivedBlock]:
    if word.w < 1:
        raise ValueError("block length must be at least 1")
    return frozenset(transmit(word, s) for s in enumerate_skews(word.w, mode, forced_boundary))


def confusable_bruteforce(a: BinaryWord, b: BinaryWord, mode: SkewMode, forced_boundary: bool = False) -> bool:
    if a.w != b.w:
        raise ValueError(f"word lengths differ: {a.w} != {b.w}")
    return not output_set(a, mode, forced_boundary).isdisjoint(output_set(b, mode, forced_boundary))
