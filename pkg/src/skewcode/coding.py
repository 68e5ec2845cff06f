"""Optimal zero-error code for the (1,w)-channel.

The code keeps the words whose offset tuples are all even.  Weight class
``h`` then holds ``C(h + (w - h) // 2, h)`` codewords and the whole book holds
``F_w`` of them.  Messages are numbered by weight class first, then
lexicographically inside each class.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate, combinations_with_replacement
from math import comb
from typing import Iterable, Iterator

from .channel import ReceivedBlock
from .graph import is_edge
from .words import BinaryWord, OffsetTuple, from_offsets, iter_offsets, to_offsets

VERIFY_MAX_W = 12


class NotACodeword(ValueError):
    pass


class ParityViolation(ValueError):
    """Received block cannot come from any codeword."""

    code = "PARITY_VIOLATION"


def f_map(x: OffsetTuple) -> OffsetTuple:
    return OffsetTuple(tuple(2 * (v // 2) for v in x), x.bound)


def verify_adjacency_reducing(w: int) -> bool:
    """Exhaustively check that ``f_map`` keeps non-adjacent pairs non-adjacent
    and that its range is independent, in every weight class."""
    if w > VERIFY_MAX_W:
        raise ValueError(f"w={w} exceeds exhaustive guard {VERIFY_MAX_W}")
    for h in range(w + 1):
        verts = list(iter_offsets(h, w - h))
        images = [f_map(x) for x in verts]
        for i in range(len(verts)):
            for j in range(i + 1, len(verts)):
                if not is_edge(verts[i], verts[j]) and is_edge(images[i], images[j]):
                    return False
        rng = sorted(set(images))
        for i in range(len(rng)):
            for j in range(i + 1, len(rng)):
                if is_edge(rng[i], rng[j]):
                    return False
    return True


@dataclass(frozen=True)
class Message:
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("message index must be nonnegative")

    def __index__(self) -> int:
        return self.index

    def __int__(self) -> int:
        return self.index


def class_size(w: int, h: int) -> int:
    return comb(h + (w - h) // 2, h)


@dataclass(frozen=True)
class Codebook:
    """Codebook metadata; the codewords themselves are generated on demand."""

    w: int

    def __post_init__(self):
        if self.w < 0:
            raise ValueError("block length must be nonnegative")

    @cached_property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(class_size(self.w, h) for h in range(self.w + 1))

    @cached_property
    def class_offsets(self) -> tuple[int, ...]:
        return (0,) + tuple(accumulate(self.class_sizes))

    @property
    def size(self) -> int:
        return self.class_offsets[-1]

    def __len__(self) -> int:
        return self.size

    def enumerated_size(self) -> int:
        """Codebook size by walking every even tuple rather than by formula."""
        n = 0
        for h in range(self.w + 1):
            evens = range(0, self.w - h + 1, 2)
            for _ in combinations_with_replacement(evens, h):
                n += 1
        return n

    def iter_class(self, h: int) -> Iterator[OffsetTuple]:
        d = (self.w - h) // 2
        for z in iter_offsets(h, d):
            yield OffsetTuple(tuple(2 * v for v in z), self.w - h)

    @cached_property
    def classes(self) -> tuple[tuple[OffsetTuple, ...], ...]:
        return tuple(tuple(self.iter_class(h)) for h in range(self.w + 1))

    def codewords(self) -> Iterator[BinaryWord]:
        for h in range(self.w + 1):
            for x in self.iter_class(h):
                yield from_offsets(x, self.w)

    def to_json(self) -> str:
        return json.dumps({"w": self.w, "classes": [[list(x) for x in cls] for cls in self.classes]})

    @classmethod
    def from_json(cls, text: str) -> "Codebook":
        data = json.loads(text)
        cb = cls(int(data["w"]))
        got = tuple(tuple(OffsetTuple(tuple(x), cb.w - h) for x in c) for h, c in enumerate(data["classes"]))
        if got != cb.classes:
            raise ValueError("classes do not match the canonical codebook")
        return cb


def build_codebook(w: int) -> Codebook:
    return Codebook(w)


def _rank_combination(y: tuple[int, ...], n: int) -> int:
    # y strictly increasing in 1..n, lexicographic rank
    k = len(y)
    r, prev = 0, 0
    for i, yi in enumerate(y, start=1):
        for v in range(prev + 1, yi):
            r += comb(n - v, k - i)
        prev = yi
    return r


def _unrank_combination(r: int, k: int, n: int) -> tuple[int, ...]:
    out = []
    v = 1
    for i in range(1, k + 1):
        while True:
            block = comb(n - v, k - i)
            if r < block:
                break
            r -= block
            v += 1
        out.append(v)
        v += 1
    return tuple(out)


def _locate_class(index: int, cb: Codebook) -> int:
    offs = cb.class_offsets
    for h in range(cb.w + 1):
        if index < offs[h + 1]:
            return h
    raise AssertionError("unreachable")


def encode(m: Message | int, cb: Codebook) -> BinaryWord:
    index = int(m)
    if not 0 <= index < cb.size:
        raise ValueError(f"message {index} outside [0, {cb.size})")
    h = _locate_class(index, cb)
    d = (cb.w - h) // 2
    y = _unrank_combination(index - cb.class_offsets[h], h, d + h)
    x = tuple(2 * (yi - i) for i, yi in enumerate(y, start=1))
    return from_offsets(OffsetTuple(x, cb.w - h), cb.w)


def _rank_offsets(x: OffsetTuple, cb: Codebook) -> Message:
    if any(v % 2 for v in x):
        raise NotACodeword(f"offsets {x} are not all even")
    h = x.h
    d = (cb.w - h) // 2
    y = tuple(v // 2 + i for i, v in enumerate(x, start=1))
    return Message(cb.class_offsets[h] + _rank_combination(y, d + h))


def rank(word: BinaryWord, cb: Codebook) -> Message:
    if word.w != cb.w:
        raise ValueError(f"word length {word.w} != codebook length {cb.w}")
    return _rank_offsets(to_offsets(word), cb)


def decode(rx: ReceivedBlock, cb: Codebook) -> Message:
    """Undo the skew pulse by pulse.

    The i-th arrival came from slot ``r // 2`` or ``(r + 1) // 2``; for a
    codeword the slot has the parity of ``i``, which picks one.
    """
    if rx.w != cb.w:
        raise ValueError(f"block length {rx.w} != codebook length {cb.w}")
    h = len(rx.arrivals)
    bound = cb.w - h
    offsets = []
    prev = 0
    for i, r in enumerate(rx.arrivals, start=1):
        slots = [p for p in {r // 2, (r + 1) // 2} if p % 2 == i % 2]
        if not slots:
            raise ParityViolation(f"arrival {r} (pulse {i}) has no slot of parity {i % 2}")
        x = slots[0] - i
        if x < prev or x > bound:
            raise ParityViolation(f"pulse {i} decodes to offset {x}, outside [{prev}, {bound}]")
        offsets.append(x)
        prev = x
    return _rank_offsets(OffsetTuple(tuple(offsets), bound), cb)


@dataclass(frozen=True)
class StreamRecord:
    block: int
    message: int
    word: str
    arrivals: tuple[int, ...]

    def to_json(self) -> str:
        return json.dumps(
            {"block": self.block, "message": self.message, "word": self.word, "arrivals": list(self.arrivals)}
        )

    @classmethod
    def from_json(cls, line: str) -> "StreamRecord":
        d = json.loads(line)
        return cls(int(d["block"]), int(d["message"]), str(d["word"]), tuple(d["arrivals"]))


def encode_stream(messages: Iterable[int], cb: Codebook) -> list[BinaryWord]:
    return [encode(m, cb) for m in messages]


def decode_stream(blocks: Iterable[ReceivedBlock], cb: Codebook) -> list[Message]:
    return [decode(rx, cb) for rx in blocks]
