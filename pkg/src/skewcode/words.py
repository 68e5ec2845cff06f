"""Binary words and their offset-tuple representation.

A word of length ``w`` and Hamming weight ``h`` is identified with the
weakly increasing tuple ``(p_1 - 1, p_2 - 2, ..., p_h - h)`` where ``p_i`` is
the 1-based slot of the i-th one.  Offsets live in ``[0, w - h]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Sequence


@dataclass(frozen=True)
class BinaryWord:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"binary symbol expected, got {b!r}")
        object.__setattr__(self, "bits", bits)

    @property
    def w(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def positions(self) -> tuple[int, ...]:
        """1-based slots holding a pulse, ascending."""
        return tuple(k for k, b in enumerate(self.bits, start=1) if b)

    @classmethod
    def parse(cls, text: str) -> "BinaryWord":
        text = text.strip()
        if any(c not in "01" for c in text):
            raise ValueError(f"not a bit string: {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def zeros(cls, w: int) -> "BinaryWord":
        return cls((0,) * w)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def hamming_weight(word: BinaryWord) -> int:
    return word.weight


@dataclass(frozen=True, order=True)
class OffsetTuple:
    """Weakly increasing offsets ``0 <= x_1 <= ... <= x_h <= bound``."""

    offsets: tuple[int, ...]
    bound: int

    def __post_init__(self):
        offsets = tuple(int(v) for v in self.offsets)
        object.__setattr__(self, "offsets", offsets)
        if self.bound < 0:
            raise ValueError(f"negative bound {self.bound}")
        prev = 0
        for v in offsets:
            if v < prev:
                raise ValueError(f"offsets not weakly increasing / nonnegative: {offsets}")
            prev = v
        if offsets and offsets[-1] > self.bound:
            raise ValueError(f"offset {offsets[-1]} exceeds bound {self.bound}")

    @property
    def h(self) -> int:
        return len(self.offsets)

    @property
    def w(self) -> int:
        return self.bound + self.h

    def __len__(self) -> int:
        return len(self.offsets)

    def __iter__(self):
        return iter(self.offsets)

    def __getitem__(self, i):
        return self.offsets[i]

    @classmethod
    def parse(cls, text: str, bound: int) -> "OffsetTuple":
        text = text.strip()
        values = tuple(int(v) for v in text.split(",")) if text else ()
        return cls(values, bound)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.offsets)


def to_offsets(word: BinaryWord) -> OffsetTuple:
    pos = word.positions()
    return OffsetTuple(tuple(p - i for i, p in enumerate(pos, start=1)), word.w - len(pos))


def from_offsets(x: OffsetTuple, w: int) -> BinaryWord:
    if x.bound != w - x.h:
        raise ValueError(f"bound {x.bound} does not match w - h = {w - x.h}")
    bits = [0] * w
    for i, v in enumerate(x.offsets, start=1):
        bits[v + i - 1] = 1
    return BinaryWord(tuple(bits))


def iter_offsets(h: int, bound: int) -> Iterator[OffsetTuple]:
    """All tuples of weight ``h`` bounded by ``bound``, lexicographic order."""
    for combo in combinations_with_replacement(range(bound + 1), h):
        yield OffsetTuple(combo, bound)


def iter_words(w: int, h: int | None = None) -> Iterator[BinaryWord]:
    """Words of length ``w`` (optionally of weight ``h``), lexicographic in their offsets."""
    weights: Sequence[int] = range(w + 1) if h is None else (h,)
    for hh in weights:
        for x in iter_offsets(hh, w - hh):
            yield from_offsets(x, w)


def words_by_positions(w: int, h: int) -> Iterator[BinaryWord]:
    # Independent of the offset machinery; used as a cross-check.
    for pos in combinations(range(w), h):
        bits = [0] * w
        for p in pos:
            bits[p] = 1
        yield BinaryWord(tuple(bits))
