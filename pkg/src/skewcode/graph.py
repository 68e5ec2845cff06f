"""Confusability graph of the (1,w)-channel, one component per weight."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .channel import ORACLE_MAX_W, SkewMode, confusable_bruteforce
from .words import OffsetTuple, from_offsets, iter_offsets

MIS_MAX_VERTICES = 1000


@dataclass(frozen=True)
class WeightComponent:
    """Vertices in lexicographic order; edges as rank pairs ``(i, j)`` with ``i < j``."""

    w: int
    h: int
    vertices: tuple[OffsetTuple, ...]
    edges: frozenset[tuple[int, int]]
    _adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj: list[list[int]] = [[] for _ in self.vertices]
        for i, j in self.edges:
            if not (0 <= i < j < len(self.vertices)):
                raise ValueError(f"bad edge {(i, j)}")
            adj[i].append(j)
            adj[j].append(i)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self._adj[i]

    def rank_of(self, x: OffsetTuple) -> int:
        return self.vertices.index(x)

    def is_independent(self, chosen) -> bool:
        ranks = sorted(self.rank_of(x) for x in chosen)
        s = set(ranks)
        return all(j not in s for i in ranks for j in self._adj[i])

    def to_edgelist(self) -> str:
        lines = [f"{self.w} {self.h} {self.n} {self.m}"]
        lines += [f"{i} {j}" for i, j in sorted(self.edges)]
        lines += [f"# {r}: {x}" for r, x in enumerate(self.vertices)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edgelist(cls, text: str) -> "WeightComponent":
        rows = [ln for ln in text.splitlines() if ln.strip()]
        w, h, n, m = (int(v) for v in rows[0].split())
        edges = frozenset(tuple(int(v) for v in ln.split()) for ln in rows[1 : 1 + m])
        verts = []
        for ln in rows[1 + m :]:
            _, body = ln.lstrip("# ").split(":", 1)
            verts.append(OffsetTuple.parse(body, w - h))
        if len(verts) != n:
            raise ValueError(f"expected {n} vertices, found {len(verts)}")
        return cls(w, h, tuple(verts), edges)


def is_edge(x: OffsetTuple, y: OffsetTuple) -> bool:
    if x.h != y.h or x.bound != y.bound:
        raise ValueError("offset tuples from different components")
    return x != y and all(abs(a - b) <= 1 for a, b in zip(x, y))


def _check_weight(w: int, h: int) -> None:
    if w < 1:
        raise ValueError("block length must be at least 1")
    if not 0 <= h <= w:
        raise ValueError(f"weight {h} outside [0, {w}]")


def _component(w: int, h: int, adjacent: Callable[[OffsetTuple, OffsetTuple], bool]) -> WeightComponent:
    verts = tuple(iter_offsets(h, w - h))
    edges = frozenset(
        (i, j) for i in range(len(verts)) for j in range(i + 1, len(verts)) if adjacent(verts[i], verts[j])
    )
    return WeightComponent(w, h, verts, edges)


def build_component(w: int, h: int) -> WeightComponent:
    _check_weight(w, h)
    return _component(w, h, is_edge)


def oracle_component(w: int, h: int, mode: SkewMode, forced_boundary: bool = False) -> WeightComponent:
    """Same vertex set as :func:`build_component`, edges from exhaustive channel simulation."""
    _check_weight(w, h)
    if w > ORACLE_MAX_W:
        raise ValueError(f"w={w} too large for exhaustive skew enumeration (max {ORACLE_MAX_W})")

    def adjacent(x, y):
        return confusable_bruteforce(from_offsets(x, w), from_offsets(y, w), mode, forced_boundary)

    return _component(w, h, adjacent)


def build_graph(w: int) -> list[WeightComponent]:
    return [build_component(w, h) for h in range(w + 1)]


def max_independent_set(c: WeightComponent) -> set[OffsetTuple]:
    """Exact maximum independent set by branch and bound.

    Vertex sets are bitmasks.  The bound at each node is a greedy clique
    cover of the remaining candidates: an independent set uses at most one
    vertex per clique.
    """
    n = c.n
    if n > MIS_MAX_VERTICES:
        raise ValueError(f"component has {n} vertices; exact search limited to {MIS_MAX_VERTICES}")
    adj = [0] * n
    for i, j in c.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i

    def cover_bound(cand: int) -> int:
        count = 0
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            common = cand & adj[v]
            while common:
                u = (common & -common).bit_length() - 1
                cand &= ~(1 << u)
                common &= adj[u]
            count += 1
        return count

    # greedy min-degree seed gives a good incumbent
    best_mask, cand = 0, (1 << n) - 1
    while cand:
        v = min(_bits(cand), key=lambda u: (bin(adj[u] & cand).count("1"), u))
        best_mask |= 1 << v
        cand &= ~(adj[v] | (1 << v))
    best = [bin(best_mask).count("1"), best_mask]

    def expand(chosen: int, size: int, cand: int) -> None:
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + cover_bound(cand) <= best[0]:
            return
        v = max(_bits(cand), key=lambda u: (bin(adj[u] & cand).count("1"), -u))
        bit = 1 << v
        expand(chosen | bit, size + 1, cand & ~(adj[v] | bit))
        expand(chosen, size, cand & ~bit)

    expand(0, 0, (1 << n) - 1)
    return {c.vertices[i] for i in _bits(best[1])}


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def component_sizes(w: int) -> list[int]:
    return [comb(w, h) for h in range(w + 1)]
