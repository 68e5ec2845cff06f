"""Computational checks shared by the ``verify``/``roundtrip`` commands and the test-suite."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .capacity import fibonacci
from .channel import SkewMode, enumerate_skews, random_skew, transmit
from .coding import build_codebook, class_size, decode, encode, verify_adjacency_reducing
from .graph import build_component, is_edge, max_independent_set, oracle_component

EXHAUSTIVE_MAX_W = 8

# (mode, forced_boundary) combinations covered by the oracle checks
SKEW_VARIANTS = (
    (SkewMode.BINARY, False),
    (SkewMode.TERNARY, False),
    (SkewMode.TERNARY, True),
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def variant_label(mode: SkewMode, forced_boundary: bool) -> str:
    return mode.value + ("-forced-boundary" if forced_boundary else "")


def oracle_discrepancies(w: int, mode: SkewMode, forced_boundary: bool = False) -> int:
    """Edges present in exactly one of the simulated and the analytic graph."""
    total = 0
    for h in range(w + 1):
        total += len(oracle_component(w, h, mode, forced_boundary).edges ^ build_component(w, h).edges)
    return total


def mis_sizes(w: int) -> list[int]:
    return [len(max_independent_set(build_component(w, h))) for h in range(w + 1)]


def codebook_is_independent(w: int) -> bool:
    cb = build_codebook(w)
    for cls in cb.classes:
        for i in range(len(cls)):
            for j in range(i + 1, len(cls)):
                if is_edge(cls[i], cls[j]):
                    return False
    return True


def roundtrip_exhaustive(w: int, mode: SkewMode, forced_boundary: bool = False) -> tuple[int, int]:
    """(trials, failures) over every message and every admissible skew."""
    cb = build_codebook(w)
    skews = list(enumerate_skews(w, mode, forced_boundary))
    trials = failures = 0
    for m in range(cb.size):
        word = encode(m, cb)
        for s in skews:
            trials += 1
            try:
                ok = decode(transmit(word, s), cb).index == m
            except ValueError:
                ok = False
            failures += not ok
    return trials, failures


def roundtrip_random(w: int, trials: int, seed: int, mode: SkewMode) -> tuple[int, int]:
    """Seeded random round trips using :class:`random.Random` (Mersenne Twister)."""
    rng = random.Random(seed)
    cb = build_codebook(w)
    failures = 0
    for _ in range(trials):
        m = rng.randrange(cb.size)
        s = random_skew(w, mode, rng)
        try:
            ok = decode(transmit(encode(m, cb), s), cb).index == m
        except ValueError:
            ok = False
        failures += not ok
    return trials, failures


def run_checks(w: int) -> list[CheckResult]:
    if not 1 <= w <= EXHAUSTIVE_MAX_W:
        raise ValueError(f"verification needs 1 <= w <= {EXHAUSTIVE_MAX_W}")
    results = []
    for mode, forced in SKEW_VARIANTS:
        bad = oracle_discrepancies(w, mode, forced)
        results.append(
            CheckResult(f"oracle-equivalence[{variant_label(mode, forced)}]", bad == 0, f"w={w} discrepancies={bad}")
        )
    results.append(CheckResult("adjacency-reducing", verify_adjacency_reducing(w), f"w={w}"))
    results.append(CheckResult("codebook-independent", codebook_is_independent(w), f"w={w}"))
    sizes = mis_sizes(w)
    fw = fibonacci(w)
    classes_max = all(sizes[h] == class_size(w, h) for h in range(w + 1))
    results.append(CheckResult("mis-total", sum(sizes) == fw, f"w={w} sum={sum(sizes)} F_w={fw}"))
    results.append(CheckResult("codebook-classes-maximum", classes_max, f"w={w} mis={sizes}"))
    for mode, forced in SKEW_VARIANTS:
        trials, failures = roundtrip_exhaustive(w, mode, forced)
        results.append(
            CheckResult(
                f"roundtrip[{variant_label(mode, forced)}]",
                failures == 0,
                f"w={w} trials={trials} failures={failures}",
            )
        )
    return results
