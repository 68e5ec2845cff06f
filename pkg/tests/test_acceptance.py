"""Exit criteria for the package, one test per criterion."""

import time

import pytest

from oracles import golden_power_exceeded
from skewcode.capacity import (
    LOG2_PHI,
    aas_sandwich,
    binet_residual,
    binomial_sum,
    capacity_1w,
    fibonacci,
    lower_bound_check,
    min_gap,
)
from skewcode.channel import SkewMode
from skewcode.coding import build_codebook, class_size
from skewcode.verify import (
    SKEW_VARIANTS,
    codebook_is_independent,
    mis_sizes,
    oracle_discrepancies,
    roundtrip_exhaustive,
    roundtrip_random,
    variant_label,
)

SMALL_W = range(2, 9)


def test_criterion_1_fibonacci_identity():
    start = time.perf_counter()
    for w in range(61):
        assert fibonacci(w) == binomial_sum(w), w
    for w in range(1, 31):
        assert fibonacci(w) == build_codebook(w).enumerated_size(), w
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"took {elapsed:.2f}s"


@pytest.mark.parametrize("mode, forced", SKEW_VARIANTS, ids=[variant_label(*v) for v in SKEW_VARIANTS])
def test_criterion_2_oracle_equivalence(mode, forced):
    for w in SMALL_W:
        assert oracle_discrepancies(w, mode, forced) == 0, w


def test_criterion_3_independence_number():
    for w in SMALL_W:
        sizes = mis_sizes(w)
        assert sum(sizes) == fibonacci(w), w
        assert sizes == [class_size(w, h) for h in range(w + 1)], w
        assert codebook_is_independent(w), w


def test_criterion_4_zero_error_round_trip():
    start = time.perf_counter()
    for w in SMALL_W:
        for mode, forced in SKEW_VARIANTS:
            trials, failures = roundtrip_exhaustive(w, mode, forced)
            assert trials == fibonacci(w) * _skew_count(w, mode, forced)
            assert failures == 0, (w, mode, forced)
    for w in (10, 20, 30):
        for mode in SkewMode:
            trials, failures = roundtrip_random(w, 10_000, seed=w, mode=mode)
            assert trials >= 10_000
            assert failures == 0, (w, mode)
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"took {elapsed:.1f}s"


def _skew_count(w, mode, forced):
    if mode is SkewMode.BINARY or forced:
        return (2 if mode is SkewMode.BINARY else 3) ** (w - 2)
    return 4 * 3 ** (w - 2)


def test_criterion_5_capacity_values():
    import math

    assert capacity_1w(2) == math.log2(3) / 2
    assert capacity_1w(4) == 0.75
    assert format(LOG2_PHI, ".12f") == "0.694241913631"
    # interval-certified inside the library, exact Z[sqrt5] arithmetic here
    assert lower_bound_check(1000)
    assert all(golden_power_exceeded(w) for w in range(2, 1001))


def test_criterion_6_convergence():
    gap = min_gap(1000)
    assert 0 < gap < 3.3e-4
    for w in range(61):
        assert binet_residual(w) < 1e-6, w


def test_criterion_7_aas_resolution():
    reports = [aas_sandwich(w) for w in (2, 10, 100, 1000)]
    for r in reports:
        assert r.lower == r.resolved == LOG2_PHI
        assert r.lower < r.upper
    uppers = [r.upper for r in reports]
    assert uppers == sorted(uppers, reverse=True) and len(set(uppers)) == len(uppers)
    assert reports[-1].upper - reports[-1].lower < 3.3e-4
    text = reports[-1].summary()
    assert "inf_{w>=2} C_1,w = lim_{w->inf} C_1,w = log2(phi)" in text
    assert "C_AAS = log2(phi) = 0.694241913631 exactly" in text
