"""Zero-error capacity of the (1,w)-channel and its limit.

``F_w`` is the Fibonacci sequence shifted so that ``F_0 = 1`` and ``F_1 = 2``;
the capacity is ``log2(F_w) / w`` bits per slot, which decreases to
``log2(phi)``.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import asdict, dataclass
from math import comb

from mpmath import iv, mp

DPS = 50


def fibonacci(w: int) -> int:
    if w < 0:
        raise ValueError("index must be nonnegative")
    a, b = 1, 2
    for _ in range(w):
        a, b = b, a + b
    return a


def fibonacci_table(w_max: int) -> list[int]:
    out = [1, 2][: w_max + 1]
    while len(out) <= w_max:
        out.append(out[-1] + out[-2])
    return out


def binomial_sum(w: int) -> int:
    """Number of codewords counted class by class."""
    return sum(comb(h + (w - h) // 2, h) for h in range(w + 1))


def _phi():
    return (1 + mp.sqrt(5)) / 2


def _alpha():
    s5 = mp.sqrt(5)
    return (4 + 2 * s5) / (5 + s5)


def golden_ratio(dps: int = DPS):
    with mp.workdps(dps):
        return +_phi()


def alpha(dps: int = DPS):
    with mp.workdps(dps):
        return +_alpha()


def log2_phi(dps: int = DPS):
    with mp.workdps(dps):
        return mp.log(_phi(), 2)


LOG2_PHI = float(log2_phi())


def capacity_1w(w: int) -> float:
    if w < 1:
        raise ValueError("block length must be at least 1")
    # math.log2 is exact-argument for Python ints of any size
    return math.log2(fibonacci(w)) / w


def capacity_mp(w: int, dps: int = DPS):
    if w < 1:
        raise ValueError("block length must be at least 1")
    with mp.workdps(dps):
        return mp.log(mp.mpf(fibonacci(w)), 2) / w


def binet(w: int, dps: int = DPS):
    """Closed form ``alpha*phi**w + (1 - alpha)*(-1/phi)**w`` as an mpf."""
    if w < 0:
        raise ValueError("index must be nonnegative")
    with mp.workdps(dps):
        phi, a = _phi(), _alpha()
        return a * phi**w + (1 - a) * (-1 / phi) ** w


def binet_residual(w: int, dps: int = DPS):
    with mp.workdps(dps):
        return abs(binet(w, dps) - fibonacci(w))


@contextmanager
def _iv_precision(dps: int):
    saved = iv.dps
    iv.dps = dps
    try:
        yield
    finally:
        iv.dps = saved


def _iv_phi():
    return (1 + iv.sqrt(5)) / 2


def certified_log_gap(w: int, dps: int = 30):
    """Interval enclosing ``log2(F_w) - w*log2(phi)``."""
    with _iv_precision(dps):
        ln2 = iv.log(2)
        return iv.log(iv.mpf(fibonacci(w))) / ln2 - w * iv.log(_iv_phi()) / ln2


def certified_binet_excess(w: int, dps: int = 30):
    """Interval enclosing ``(alpha - 1) * (phi**w - (-1/phi)**w)``, i.e. ``F_w - phi**w``."""
    with _iv_precision(dps):
        s5 = iv.sqrt(5)
        phi = (1 + s5) / 2
        a = (4 + 2 * s5) / (5 + s5)
        return (a - 1) * (phi**w - (-1 / phi) ** w)


def lower_bound_check(w_max: int) -> bool:
    """Certify ``F_w >= phi**w`` for ``2 <= w <= w_max`` two independent ways."""
    if w_max < 2:
        raise ValueError("w_max must be at least 2")
    for w in range(2, w_max + 1):
        if not certified_log_gap(w).a > 0:
            return False
        if not certified_binet_excess(w).a > 0:
            return False
    return True


@dataclass(frozen=True)
class CapacityReport:
    w: int
    fib: int
    capacity: float
    limit_gap: float
    binet_check: float

    def to_dict(self) -> dict:
        return asdict(self)


def capacity_report(w: int) -> CapacityReport:
    fib = fibonacci(w)
    # residual needs more digits than F_w has
    dps = max(DPS, len(str(fib)) + 20)
    with mp.workdps(DPS):
        gap = capacity_mp(w) - log2_phi()
    return CapacityReport(
        w=w,
        fib=fib,
        capacity=capacity_1w(w),
        limit_gap=float(gap),
        binet_check=float(binet_residual(w, dps)),
    )


@dataclass(frozen=True)
class AASBounds:
    lower: float
    upper: float
    resolved: float
    w_max: int
    argmin_w: int

    @property
    def gap(self) -> float:
        return self.upper - self.lower

    def summary(self) -> str:
        return (
            f"AAS zero-error capacity: {self.lower:.12g} <= C_AAS <= "
            f"min_{{2<=w<={self.w_max}}} C_1,w = {self.upper:.12g} (at w={self.argmin_w}); "
            f"inf_{{w>=2}} C_1,w = lim_{{w->inf}} C_1,w = log2(phi), "
            f"hence C_AAS = log2(phi) = {self.resolved:.12g} exactly"
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["summary"] = self.summary()
        return d


def aas_sandwich(w_max: int) -> AASBounds:
    """Lower bound ``log2(phi)``, computed upper bound ``min C_1,w``.

    The numerical minimum over ``2..w_max`` is only an upper bound; the true
    infimum is the limit ``log2(phi)``, reported as ``resolved``.
    """
    if w_max < 2:
        raise ValueError("w_max must be at least 2")
    with mp.workdps(DPS):
        caps = {w: capacity_mp(w) for w in range(2, w_max + 1)}
        argmin = min(caps, key=lambda w: caps[w])
        lo = log2_phi()
        return AASBounds(lower=float(lo), upper=float(caps[argmin]), resolved=float(lo), w_max=w_max, argmin_w=argmin)


def min_gap(w_max: int, dps: int = DPS):
    """``min_{2<=w<=w_max} C_1,w - log2(phi)`` as an mpf."""
    with mp.workdps(dps):
        lo = log2_phi(dps)
        return min(capacity_mp(w, dps) for w in range(2, w_max + 1)) - lo

