"""Critical angle and inflection point of the half-side kernel.

For each side count n the second derivative of the half-side kernel has a
single zero (the inflection point), and the equal-split margin has a single
root below it (the critical angle). Both are located by plain bisection:
the functions are cheap, the brackets are certain, and bisection converges
unconditionally.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache

from .analysis import AnalysisDomain, equal_split_margin, half_side_d2
from .errors import BracketError, ConvergenceError

MAX_ITERATIONS = 200
WIDTH_TOL = 1e-15
RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class ThresholdResult:
    """Critical angle for one side count, with solver diagnostics.

    Splitting helps if and only if the interior angle is below
    `critical_angle`; equivalently the total area exceeds `max_area`.
    """

    n: int
    critical_angle: float
    inflection: float
    max_area: float
    iterations: int
    residual: float


def _bisect(
    f: Callable[[float], float], lo: float, hi: float, tol: float
) -> tuple[float, int, float]:
    """Bisection core; returns (root, iterations, |f(root)|)."""
    flo = f(lo)
    if flo == 0.0:
        return lo, 0, 0.0
    fhi = f(hi)
    if fhi == 0.0:
        return hi, 0, 0.0
    if math.copysign(1.0, flo) == math.copysign(1.0, fhi):
        raise BracketError(f"no sign change on [{lo}, {hi}]: f={flo} and {fhi}")
    for i in range(1, MAX_ITERATIONS + 1):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if abs(fmid) <= tol or (hi - lo) <= WIDTH_TOL:
            return mid, i, abs(fmid)
        if math.copysign(1.0, fmid) == math.copysign(1.0, flo):
            lo, flo = mid, fmid
        else:
            hi = mid
    raise ConvergenceError(f"bisection did not converge in {MAX_ITERATIONS} iterations")


def find_root_bisect(
    f: Callable[[float], float], lo: float, hi: float, tol: float
) -> float:
    """Root of f on [lo, hi] by bisection.

    Stops once |f| <= tol or the interval width falls below WIDTH_TOL.
    The endpoints must bracket a sign change.
    """
    if not lo < hi:
        raise BracketError(f"invalid interval: lo={lo} must be < hi={hi}")
    if not tol > 0.0:
        raise BracketError(f"tolerance must be positive, got {tol}")
    root, _, _ = _bisect(f, lo, hi, tol)
    return root


@lru_cache(maxsize=None)
def inflection_point(n: int) -> float:
    """Unique zero of the kernel's second derivative on its angle domain."""
    dom = AnalysisDomain(n)
    hi = dom.hi

    x_pos = hi / 2.0
    while not half_side_d2(n, x_pos) > 0.0:
        x_pos /= 2.0
        if x_pos < 1e-15:
            raise BracketError(f"no positive value of the second derivative for n={n}")
    offset = hi / 4.0
    while not half_side_d2(n, hi - offset) < 0.0:
        offset /= 2.0
        if offset < 1e-15:
            raise BracketError(f"no negative value of the second derivative for n={n}")

    root, _, residual = _bisect(lambda x: half_side_d2(n, x), x_pos, hi - offset, 0.0)
    if residual > RESIDUAL_TOL:
        raise ConvergenceError(
            f"inflection residual {residual} exceeds {RESIDUAL_TOL} for n={n}"
        )
    return root


@lru_cache(maxsize=None)
def critical_angle(n: int) -> ThresholdResult:
    """Critical interior angle: the unique root of the equal-split margin.

    Bracket construction: the margin is positive at the inflection point,
    and halving down from there must reach a negative value.
    """
    x0 = inflection_point(n)
    if not equal_split_margin(n, x0) > 0.0:
        raise BracketError(f"margin not positive at the inflection point for n={n}")
    lo = x0 / 2.0
    while not equal_split_margin(n, lo) < 0.0:
        lo /= 2.0
        if lo < 1e-15:
            raise BracketError(f"margin never negative above 1e-15 for n={n}")

    root, iterations, residual = _bisect(lambda x: equal_split_margin(n, x), lo, x0, 0.0)
    if residual > RESIDUAL_TOL:
        raise ConvergenceError(
            f"critical-angle residual {residual} exceeds {RESIDUAL_TOL} for n={n}"
        )
    max_area = (n - 2) * math.pi - n * root
    return ThresholdResult(
        n=n,
        critical_angle=root,
        inflection=x0,
        max_area=max_area,
        iterations=iterations,
        residual=residual,
    )
