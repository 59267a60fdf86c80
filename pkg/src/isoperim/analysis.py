"""Scalar kernels behind the split-versus-single perimeter comparisons.

The hyperbolic half-side kernel maps an interior angle x to the half side
length of the regular n-gon with that angle, so a polygon's perimeter is
2*n times the kernel value. Its first three derivatives, the two-split
objective and the equal-split margin drive the threshold computation; the
spherical analogue supplies the concavity argument for the spherical case.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

from .errors import ArgumentError, DomainError
from .geometry import MAX_SIDES, _clamped_acos, _clamped_acosh

SUM_TOL = 1e-12

_SQRT2 = math.sqrt(2.0)


def _check_sides(n: int) -> None:
    if not 3 <= n <= MAX_SIDES:
        raise DomainError(f"side count must be in [3, {MAX_SIDES}], got {n}")


@dataclass(frozen=True)
class AnalysisDomain:
    """Open interval (0, (n-2)*pi/n) of hyperbolic interior angles."""

    n: int

    def __post_init__(self) -> None:
        _check_sides(self.n)

    @property
    def lo(self) -> float:
        return 0.0

    @property
    def hi(self) -> float:
        return (self.n - 2) * math.pi / self.n

    def contains(self, x: float) -> bool:
        return self.lo < x < self.hi

    def require(self, x: float) -> None:
        if not self.contains(x):
            raise DomainError(
                f"angle must lie in the open interval ({self.lo}, {self.hi}), got {x}"
            )


@dataclass(frozen=True)
class SplitFunctionParams:
    """Conserved angle sum c of a two-polygon split at fixed side count n.

    Splitting a polygon of interior angle t into two pieces with angles
    t1 + t2 = c conserves total area exactly when c = t + (n-2)*pi/n.
    """

    n: int
    c: float

    def __post_init__(self) -> None:
        _check_sides(self.n)
        flat = (self.n - 2) * math.pi / self.n
        if not flat < self.c < 2.0 * flat:
            raise DomainError(
                f"angle sum must lie in ({flat}, {2.0 * flat}), got {self.c}"
            )

    @property
    def lo(self) -> float:
        return self.c - (self.n - 2) * math.pi / self.n

    @property
    def hi(self) -> float:
        return (self.n - 2) * math.pi / self.n

    def require(self, x: float) -> None:
        if not self.lo < x < self.hi:
            raise DomainError(
                f"split angle must lie in the open interval ({self.lo}, {self.hi}), got {x}"
            )


def half_side(n: int, x: float) -> float:
    """Hyperbolic half side length arccosh(cos(pi/n)/sin(x/2)) at interior angle x."""
    AnalysisDomain(n).require(x)
    return _clamped_acosh(math.cos(math.pi / n) / math.sin(x / 2.0))


def half_side_d1(n: int, x: float) -> float:
    """First derivative of the half-side kernel; negative on the whole domain."""
    AnalysisDomain(n).require(x)
    d = math.cos(2.0 * math.pi / n) + math.cos(x)
    if d <= 0.0:
        return -math.inf
    return -(math.cos(math.pi / n) / _SQRT2) * (1.0 / math.tan(x / 2.0)) / math.sqrt(d)


def half_side_d2(n: int, x: float) -> float:
    """Second derivative; crosses zero exactly once, at the inflection point."""
    AnalysisDomain(n).require(x)
    d = math.cos(2.0 * math.pi / n) + math.cos(x)
    if d <= 0.0:
        return -math.inf
    half = x / 2.0
    csc2 = 1.0 / (math.sin(half) ** 2)
    cot = 1.0 / math.tan(half)
    bracket = csc2 / math.sqrt(d) - math.sin(x) * cot / d**1.5
    return (math.cos(math.pi / n) / (2.0 * _SQRT2)) * bracket


def half_side_d3(n: int, x: float) -> float:
    """Third derivative; strictly negative, so the first derivative is concave."""
    AnalysisDomain(n).require(x)
    q = math.cos(2.0 * math.pi / n)
    cx = math.cos(x)
    d = q + cx
    if d <= 0.0:
        return -math.inf
    half = x / 2.0
    csc2 = 1.0 / (math.sin(half) ** 2)
    cot = 1.0 / math.tan(half)
    bracket = (
        -cot * csc2 * (2.0 * q + 3.0 * cx - 1.0) / d**1.5
        - math.sin(x) * (cx + 3.0 - 2.0 * q) / d**2.5
    )
    return (math.cos(math.pi / n) / (4.0 * _SQRT2)) * bracket


def spherical_half_side(n: int, x: float) -> float:
    """Spherical half side arccos(cos(pi/n)/sin(x/2)); the degenerate angle is allowed."""
    _check_sides(n)
    flat = (n - 2) * math.pi / n
    if not flat <= x <= math.pi:
        raise DomainError(f"angle must lie in [{flat}, {math.pi}], got {x}")
    return _clamped_acos(math.cos(math.pi / n) / math.sin(x / 2.0))


def spherical_half_side_d2(n: int, x: float) -> float:
    """Second derivative of the spherical half side; negative (the kernel is concave)."""
    _check_sides(n)
    flat = (n - 2) * math.pi / n
    if not flat <= x <= math.pi:
        raise DomainError(f"angle must lie in [{flat}, {math.pi}], got {x}")
    cpn = math.cos(math.pi / n)
    half = x / 2.0
    csc = 1.0 / math.sin(half)
    cot = 1.0 / math.tan(half)
    t = 1.0 - (cpn * csc) ** 2
    if t <= 0.0:
        # the kernel has a square-root singularity at the degenerate angle
        return -math.inf
    root = math.sqrt(t)
    return (
        -cpn * csc**3 / (4.0 * root)
        - cpn * cot**2 * csc / (4.0 * root)
        - cpn**3 * cot**2 * csc**3 / (4.0 * t * root)
    )


def split_objective(params: SplitFunctionParams, x: float) -> float:
    """Combined half sides of a two-polygon split with angle sum params.c.

    Symmetric about c/2; total split perimeter is 2*n times this value.
    """
    params.require(x)
    return half_side(params.n, x) + half_side(params.n, params.c - x)


def equal_split_margin(n: int, x: float) -> float:
    """Equal-split half-perimeter excess 2*K((x + flat)/2) - K(x) at angle x.

    Positive means the single polygon beats the equal two-way split; the
    unique root of this margin is the critical angle.
    """
    AnalysisDomain(n).require(x)
    inner = x / 2.0 + math.pi / 2.0 - math.pi / n
    return 2.0 * half_side(n, inner) - half_side(n, x)


def check_concave_split(
    f: Callable[[float], float], a: float, b: float, c: float, d: float
) -> bool:
    """Whether f(c) + f(d) strictly exceeds f(a) + f(b) for a conserved sum.

    Requires a + b = c + d (within SUM_TOL); for strictly concave f with
    c, d interior to [a, b] the answer is always True.
    """
    if abs((a + b) - (c + d)) > SUM_TOL:
        raise ArgumentError(f"endpoint sums differ: {a + b} vs {c + d}")
    return f(c) + f(d) > f(a) + f(b)


def central_difference(f: Callable[[float], float], x: float, h: float = 1e-6) -> float:
    """Symmetric finite-difference estimate of f'(x) with step h."""
    return (f(x + h) - f(x - h)) / (2.0 * h)
