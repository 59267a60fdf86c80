"""Split-or-not decisions on both sides of the critical angle.

For a run of interior angles around the n=3 threshold, compare the single
triangle against the equal two-way split analytically, then cross-check the
winner with an exhaustive grid search over partitions into up to three
parts. In the flat and spherical planes the single polygon always wins, so
those verdicts are shown once for contrast.
"""

import math

from isoperim import (
    Geometry,
    Verdict,
    assess_two_split,
    brute_force_min,
    critical_angle,
)

n = 3
threshold = critical_angle(n)
print(f"critical angle for n={n}: {threshold.critical_angle:.9f} rad")
print(f"single polygon stays optimal up to area {threshold.max_area:.6f}")
print()

print(f"{'angle':>8} {'single':>10} {'eq split':>10} {'verdict':>22} {'grid best':>10}")
for shift in (-0.15, -0.05, -0.01, 0.0, 0.01, 0.05, 0.15):
    theta = threshold.critical_angle + shift
    area = (n - 2) * math.pi - n * theta
    verdict = assess_two_split(Geometry.HYPERBOLIC, n, area)
    best, _ = brute_force_min(Geometry.HYPERBOLIC, n, area, 3, 500)
    label = f"k={best.k}"
    if best.k == 2:
        label += " (equal)" if abs(best.areas[0] - area / 2) <= area / 500 else " (uneven)"
    print(f"{theta:>8.4f} {verdict.single_perimeter:>10.4f} "
          f"{verdict.config_perimeter:>10.4f} {verdict.verdict.value:>22} {label:>10}")

print()
print("flat and spherical planes for contrast (the single polygon always wins):")
flat = assess_two_split(Geometry.EUCLIDEAN, 4, 25.0)
print(f"  euclidean n=4 area 25: single {flat.single_perimeter:.4f} "
      f"vs equal split {flat.config_perimeter:.4f} -> {flat.verdict.value}")
sph = assess_two_split(Geometry.SPHERICAL, 3, math.pi / 2)
print(f"  spherical n=3 area pi/2: single {sph.single_perimeter:.4f} "
      f"vs equal split {sph.config_perimeter:.4f} -> {sph.verdict.value}")

assert flat.verdict is Verdict.SINGLE_OPTIMAL_STRICT
assert sph.verdict is Verdict.SINGLE_OPTIMAL_STRICT
