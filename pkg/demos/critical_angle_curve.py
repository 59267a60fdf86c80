"""The critical interior angle and the area bound it implies, per side count.

A single hyperbolic n-gon minimizes total perimeter among all same-area
configurations exactly when its interior angle is at least the critical
angle, i.e. when its area is at most the listed bound. Writes a PNG of the
curves when matplotlib is importable.
"""

import math

from isoperim import critical_angle

rows = [critical_angle(n) for n in range(3, 31)]

print(f"{'n':>3} {'critical angle':>15} {'inflection':>12} {'max area':>10} {'area cap':>10}")
for r in rows:
    cap = (r.n - 2) * math.pi
    print(f"{r.n:>3} {r.critical_angle:>15.9f} {r.inflection:>12.6f} "
          f"{r.max_area:>10.4f} {cap:>10.4f}")

print()
share = [r.max_area / ((r.n - 2) * math.pi) for r in rows]
print("share of the admissible area that stays single-optimal:")
print(f"  n=3: {share[0]:.3f}   n=10: {share[7]:.3f}   n=30: {share[-1]:.3f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not available; skipping the plot")
else:
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    ns = [r.n for r in rows]
    ax1.plot(ns, [r.critical_angle for r in rows], "o-", label="critical angle")
    ax1.plot(ns, [r.inflection for r in rows], "s--", label="inflection point")
    ax1.plot(ns, [(n - 2) * math.pi / n for n in ns], ":", label="angle cap")
    ax1.set_xlabel("sides")
    ax1.set_ylabel("radians")
    ax1.legend()
    ax2.plot(ns, [r.max_area for r in rows], "o-", label="single-optimal bound")
    ax2.plot(ns, [(n - 2) * math.pi for n in ns], ":", label="area cap")
    ax2.set_xlabel("sides")
    ax2.set_ylabel("area")
    ax2.legend()
    fig.tight_layout()
    fig.savefig("critical_angle_curve.png", dpi=120)
    print("wrote critical_angle_curve.png")
