"""Two hyperbolic triangles can have less total boundary than one.

Fix the total area at pi - 3*eps and compare the thin single triangle with
interior angle eps against the pair with areas pi/2 and pi/2 - 3*eps. The
pair's total perimeter stays below 6*arccosh(3+2*sqrt(3)) no matter what,
while the single triangle's perimeter diverges as eps shrinks, so for small
eps the disconnected configuration wins.
"""

import math

from isoperim import counterexample_triangles

bound = 6 * math.acosh(3 + 2 * math.sqrt(3))
print(f"pair perimeter is always <= {bound:.6f}")
print()
print(f"{'eps':>8} {'single':>12} {'pair':>12} {'margin':>12}  winner")
for eps in (0.5, 0.3, 0.2, 0.15, 0.1, 0.05, 0.01, 0.001):
    r = counterexample_triangles(eps)
    winner = "pair" if r.margin > 0 else "single"
    print(f"{eps:>8} {r.single_perimeter:>12.6f} {r.split_perimeter:>12.6f} "
          f"{r.margin:>+12.6f}  {winner}")

print()
print("The crossover sits where the margin changes sign; beyond it the")
print("single polygon is no longer the cheapest way to enclose the area.")
