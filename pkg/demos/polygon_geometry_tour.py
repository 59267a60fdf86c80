"""Tour of the regular-polygon formulas across the three geometries.

The same area means very different shapes depending on curvature: spherical
polygons trade area for angle excess, hyperbolic ones for angle deficit,
and only the Euclidean plane scales freely.
"""

import math

from isoperim import Geometry, RegularPolygon, angle_from_area, area_bounds, perimeter

print("Octant triangle on the sphere (three right angles):")
octant = RegularPolygon(Geometry.SPHERICAL, 3, math.pi / 2)
print(f"  angle = {octant.angle:.6f} rad, side = {octant.side:.6f}, "
      f"perimeter = {octant.perimeter:.6f} (= 3*pi/2)")
print()

print("Unit square in the plane:")
square = RegularPolygon(Geometry.EUCLIDEAN, 4, 1.0)
print(f"  angle = {square.angle:.6f} rad, side = {square.side:.6f}, "
      f"perimeter = {square.perimeter:.6f}")
print()

print("Hyperbolic triangle of area pi/2:")
tri = RegularPolygon(Geometry.HYPERBOLIC, 3, math.pi / 2)
print(f"  angle = {tri.angle:.6f} rad (pi/6), perimeter = {tri.perimeter:.6f}")
print(f"  closed form 3*arccosh(3+2*sqrt(3)) = {3 * math.acosh(3 + 2 * math.sqrt(3)):.6f}")
print()

print("Perimeter of the area-1 polygon as the side count grows:")
print(f"  {'n':>3} {'euclidean':>12} {'spherical':>12} {'hyperbolic':>12}")
for n in range(3, 13):
    row = [perimeter(RegularPolygon(g, n, 1.0))
           for g in (Geometry.EUCLIDEAN, Geometry.SPHERICAL, Geometry.HYPERBOLIC)]
    print(f"  {n:>3} {row[0]:>12.6f} {row[1]:>12.6f} {row[2]:>12.6f}")
print("(monotone decreasing: more sides approach the circle)")
print()

print("Hyperbolic area caps the polygon: perimeter blows up near the cap.")
lo, hi = area_bounds(Geometry.HYPERBOLIC, 3)
print(f"  admissible triangle areas: ({lo}, {hi:.6f})")
for frac in (0.5, 0.9, 0.99, 0.9999):
    area = frac * hi
    p = perimeter(RegularPolygon(Geometry.HYPERBOLIC, 3, area))
    angle = angle_from_area(Geometry.HYPERBOLIC, 3, area)
    print(f"  area = {area:9.6f} ({frac:>7.2%} of cap)  angle = {angle:.2e}  perimeter = {p:.3f}")
