"""Probing the boundary structure of a coloring.

Around any well-behaved point of a boundary that admits no interior
monochromatic unit triangle, the unit circle meets the boundary in exactly
six points forming a regular hexagon, on pieces parallel to the host piece
with a fixed orientation pattern. Corners sharper than 2*pi/3 are
incompatible with that structure; the angle audit lists any such corner.
"""

import math

from monotri import Point
from monotri.colorings import (HalfPlaneColoring, StripColoring, ZebraColoring,
                               ZebraProfile, l_shape_coloring)
from monotri.scan import boundary_angle_audit, hexagon_probe

zigzag = ZebraColoring(ZebraProfile(((0.0, 0.0), (0.5, 0.1), (1.0, 0.0))))

# Hexagon probe on the zigzag boundary.
A = zigzag.curve_point(0, 0.2)
probe = hexagon_probe(zigzag, A)
print(f"zigzag point ({A.x:.3f}, {A.y:.3f}): feasible={probe.feasible}, "
      f"regular={probe.regular}, deviation={probe.max_deviation:.2e}")
for i, p in enumerate(probe.points):
    print(f"  P{i}: ({p.x:+.4f}, {p.y:+.4f})")

# The strip boundary gives the textbook hexagon.
probe = hexagon_probe(StripColoring(), Point(0, 0))
print("strip hexagon points:",
      sorted((round(p.x, 3), round(p.y, 3)) for p in probe.points))

# A half-plane boundary has just two circle crossings: no hexagon.
probe = hexagon_probe(HalfPlaneColoring(), Point(0, 0))
print(f"half-plane: {len(probe.points)} intersections, regular={probe.regular}")

# Angle audits: zigzag corners are obtuse enough, the L corner is not.
print("zigzag corners at or under 2*pi/3:", boundary_angle_audit(zigzag))
entries = boundary_angle_audit(l_shape_coloring())
for e in entries:
    print(f"L-shape corner at ({e.vertex.x}, {e.vertex.y}): "
          f"{e.convex_angle:.4f} rad <= {2 * math.pi / 3:.4f}")
