"""Unit triangles with one vertex on each of three lines.

Three lines in general position admit only finitely many unit triangles
with one labeled vertex per line; the single exception is three concurrent
lines at mutual angles pi/3, which admit a sliding continuum. The closed
form reduces to a quadratic whose leading coefficient is positive definite;
an independent pose-sweep oracle cross-checks every answer.
"""

import math

from monotri.lines import Line, solve_unit_triangles, sweep_oracle

INV_SQRT3 = 1.0 / math.sqrt(3.0)

# Two horizontal lines and the y-axis: exactly two placements.
q1, q2, q3 = Line.slope_intercept(0, 0), Line.slope_intercept(0, 0), Line.vertical(0)
sol = solve_unit_triangles(q1, q2, q3)
print(f"y=0, y=0, x=0 -> {sol.kind}, {len(sol.triangles)} triangles:")
for tri in sol.triangles:
    print("  ", [(round(v.x, 4), round(v.y, 4)) for v in tri])

# Lines too far apart: a finite answer can be empty.
sol = solve_unit_triangles(Line.slope_intercept(0, 0), Line.slope_intercept(0, 10),
                           Line.vertical(0))
print(f"y=0, y=10, x=0 -> {sol.kind}, {len(sol.triangles)} triangles")

# The exceptional pencil: slopes -+1/sqrt(3) through a common point.
sol = solve_unit_triangles(Line.slope_intercept(-INV_SQRT3, 0),
                           Line.slope_intercept(INV_SQRT3, 0), Line.vertical(0))
print(f"pencil at pairwise pi/3 -> {sol.kind}")
many = sweep_oracle(Line.slope_intercept(-INV_SQRT3, 0),
                    Line.slope_intercept(INV_SQRT3, 0), Line.vertical(0),
                    angle_step=1e-3)
print(f"sweep oracle sees the continuum: {len(many)} sampled placements")

# A generic instance, cross-checked against the sweep.
lines = (Line.slope_intercept(0.3, 0.2), Line.slope_intercept(-1.1, 0.5),
         Line.vertical(0.7))
sol = solve_unit_triangles(*lines)
oracle = sweep_oracle(*lines, angle_step=1e-3)
print(f"generic instance: solver {len(sol.triangles)}, sweep {len(oracle)} "
      f"(branch counts: {dict(sol.branch_counts)})")
