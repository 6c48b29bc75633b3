"""Almost-unit triangles exist in both color classes of the strip coloring.

The strip coloring avoids exact unit triangles, but squeeze the tolerance
and both colors give in: for every eps > 0, each class contains a triangle
with all three side lengths within eps of 1. The search walks the unit
circle around a point of one color that sits within eps of a point of the
other color; any same-colored sample pair at the right chord length closes
such a triangle with the nearby off-circle point.
"""

from monotri.colorings import StripColoring
from monotri.scan import find_almost_unit, _triangle_sides

strips = StripColoring(1.0)

for eps in (0.2, 0.1, 0.05, 0.02):
    pair = find_almost_unit(strips, eps, tries=10 ** 5, seed=17)
    assert pair is not None
    bs = _triangle_sides(pair.black_triangle)
    ws = _triangle_sides(pair.white_triangle)
    print(f"eps = {eps}:")
    print(f"  black sides: {[round(s, 4) for s in bs]}")
    print(f"  white sides: {[round(s, 4) for s in ws]}")

# On an all-black plane the white class has nothing to offer.
from monotri.colorings import all_black_coloring

print("all-black plane:", find_almost_unit(all_black_coloring(), 0.1,
                                           tries=2000, seed=1))
