"""The eight-point configuration that forces monochromatic triangles.

Eight labeled points tied together by six equilateral triangles (two each
at sides a, b, c) have a striking property: once one equilateral triangle
is monochromatic, EVERY two-coloring of the remaining five points contains
a monochromatic triangle with side multiset {a, b, c} -- and conversely,
a monochromatic (a, b, c) triangle forces a monochromatic equilateral one.
Thirty-two cases each, checked by brute force.
"""

from monotri.forcing import (LABELS, build_config, classify_triples,
                             forcing_check_i, forcing_check_ii)

a, b, c = 2.0, 2.0, 3.0
cfg = build_config(a, b, c)
print(f"configuration for sides ({a}, {b}, {c}):")
for label in LABELS:
    p = cfg.points[label]
    print(f"  {label:>2}: ({p.x:+.4f}, {p.y:+.4f})")
print("worst constraint deviation:", max(cfg.constraint_errors()))

cls = classify_triples(cfg)
print(f"{len(cls.triples)} point triples classified;",
      f"{len(cls.matching((a, b, c)))} carry the target multiset")

vi = forcing_check_i(a, b, c)
print(f"part i  (A,B,C black forces an (a,b,c) triple): verified={vi.verified} "
      f"over {vi.tested_colorings} colorings")
sample = vi.forced_triples_log[-1]
print("  e.g. all-white free points force", sample["triple"],
      "in", sample["color"])

vii = forcing_check_ii(a, b, c)
print(f"part ii (B,A,D white forces an equilateral):   verified={vii.verified} "
      f"over {vii.tested_colorings} colorings")
