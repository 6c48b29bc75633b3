"""Search and verification over colorings.

Grid scans for monochromatic congruent copies of a triangle spec, avoidance
counts over a full placement grid, a guided search for almost-unit triangles
in both color classes, and two boundary diagnostics: the six-point hexagon
probe around a feasible boundary point and the convex-angle audit of
boundary vertices.

A placement is a pose index (angle index, x index, y index) applied to the
canonical triangle of :func:`monotri.geom.place_triangle`; scans iterate in
lexicographic pose order so results are deterministic and the first witness
found is the least one. A scan that exhausts its grid is a sampling verdict,
never a proof of avoidance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .geom import (
    DEFAULT_TOL,
    TWO_PI,
    Circle,
    GeometryError,
    Point,
    Region,
    RigidMotion,
    TriangleSpec,
    circle_polyline_intersections,
    distance,
    place_triangle,
)
from .colorings import BoundaryPiece, Color, Coloring, PolygonalColoring


class NotOnBoundary(GeometryError):
    """The probed point is farther than the tolerance from every boundary piece."""


@dataclass(frozen=True)
class ScanGrid:
    """Placement grid: poses (angle k, x i, y j) over a region.

    Angles are the ``angle_count`` uniform values in [0, 2*pi); translations
    run over the region at ``position_step`` spacing, region corners
    included.
    """

    region: Region
    position_step: float = 0.01
    angle_count: int = 720

    def __post_init__(self):
        if not (self.position_step > 0.0):
            raise GeometryError("position_step must be positive")
        if self.angle_count < 1:
            raise GeometryError("angle_count must be at least 1")

    def angles(self) -> np.ndarray:
        return np.arange(self.angle_count) * (TWO_PI / self.angle_count)

    def xs(self) -> np.ndarray:
        n = int(math.floor((self.region.x1 - self.region.x0) / self.position_step + 1e-12)) + 1
        return self.region.x0 + np.arange(n) * self.position_step

    def ys(self) -> np.ndarray:
        n = int(math.floor((self.region.y1 - self.region.y0) / self.position_step + 1e-12)) + 1
        return self.region.y0 + np.arange(n) * self.position_step

    def placements(self) -> int:
        return self.angle_count * len(self.xs()) * len(self.ys())


@dataclass(frozen=True)
class ScanWitness:
    """A verified monochromatic placement: pose, vertices, color, margin.

    ``margin`` is the distance from the nearest vertex to the coloring
    boundary, recomputed exactly per boundary piece.
    """

    motion: RigidMotion
    vertices: tuple[Point, Point, Point]
    color: Color
    margin: float

    def to_dict(self, spec: TriangleSpec) -> dict:
        return {
            "spec": [spec.a, spec.b, spec.c],
            "angle": self.motion.angle,
            "translation": [self.motion.translation[0], self.motion.translation[1]],
            "vertices": [[v.x, v.y] for v in self.vertices],
            "color": self.color.value,
            "margin": self.margin,
        }


@dataclass(frozen=True)
class AvoidanceReport:
    placements_tested: int
    monochromatic_count: int
    near_misses: int
    monochromatic_examples: tuple[tuple[int, float, float], ...] = ()
    near_miss_examples: tuple[tuple[int, float, float], ...] = ()

    def to_dict(self) -> dict:
        return {
            "placements_tested": self.placements_tested,
            "monochromatic_count": self.monochromatic_count,
            "near_misses": self.near_misses,
            "monochromatic_examples": [list(e) for e in self.monochromatic_examples],
            "near_miss_examples": [list(e) for e in self.near_miss_examples],
        }


def _rotated_offsets(spec: TriangleSpec, angle: float) -> tuple[tuple[float, float], ...]:
    """Vertex offsets of the canonical triangle under a pure rotation."""
    base = place_triangle(spec, RigidMotion(0.0))
    c, s = math.cos(angle), math.sin(angle)
    return tuple((c * p.x - s * p.y, s * p.x + c * p.y) for p in base)


def margin_of(coloring: Coloring, points: Sequence[Point]) -> float:
    """Distance from the nearest of ``points`` to the coloring boundary."""
    return min(coloring.boundary_distance(p) for p in points)


def find_monochromatic_copy(coloring: Coloring, spec: TriangleSpec, grid: ScanGrid,
                            min_margin: float = 0.0,
                            tol: float = DEFAULT_TOL) -> Optional[ScanWitness]:
    """First placement (in pose order) that is monochromatic with margin.

    Returns None when the grid is exhausted -- a sampling verdict only; no
    claim of avoidance is implied. Vertices may leave the grid region; the
    region constrains translations, not the triangle.
    """
    xs, ys = grid.xs(), grid.ys()
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    X, Y = X.ravel(), Y.ravel()
    ny = len(ys)
    for angle in grid.angles():
        offs = _rotated_offsets(spec, angle)
        masks = []
        for ox, oy in offs:
            masks.append(coloring.black_mask(X + ox, Y + oy, tol))
        mono = (masks[0] == masks[1]) & (masks[1] == masks[2])
        if not mono.any():
            continue
        for flat in np.flatnonzero(mono):
            i, j = divmod(int(flat), ny)
            t = (float(xs[i]), float(ys[j]))
            motion = RigidMotion(float(angle), t)
            verts = place_triangle(spec, motion)
            margin = margin_of(coloring, verts)
            if margin >= min_margin:
                color = Color.BLACK if bool(masks[0][flat]) else Color.WHITE
                return ScanWitness(motion, verts, color, margin)
    return None


def avoidance_scan(coloring: Coloring, spec: TriangleSpec, grid: ScanGrid,
                   tol: float = DEFAULT_TOL, max_examples: int = 8) -> AvoidanceReport:
    """Count monochromatic placements over the whole grid.

    Boundary points are colored by the coloring's own rule. A near miss is
    a non-monochromatic placement with two same-colored vertices whose
    third vertex sits within tolerance of the boundary.
    """
    xs, ys = grid.xs(), grid.ys()
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    X, Y = X.ravel(), Y.ravel()
    ny = len(ys)
    mono_count = 0
    near_count = 0
    mono_ex: list[tuple[int, float, float]] = []
    near_ex: list[tuple[int, float, float]] = []
    for k, angle in enumerate(grid.angles()):
        offs = _rotated_offsets(spec, angle)
        blacks = []
        bounds = []
        for ox, oy in offs:
            vx, vy = X + ox, Y + oy
            blacks.append(coloring.black_mask(vx, vy, tol))
            bounds.append(coloring.boundary_mask(vx, vy, tol))
        b1, b2, b3 = blacks
        mono = (b1 == b2) & (b2 == b3)
        near = (~mono) & (((b1 == b2) & bounds[2]) | ((b1 == b3) & bounds[1])
                          | ((b2 == b3) & bounds[0]))
        mono_count += int(mono.sum())
        near_count += int(near.sum())
        for mask, acc in ((mono, mono_ex), (near, near_ex)):
            if mask.any() and len(acc) < max_examples:
                for flat in np.flatnonzero(mask)[:max_examples - len(acc)]:
                    i, j = divmod(int(flat), ny)
                    acc.append((k, float(xs[i]), float(ys[j])))
    return AvoidanceReport(grid.placements(), mono_count, near_count,
                           tuple(mono_ex), tuple(near_ex))


def verify_witness(coloring: Coloring, spec: TriangleSpec, witness: ScanWitness,
                   tol: float = DEFAULT_TOL) -> bool:
    """Independent re-check of a witness: pose, side lengths, colors, margin."""
    v1, v2, v3 = witness.vertices
    placed = place_triangle(spec, witness.motion)
    scale = 1.0 + max(spec.sides())
    if any(distance(p, q) > tol * scale for p, q in zip(placed, witness.vertices)):
        return False
    sides = (distance(v1, v2), distance(v2, v3), distance(v3, v1))
    for got, want in zip(sides, spec.sides()):
        if abs(got - want) > tol * scale:
            return False
    colors = [coloring.color_at(v, tol) for v in witness.vertices]
    if any(c is not witness.color for c in colors):
        return False
    return abs(margin_of(coloring, witness.vertices) - witness.margin) <= tol * scale


# ---------------------------------------------------------------------------
# Almost-unit triangles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AlmostUnitPair:
    """One black and one white triangle, all side lengths in [1-eps, 1+eps]."""

    black_triangle: tuple[Point, Point, Point]
    white_triangle: tuple[Point, Point, Point]
    epsilon: float

    def to_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "black": [[v.x, v.y] for v in self.black_triangle],
            "white": [[v.x, v.y] for v in self.white_triangle],
        }


def _triangle_sides(tri: Sequence[Point]) -> tuple[float, float, float]:
    return (distance(tri[0], tri[1]), distance(tri[1], tri[2]),
            distance(tri[2], tri[0]))


def _valid_almost_unit(coloring: Coloring, tri: Sequence[Point], color: Color,
                       epsilon: float, half_square: float = 3.0,
                       tol: float = DEFAULT_TOL) -> bool:
    if any(abs(v.x) > half_square or abs(v.y) > half_square for v in tri):
        return False
    if any(not (1.0 - epsilon <= s <= 1.0 + epsilon) for s in _triangle_sides(tri)):
        return False
    return all(coloring.color_at(v, tol) is color for v in tri)


def find_almost_unit(coloring: Coloring, epsilon: float, tries: int = 10 ** 6,
                     seed: int = 0, tol: float = DEFAULT_TOL) -> Optional[AlmostUnitPair]:
    """Search both color classes for triangles with sides in [1-eps, 1+eps].

    Strategy: locate an opposite-colored pair R (black), S (white) closer
    than eps inside the square [-1, 1]^2 by bisection on random segments,
    then walk the unit circles around S and R at angular step eps/4. Any
    same-colored sample pair whose chord falls in [1-eps, 1+eps] closes a
    triangle with R or S. Uniform random unit triangles serve as a fallback
    when the guided walk stalls. Returns None once the try budget is spent
    with a class still missing -- which is the expected outcome exactly when
    that class cannot contain such a triangle.
    """
    if not (0.0 < epsilon < 1.0):
        raise GeometryError("epsilon must lie strictly between 0 and 1")
    rng = np.random.default_rng(seed)
    budget = tries
    found: dict[Color, tuple[Point, Point, Point]] = {}

    def consume(n: int = 1) -> bool:
        nonlocal budget
        budget -= n
        return budget > 0

    # Phase 1: an opposite-colored pair R, S with |R - S| < eps inside Q(1).
    pair: Optional[tuple[Point, Point]] = None  # (black, white)
    black_pt = white_pt = None
    while budget > 0 and pair is None:
        consume()
        q = Point(float(rng.uniform(-1, 1)), float(rng.uniform(-1, 1)))
        if coloring.color_at(q, tol) is Color.BLACK:
            black_pt = black_pt or q
        else:
            white_pt = white_pt or q
        if black_pt is not None and white_pt is not None:
            b, w = black_pt, white_pt
            while distance(b, w) >= epsilon / 8.0 and consume():
                mid = Point(0.5 * (b.x + w.x), 0.5 * (b.y + w.y))
                if coloring.color_at(mid, tol) is Color.BLACK:
                    b = mid
                else:
                    w = mid
            pair = (b, w)

    if pair is not None:
        black_ref, white_ref = pair
        step = epsilon / 4.0
        n = max(int(math.ceil(TWO_PI / step)), 12)
        thetas = np.arange(n) * (TWO_PI / n)
        # chord between samples i and i+off is 2 sin(pi off / n)
        lo_chord, hi_chord = 1.0 - 0.75 * epsilon, 1.0 + 0.75 * epsilon
        off_lo = max(int(math.ceil(math.asin(lo_chord / 2.0) * n / math.pi)), 1)
        off_hi = int(math.floor(math.asin(min(hi_chord / 2.0, 1.0)) * n / math.pi))
        for center in (white_ref, black_ref):
            if len(found) == 2 or budget <= 0:
                break
            kx = center.x + np.cos(thetas)
            ky = center.y + np.sin(thetas)
            blacks = coloring.black_mask(kx, ky, tol)
            consume(n)
            for off in range(off_lo, off_hi + 1):
                if len(found) == 2:
                    break
                same = blacks == np.roll(blacks, -off)
                for i in np.flatnonzero(same):
                    color = Color.BLACK if bool(blacks[i]) else Color.WHITE
                    if color in found:
                        continue
                    j = (int(i) + off) % n
                    apex = black_ref if color is Color.BLACK else white_ref
                    tri = (apex, Point(float(kx[i]), float(ky[i])),
                           Point(float(kx[j]), float(ky[j])))
                    consume()
                    if _valid_almost_unit(coloring, tri, color, epsilon, tol=tol):
                        found[color] = tri
                        if len(found) == 2:
                            break

    # Phase 3: random exact-unit triangles anywhere in Q(2).
    while len(found) < 2 and budget > 0:
        consume()
        cx, cy = rng.uniform(-2, 2), rng.uniform(-2, 2)
        ang = rng.uniform(0.0, TWO_PI)
        motion = RigidMotion(float(ang), (float(cx), float(cy)))
        tri = place_triangle(TriangleSpec(1.0, 1.0, 1.0), motion)
        colors = {coloring.color_at(v, tol) for v in tri}
        if len(colors) == 1:
            color = colors.pop()
            if color not in found and _valid_almost_unit(coloring, tri, color,
                                                         epsilon, tol=tol):
                found[color] = tri

    if len(found) == 2:
        return AlmostUnitPair(found[Color.BLACK], found[Color.WHITE], epsilon)
    return None


# ---------------------------------------------------------------------------
# Boundary structure probes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HexagonProbe:
    """Unit-circle intersections with the boundary around a boundary point.

    ``regular`` is true iff there are exactly six transversal intersections
    at consecutive angles pi/3 apart (within ``max_deviation``), lying on
    pieces parallel to the host piece with the expected orientation pattern:
    the two hits nearest the host direction share its orientation, the other
    four oppose it. ``alpha`` is the frame angle of the first hit, in
    (-pi/6, pi/6], measured from the host piece direction.
    """

    center: Point
    alpha: Optional[float]
    points: tuple[Point, ...]
    regular: bool
    feasible: bool
    max_deviation: float = math.inf

    def to_dict(self) -> dict:
        return {
            "center": [self.center.x, self.center.y],
            "alpha": self.alpha,
            "points": [[p.x, p.y] for p in self.points],
            "regular": self.regular,
            "feasible": self.feasible,
            "max_deviation": None if math.isinf(self.max_deviation) else self.max_deviation,
        }


def _boundary_vertices(pieces: Sequence[BoundaryPiece], tol: float) -> list[tuple[Point, list[int]]]:
    """Endpoint clusters where at least two pieces meet (true corners).

    Clipped chain ends and ray representatives have degree one there and are
    not vertices.
    """
    ends: list[tuple[Point, int]] = []
    for idx, pc in enumerate(pieces):
        if not pc.ray_start:
            ends.append((pc.seg.p, idx))
        if not pc.ray_end:
            ends.append((pc.seg.q, idx))
    clusters: list[tuple[Point, list[int]]] = []
    for p, idx in ends:
        for q, members in clusters:
            if distance(p, q) <= 10.0 * tol:
                members.append(idx)
                break
        else:
            clusters.append((p, [idx]))
    return [(p, members) for p, members in clusters if len(members) >= 2]


def default_probe_window(A: Point, reach: float = 2.25) -> Region:
    return Region(A.x - reach, A.y - reach, A.x + reach, A.y + reach)


def hexagon_probe(coloring: Coloring, A: Point, window: Optional[Region] = None,
                  tol: float = DEFAULT_TOL,
                  angular_tol: float = DEFAULT_TOL) -> HexagonProbe:
    """Intersect the unit circle around boundary point ``A`` with the boundary.

    ``A`` must lie within tolerance of some boundary piece, else
    :class:`NotOnBoundary` is raised. Feasibility means A is not a boundary
    vertex and no boundary vertex lies on the unit circle around A.
    """
    if window is None:
        window = default_probe_window(A)
    pieces = coloring.boundary_segments(window)
    host = None
    host_dist = math.inf
    for pc in pieces:
        d = pc.distance_to(A)
        if d < host_dist:
            host, host_dist = pc, d
    if host is None or host_dist > tol:
        raise NotOnBoundary(f"({A.x}, {A.y}) is not on the boundary")

    vertices = _boundary_vertices(pieces, tol)
    feasible = True
    for v, _ in vertices:
        dv = distance(v, A)
        if dv <= tol or abs(dv - 1.0) <= tol:
            feasible = False
            break

    hits = circle_polyline_intersections(Circle(A, 1.0), [pc.seg for pc in pieces], tol)
    hit_points = [h.point for h in hits]

    sd = host.seg.direction
    def frame_angle(p: Point) -> float:
        vx, vy = p - A
        return math.atan2(-vx * sd.dy + vy * sd.dx, vx * sd.dx + vy * sd.dy)

    regular = len(hits) == 6 and not any(h.tangent for h in hits)
    alpha: Optional[float] = None
    max_dev = math.inf
    ordered = tuple(sorted(hit_points, key=frame_angle))
    if regular:
        angles = sorted(frame_angle(p) for p in hit_points)
        # label P_0 by the hit in (-pi/6, pi/6]
        base = [a for a in angles if -math.pi / 6.0 < a <= math.pi / 6.0]
        if len(base) != 1:
            regular = False
        else:
            alpha = base[0]
            devs = []
            labeled = []
            for i in range(6):
                target = alpha + i * math.pi / 3.0
                target = (target + math.pi) % TWO_PI - math.pi
                best = min(hit_points,
                           key=lambda p: abs((frame_angle(p) - target + math.pi) % TWO_PI - math.pi))
                dev = abs((frame_angle(best) - target + math.pi) % TWO_PI - math.pi)
                devs.append(dev)
                labeled.append(best)
            max_dev = max(devs)
            if max_dev > max(angular_tol, 1e-12) or len({id(p) for p in labeled}) != 6:
                regular = False
                alpha = None
            else:
                ordered = tuple(labeled)
                # orientation pattern: hits 0 and 3 share the host orientation
                for i, p in enumerate(labeled):
                    hit = next(h for h in hits if h.point is p)
                    pdir = pieces[hit.seg_index].seg.direction
                    cross = abs(pdir.dx * sd.dy - pdir.dy * sd.dx)
                    dot = pdir.dx * sd.dx + pdir.dy * sd.dy
                    parallel = cross <= math.sqrt(max(angular_tol, 1e-12))
                    same = dot > 0.0
                    want_same = i in (0, 3)
                    if not parallel or same != want_same:
                        regular = False
                        alpha = None
                        break
    return HexagonProbe(A, alpha, ordered, regular, feasible,
                        max_dev if regular else math.inf)


@dataclass(frozen=True)
class AngleAuditEntry:
    vertex: Point
    convex_angle: float

    def to_dict(self) -> dict:
        return {"vertex": [self.vertex.x, self.vertex.y],
                "convex_angle": self.convex_angle}


def _default_audit_window(coloring: Coloring) -> Region:
    if isinstance(coloring, PolygonalColoring):
        return coloring.window
    if hasattr(coloring, "profile"):
        # one period of two consecutive curves, inflated a little
        pts = [coloring.curve_point(i, u)
               for i in (0, 1) for u in np.linspace(-0.3, 1.3, 9)]
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        return Region(min(xs) - 0.5, min(ys) - 0.5, max(xs) + 0.5, max(ys) + 0.5)
    return Region(-2.0, -2.0, 2.0, 2.0)


def boundary_angle_audit(coloring: Coloring, window: Optional[Region] = None,
                         tol: float = DEFAULT_TOL) -> list[AngleAuditEntry]:
    """Boundary vertices where exactly two pieces meet at angle <= 2*pi/3.

    The convex angle is measured between the two rays leaving the vertex
    along its pieces. An empty list is the zebra-consistent outcome: a
    coloring whose every monochromatic unit triangle touches the boundary
    cannot have a corner this sharp.
    """
    if window is None:
        window = _default_audit_window(coloring)
    pieces = coloring.boundary_segments(window)
    entries = []
    for v, members in _boundary_vertices(pieces, tol):
        if len(members) != 2:
            continue
        rays = []
        for idx in members:
            seg = pieces[idx].seg
            other = seg.q if distance(seg.p, v) <= distance(seg.q, v) else seg.p
            dx, dy = other - v
            n = math.hypot(dx, dy)
            rays.append((dx / n, dy / n))
        cosang = rays[0][0] * rays[1][0] + rays[0][1] * rays[1][1]
        angle = math.acos(min(max(cosang, -1.0), 1.0))
        if angle <= 2.0 * math.pi / 3.0 + tol:
            entries.append(AngleAuditEntry(v, angle))
    return entries
