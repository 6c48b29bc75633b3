"""Concrete two-coloring families of the plane.

Four families, each a total map from points to black/white:

* ``StripColoring`` -- alternating half-open horizontal strips of width
  ``scale * sqrt(3)/2``, the classical unit-triangle-avoiding coloring.
* ``ZebraColoring`` -- the boundary is an infinite family of congruent
  piecewise-linear curves ``L_i``, each 1-periodic along a unit vector
  ``x_hat``, with ``L_{i+1} = L_i + x_hat/2 + (sqrt(3)/2) y_hat``. Interior
  bands alternate colors; points on the curves are colored separately by a
  boundary parity rule, which is what the twin operation toggles.
* ``PolygonalColoring`` -- an explicit list of oriented boundary segments
  (white face on the left), per-segment boundary colors, and one seed point
  per face; interior queries resolve by crossing parity from a seed.
* ``HalfPlaneColoring`` -- the simplest polygonal coloring, kept as its own
  family for cheap negative tests.

Every family answers single-point queries (``color_at``), vectorized queries
over numpy arrays (``black_mask`` / ``boundary_mask``), and exposes its
boundary as oriented segments for probing, margins and rendering. Colorings
are immutable after construction; all queries are pure.

The zebra family carries its structural checker: conditions (a)-(c) hold by
construction of the representation, and the distance/angle condition (d) --
for consecutive curves, ``|AB| > 1`` iff the acute angle of AB with x_hat is
below pi/3 -- is verified exactly on the piecewise-linear data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

import numpy as np

from .geom import (
    DEFAULT_TOL,
    SQRT3,
    GeometryError,
    Point,
    Region,
    Segment,
    TriangleSpec,
    UnitVector,
    distance,
    point_segment_distance,
)

__all__ = [
    "BoundaryPiece", "Color", "Coloring", "DWitness", "HalfPlaneColoring",
    "MalformedProfile", "PolygonalColoring", "StripColoring", "TriangleSpec",
    "UnresolvedFace", "ZebraColoring", "ZebraConditionReport", "ZebraProfile",
    "all_black_coloring", "check_zebra_conditions", "coloring_from_dict",
    "l_shape_coloring", "polygonal_color", "strip_color", "twin", "zebra_color",
    "zebra_curve",
]

HALF_SQRT3 = SQRT3 / 2.0


class MalformedProfile(GeometryError):
    """A zebra profile violates its structural invariants."""


class UnresolvedFace(GeometryError):
    """No seed reaches the queried point without an ambiguous crossing."""


class Color(Enum):
    BLACK = "black"
    WHITE = "white"

    def opposite(self) -> "Color":
        return Color.WHITE if self is Color.BLACK else Color.BLACK


def _parity_color(index: int, rule: str) -> Color:
    even = index % 2 == 0
    if rule == "even-black":
        return Color.BLACK if even else Color.WHITE
    if rule == "even-white":
        return Color.WHITE if even else Color.BLACK
    raise ValueError(f"unknown parity rule {rule!r}")


@dataclass(frozen=True)
class BoundaryPiece:
    """One oriented piece of a coloring boundary.

    Orientation convention: the white face lies on the left of p->q.
    ``ray_start``/``ray_end`` flag pieces that continue unbounded past the
    stored endpoints (the stored segment is a clipped representative).
    """

    seg: Segment
    color: Color
    ray_start: bool = False
    ray_end: bool = False
    curve_index: Optional[int] = None

    def distance_to(self, p: Point) -> float:
        return point_segment_distance(p, self.seg, self.ray_start, self.ray_end)


# ---------------------------------------------------------------------------
# Strip coloring
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StripColoring:
    """Alternating horizontal strips of width ``scale * sqrt(3)/2``.

    Under the upper-closed rule a point is black iff
    ``n * scale * sqrt(3) < y <= (n + 1/2) * scale * sqrt(3)`` for some
    integer n; the lower-closed rule flips the strictness of both bounds.
    """

    scale: float = 1.0
    boundary_rule: str = "upper-closed"

    def __post_init__(self):
        if not (self.scale > 0.0):
            raise GeometryError(f"scale must be positive, got {self.scale}")
        if self.boundary_rule not in ("upper-closed", "lower-closed"):
            raise ValueError(f"unknown boundary rule {self.boundary_rule!r}")

    @property
    def period(self) -> float:
        return self.scale * SQRT3

    def color_at(self, p: Point, tol: float = DEFAULT_TOL) -> Color:
        return Color.BLACK if bool(self.black_mask(
            np.array([p.x]), np.array([p.y]))[0]) else Color.WHITE

    def black_mask(self, xs: np.ndarray, ys: np.ndarray,
                   tol: float = DEFAULT_TOL) -> np.ndarray:
        # Strip membership is decided by the half-open rule exactly; tol is
        # accepted for interface uniformity only.
        frac = np.mod(ys / self.period, 1.0)
        if self.boundary_rule == "upper-closed":
            return (frac > 0.0) & (frac <= 0.5)
        return (frac >= 0.0) & (frac < 0.5)

    def boundary_mask(self, xs: np.ndarray, ys: np.ndarray,
                      tol: float = DEFAULT_TOL) -> np.ndarray:
        half = self.period / 2.0
        frac = np.mod(ys / half, 1.0)
        dist = np.minimum(frac, 1.0 - frac) * half
        return dist <= tol

    def boundary_segments(self, window: Region) -> list[BoundaryPiece]:
        """Horizontal boundary lines clipped to ``window``, white on the left."""
        half = self.period / 2.0
        k_lo = math.floor(window.y0 / half) - 1
        k_hi = math.ceil(window.y1 / half) + 1
        pieces = []
        for k in range(k_lo, k_hi + 1):
            y = k * half
            if y < window.y0 - half or y > window.y1 + half:
                continue
            upper_edge = k % 2 != 0  # y = (n + 1/2) * period: top edge of a black strip
            if self.boundary_rule == "upper-closed":
                color = Color.BLACK if upper_edge else Color.WHITE
            else:
                color = Color.WHITE if upper_edge else Color.BLACK
            # White face above the upper edge, below the lower edge.
            if upper_edge:
                seg = Segment(Point(window.x0, y), Point(window.x1, y))
            else:
                seg = Segment(Point(window.x1, y), Point(window.x0, y))
            pieces.append(BoundaryPiece(seg, color, ray_start=True, ray_end=True,
                                        curve_index=k))
        return pieces

    def boundary_distance(self, p: Point) -> float:
        half = self.period / 2.0
        frac = math.fmod(p.y / half, 1.0)
        if frac < 0.0:
            frac += 1.0
        return min(frac, 1.0 - frac) * half

    def to_dict(self) -> dict:
        return {"type": "strip", "scale": self.scale,
                "boundary_rule": self.boundary_rule}


# ---------------------------------------------------------------------------
# Zebra colorings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ZebraProfile:
    """One period of the boundary curve as a piecewise-linear graph.

    Breakpoints ``(u, v)`` with u strictly increasing from 0 to 1 and equal
    first/last v (periodic closure). Interior breakpoints must be genuine
    corners; collinear interior joints would be fake vertices and are
    rejected. The flat profile ``[(0,0),(1,0)]`` reproduces the strip
    coloring boundary.
    """

    vertices: tuple[tuple[float, float], ...]

    def __post_init__(self):
        vs = tuple((float(u), float(v)) for u, v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        if len(vs) < 2:
            raise MalformedProfile("profile needs at least two breakpoints")
        us = [u for u, _ in vs]
        if abs(us[0]) > DEFAULT_TOL or abs(us[-1] - 1.0) > DEFAULT_TOL:
            raise MalformedProfile("profile must span u = 0 to u = 1")
        for u0, u1 in zip(us, us[1:]):
            if u1 - u0 <= DEFAULT_TOL:
                raise MalformedProfile("profile breakpoints must strictly increase in u")
        if abs(vs[0][1] - vs[-1][1]) > DEFAULT_TOL:
            raise MalformedProfile("profile is not periodic (first v != last v)")
        slopes = self._piece_slopes(vs)
        for i in range(len(slopes) - 1):
            if abs(slopes[i] - slopes[i + 1]) <= 1e-12:
                raise MalformedProfile(
                    f"consecutive collinear pieces at breakpoint u = {us[i + 1]}")

    @staticmethod
    def _piece_slopes(vs) -> list[float]:
        return [(v1 - v0) / (u1 - u0) for (u0, v0), (u1, v1) in zip(vs, vs[1:])]

    @property
    def amplitude(self) -> float:
        heights = [v for _, v in self.vertices]
        return max(heights) - min(heights)

    @property
    def v_min(self) -> float:
        return min(v for _, v in self.vertices)

    @property
    def v_max(self) -> float:
        return max(v for _, v in self.vertices)

    def is_flat(self) -> bool:
        return self.amplitude == 0.0

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        us = np.array([u for u, _ in self.vertices])
        vs = np.array([v for _, v in self.vertices])
        return us, vs

    def value(self, u: float) -> float:
        return float(self.values(np.array([u]))[0])

    def values(self, u: np.ndarray) -> np.ndarray:
        us, vs = self.arrays()
        return np.interp(np.mod(u, 1.0), us, vs)

    def slopes_at(self, u: np.ndarray) -> np.ndarray:
        us, _ = self.arrays()
        slopes = np.array(self._piece_slopes(self.vertices))
        idx = np.clip(np.searchsorted(us, np.mod(u, 1.0), side="right") - 1,
                      0, len(slopes) - 1)
        return slopes[idx]

    def breakpoints_in(self, u_lo: float, u_hi: float) -> list[float]:
        """Parameters of all breakpoints (period images) in [u_lo, u_hi]."""
        out = []
        base = [u for u, _ in self.vertices[:-1]]  # u = 1 is the next period's 0
        for m in range(math.floor(u_lo) - 1, math.ceil(u_hi) + 2):
            for u in base:
                uu = u + m
                if u_lo <= uu <= u_hi:
                    out.append(uu)
        return sorted(out)


FLAT_PROFILE = ZebraProfile(((0.0, 0.0), (1.0, 0.0)))


@dataclass(frozen=True)
class ZebraColoring:
    """Coloring whose boundary is the curve family ``L_i = L_0 + i*z``.

    ``z = x_hat/2 + (sqrt(3)/2) y_hat`` with ``y_hat`` the ccw perpendicular
    of ``x_hat``. Open bands between consecutive curves are colored by
    ``parity_rule`` of the band index; points on ``L_i`` by
    ``boundary_parity`` of i. Both rules are explicit: boundary colors are
    free and never inferred from the bands.
    """

    profile: ZebraProfile = FLAT_PROFILE
    x_hat: UnitVector = UnitVector(1.0, 0.0)
    parity_rule: str = "even-black"
    boundary_parity: str = "even-black"

    def __post_init__(self):
        for rule in (self.parity_rule, self.boundary_parity):
            if rule not in ("even-black", "even-white"):
                raise ValueError(f"unknown parity rule {rule!r}")
        if self.profile.amplitude >= HALF_SQRT3 - DEFAULT_TOL:
            raise MalformedProfile(
                "profile amplitude must stay below sqrt(3)/2 so consecutive "
                "curves are disjoint")

    @property
    def y_hat(self) -> UnitVector:
        return self.x_hat.perp()

    @property
    def z_step(self) -> tuple[float, float]:
        xh, yh = self.x_hat, self.y_hat
        return (0.5 * xh.dx + HALF_SQRT3 * yh.dx, 0.5 * xh.dy + HALF_SQRT3 * yh.dy)

    # Frame coordinates: s along x_hat, t along y_hat.
    def to_frame(self, xs: np.ndarray, ys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        xh = self.x_hat
        return xs * xh.dx + ys * xh.dy, -xs * xh.dy + ys * xh.dx

    def from_frame(self, s: float, t: float) -> Point:
        xh = self.x_hat
        return Point(s * xh.dx - t * xh.dy, s * xh.dy + t * xh.dx)

    def curve_height(self, i: int, s: np.ndarray) -> np.ndarray:
        """Frame height of L_i over frame abscissa s."""
        return i * HALF_SQRT3 + self.profile.values(s - 0.5 * i)

    def curve_point(self, i: int, u: float) -> Point:
        """World point of L_i at profile parameter u."""
        return self.from_frame(u + 0.5 * i, self.profile.value(u) + i * HALF_SQRT3)

    def _locate(self, xs: np.ndarray, ys: np.ndarray, tol: float):
        """Band index, on-curve mask and on-curve index for each point."""
        s, t = self.to_frame(xs, ys)
        i0 = np.floor((t - self.profile.v_min) / HALF_SQRT3).astype(np.int64)
        band = np.full(s.shape, np.iinfo(np.int64).min, dtype=np.int64)
        on_curve = np.zeros(s.shape, dtype=bool)
        curve_idx = np.zeros(s.shape, dtype=np.int64)
        for di in range(-2, 3):
            i = i0 + di
            u = s - 0.5 * i
            h = i * HALF_SQRT3 + self.profile.values(u)
            m = self.profile.slopes_at(u)
            vertical_tol = tol * np.sqrt(1.0 + m * m)
            onb = np.abs(t - h) <= vertical_tol
            newly = onb & ~on_curve
            curve_idx = np.where(newly, i, curve_idx)
            on_curve |= onb
            band = np.maximum(band, np.where(h <= t, i, np.iinfo(np.int64).min))
        return band, on_curve, curve_idx

    def color_at(self, p: Point, tol: float = DEFAULT_TOL) -> Color:
        black = self.black_mask(np.array([p.x]), np.array([p.y]), tol)[0]
        return Color.BLACK if bool(black) else Color.WHITE

    def black_mask(self, xs: np.ndarray, ys: np.ndarray,
                   tol: float = DEFAULT_TOL) -> np.ndarray:
        band, on_curve, curve_idx = self._locate(xs, ys, tol)
        band_even = np.mod(band, 2) == 0
        curve_even = np.mod(curve_idx, 2) == 0
        band_black = band_even if self.parity_rule == "even-black" else ~band_even
        curve_black = curve_even if self.boundary_parity == "even-black" else ~curve_even
        return np.where(on_curve, curve_black, band_black)

    def boundary_mask(self, xs: np.ndarray, ys: np.ndarray,
                      tol: float = DEFAULT_TOL) -> np.ndarray:
        _, on_curve, _ = self._locate(xs, ys, tol)
        return on_curve

    def band_index_at(self, p: Point, tol: float = DEFAULT_TOL) -> Optional[int]:
        band, on_curve, _ = self._locate(np.array([p.x]), np.array([p.y]), tol)
        return None if bool(on_curve[0]) else int(band[0])

    def curve_index_at(self, p: Point, tol: float = DEFAULT_TOL) -> Optional[int]:
        _, on_curve, idx = self._locate(np.array([p.x]), np.array([p.y]), tol)
        return int(idx[0]) if bool(on_curve[0]) else None

    def _curve_polyline(self, i: int, u_lo: float, u_hi: float) -> list[Point]:
        """Breakpoint polyline of L_i over u in [u_lo, u_hi], collinear joints merged."""
        params = [u_lo] + self.profile.breakpoints_in(u_lo + 1e-12, u_hi - 1e-12) + [u_hi]
        pts = [self.curve_point(i, u) for u in params]
        merged = [pts[0]]
        for j in range(1, len(pts) - 1):
            ax, ay = pts[j] - merged[-1]
            bx, by = pts[j + 1] - pts[j]
            if abs(ax * by - ay * bx) > 1e-12 * (abs(ax) + abs(ay)) * (abs(bx) + abs(by) + 1):
                merged.append(pts[j])
        merged.append(pts[-1])
        return merged

    def _window_param_range(self, i: int, window: Region) -> tuple[float, float]:
        corners_s = [self.to_frame(np.array([x]), np.array([y]))[0][0]
                     for x in (window.x0, window.x1) for y in (window.y0, window.y1)]
        s_lo, s_hi = min(corners_s), max(corners_s)
        return s_lo - 0.5 * i - 1.0, s_hi - 0.5 * i + 1.0

    def zebra_curve(self, i: int, window: Region) -> list[Segment]:
        """The polyline of L_i clipped to ``window``."""
        u_lo, u_hi = self._window_param_range(i, window)
        pts = self._curve_polyline(i, u_lo, u_hi)
        segments = []
        for p, q in zip(pts, pts[1:]):
            clipped = _clip_segment_to_region(p, q, window)
            if clipped is not None:
                segments.append(clipped)
        return segments

    def curve_indices_for(self, window: Region) -> range:
        ts = [self.to_frame(np.array([x]), np.array([y]))[1][0]
              for x in (window.x0, window.x1) for y in (window.y0, window.y1)]
        i_lo = math.floor((min(ts) - self.profile.v_max) / HALF_SQRT3) - 1
        i_hi = math.ceil((max(ts) - self.profile.v_min) / HALF_SQRT3) + 1
        return range(i_lo, i_hi + 1)

    def boundary_segments(self, window: Region) -> list[BoundaryPiece]:
        """Clipped curves as oriented pieces, white face on the left."""
        pieces = []
        for i in self.curve_indices_for(window):
            color = _parity_color(i, self.boundary_parity)
            above = _parity_color(i, self.parity_rule)  # band i sits above L_i
            flip = above is not Color.WHITE  # +x_hat keeps the upper band on the left
            for seg in self.zebra_curve(i, window):
                oriented = Segment(seg.q, seg.p) if flip else seg
                pieces.append(BoundaryPiece(oriented, color, curve_index=i))
        return pieces

    def boundary_distance(self, p: Point) -> float:
        """Exact distance to the nearest boundary curve."""
        s_arr, t_arr = self.to_frame(np.array([p.x]), np.array([p.y]))
        s, t = float(s_arr[0]), float(t_arr[0])
        i0 = math.floor((t - self.profile.v_min) / HALF_SQRT3)
        best = math.inf
        for i in range(i0 - 2, i0 + 3):
            u_lo, u_hi = s - 0.5 * i - 1.5, s - 0.5 * i + 1.5
            pts = self._curve_polyline(i, u_lo, u_hi)
            for a, b in zip(pts, pts[1:]):
                best = min(best, point_segment_distance(p, Segment(a, b)))
        return best

    def twin(self, new_boundary_parity: str) -> "ZebraColoring":
        """Same coloring off the boundary, new parity rule on the curves."""
        return replace(self, boundary_parity=new_boundary_parity)

    def to_dict(self) -> dict:
        return {
            "type": "zebra",
            "profile": [[u, v] for u, v in self.profile.vertices],
            "x_hat": [self.x_hat.dx, self.x_hat.dy],
            "parity_rule": self.parity_rule,
            "boundary_parity": self.boundary_parity,
        }


def twin(zc: ZebraColoring, new_boundary_parity: str) -> ZebraColoring:
    return zc.twin(new_boundary_parity)


def _clip_segment_to_region(p: Point, q: Point, window: Region) -> Optional[Segment]:
    """Liang-Barsky clip; returns None for segments missing the window."""
    dx, dy = q.x - p.x, q.y - p.y
    t0, t1 = 0.0, 1.0
    for delta, lo, hi, start in ((dx, window.x0, window.x1, p.x),
                                 (dy, window.y0, window.y1, p.y)):
        if delta == 0.0:
            if start < lo or start > hi:
                return None
            continue
        ta, tb = (lo - start) / delta, (hi - start) / delta
        if ta > tb:
            ta, tb = tb, ta
        t0, t1 = max(t0, ta), min(t1, tb)
        if t0 >= t1:
            return None
    a = Point(p.x + t0 * dx, p.y + t0 * dy)
    b = Point(p.x + t1 * dx, p.y + t1 * dy)
    if distance(a, b) <= DEFAULT_TOL:
        return None
    return Segment(a, b)


# ---------------------------------------------------------------------------
# Half-plane coloring
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HalfPlaneColoring:
    """Closed half-plane {p : p . normal >= offset} in one color, open rest other."""

    normal: UnitVector = UnitVector(0.0, 1.0)
    offset: float = 0.0
    closed_side_color: Color = Color.BLACK

    def color_at(self, p: Point, tol: float = DEFAULT_TOL) -> Color:
        s = p.x * self.normal.dx + p.y * self.normal.dy
        if s >= self.offset - tol:
            return self.closed_side_color
        return self.closed_side_color.opposite()

    def black_mask(self, xs: np.ndarray, ys: np.ndarray,
                   tol: float = DEFAULT_TOL) -> np.ndarray:
        s = xs * self.normal.dx + ys * self.normal.dy
        closed = s >= self.offset - tol
        if self.closed_side_color is Color.BLACK:
            return closed
        return ~closed

    def boundary_mask(self, xs: np.ndarray, ys: np.ndarray,
                      tol: float = DEFAULT_TOL) -> np.ndarray:
        s = xs * self.normal.dx + ys * self.normal.dy
        return np.abs(s - self.offset) <= tol

    def boundary_segments(self, window: Region) -> list[BoundaryPiece]:
        n = self.normal
        white_on_plus = self.closed_side_color is Color.WHITE
        # Direction whose ccw perpendicular points into the white side.
        d = (n.dy, -n.dx) if white_on_plus else (-n.dy, n.dx)
        anchor = Point(n.dx * self.offset, n.dy * self.offset)
        reach = abs(window.x0) + abs(window.x1) + abs(window.y0) + abs(window.y1) + 4.0
        a = Point(anchor.x - reach * d[0], anchor.y - reach * d[1])
        b = Point(anchor.x + reach * d[0], anchor.y + reach * d[1])
        seg = _clip_segment_to_region(a, b, window)
        if seg is None:
            return []
        return [BoundaryPiece(seg, self.closed_side_color,
                              ray_start=True, ray_end=True)]

    def boundary_distance(self, p: Point) -> float:
        return abs(p.x * self.normal.dx + p.y * self.normal.dy - self.offset)

    def to_dict(self) -> dict:
        return {"type": "halfplane", "normal": [self.normal.dx, self.normal.dy],
                "offset": self.offset,
                "closed_color": self.closed_side_color.value}


# ---------------------------------------------------------------------------
# General polygonal colorings
# ---------------------------------------------------------------------------

def _pieces_cross(a: Segment, b: Segment, tol: float = DEFAULT_TOL) -> bool:
    """True when the segments meet at a point interior to at least one of them."""
    d1x, d1y = a.q.x - a.p.x, a.q.y - a.p.y
    d2x, d2y = b.q.x - b.p.x, b.q.y - b.p.y
    denom = d1x * d2y - d1y * d2x
    len1, len2 = math.hypot(d1x, d1y), math.hypot(d2x, d2y)
    if abs(denom) <= tol * len1 * len2:
        return False  # parallel or collinear: overlaps share whole stretches, not checked
    wx, wy = b.p.x - a.p.x, b.p.y - a.p.y
    t = (wx * d2y - wy * d2x) / denom
    u = (wx * d1y - wy * d1x) / denom
    t_tol, u_tol = tol / len1, tol / len2
    inside_t = t_tol < t < 1.0 - t_tol
    inside_u = u_tol < u < 1.0 - u_tol
    on_t = -t_tol <= t <= 1.0 + t_tol
    on_u = -u_tol <= u <= 1.0 + u_tol
    return (inside_t and inside_u) or (inside_t and on_u and not inside_u) or \
        (inside_u and on_t and not inside_t)


@dataclass(frozen=True)
class PolygonalColoring:
    """Coloring given by explicit boundary pieces and face seed points.

    Pieces may be rays or lines via their ray flags (the stored segment is a
    clipped representative inside ``window``). Interior queries walk from a
    seed and flip color at every proper boundary crossing; crossings that
    graze an endpoint or run along a piece are ambiguous and force a retry
    from the next-nearest seed.
    """

    pieces: tuple[BoundaryPiece, ...]
    seeds: tuple[tuple[Point, Color], ...]
    window: Region

    def __post_init__(self):
        if not self.seeds:
            raise GeometryError("polygonal coloring needs at least one seed")
        for k, (p, _) in enumerate(self.seeds):
            for piece in self.pieces:
                if piece.distance_to(p) <= DEFAULT_TOL:
                    raise GeometryError(f"seed {k} lies on the boundary")
        for i in range(len(self.pieces)):
            for j in range(i + 1, len(self.pieces)):
                if _pieces_cross(self.pieces[i].seg, self.pieces[j].seg):
                    raise GeometryError(
                        f"boundary segments {i} and {j} intersect away from "
                        "their endpoints")

    def color_at(self, p: Point, tol: float = DEFAULT_TOL) -> Color:
        on, color = self._boundary_hit(p, tol)
        if on:
            return color
        order = sorted(range(len(self.seeds)),
                       key=lambda k: distance(self.seeds[k][0], p))
        for k in order:
            seed_pt, seed_color = self.seeds[k]
            crossings = self._count_crossings(p, seed_pt, tol)
            if crossings is None:
                continue
            return seed_color if crossings % 2 == 0 else seed_color.opposite()
        raise UnresolvedFace(f"no seed reaches ({p.x}, {p.y}) unambiguously")

    def _boundary_hit(self, p: Point, tol: float) -> tuple[bool, Color]:
        for piece in self.pieces:
            if piece.distance_to(p) <= tol:
                return True, piece.color
        return False, Color.BLACK

    def _count_crossings(self, p: Point, q: Point, tol: float) -> Optional[int]:
        """Proper crossings of segment p-q with the boundary, None if ambiguous."""
        dx, dy = q.x - p.x, q.y - p.y
        seg_len = math.hypot(dx, dy)
        if seg_len <= tol:
            return 0
        count = 0
        for piece in self.pieces:
            a, b = piece.seg.p, piece.seg.q
            ex, ey = b.x - a.x, b.y - a.y
            piece_len = math.hypot(ex, ey)
            denom = dx * ey - dy * ex
            if abs(denom) <= tol * seg_len * piece_len:
                # Parallel; ambiguous only if collinear and overlapping.
                if point_segment_distance(p, piece.seg, piece.ray_start,
                                          piece.ray_end) <= tol or \
                   point_segment_distance(q, piece.seg, piece.ray_start,
                                          piece.ray_end) <= tol:
                    return None
                continue
            wx, wy = a.x - p.x, a.y - p.y
            t = (wx * ey - wy * ex) / denom
            u = (wx * dy - wy * dx) / denom
            t_tol = tol / seg_len
            u_tol = tol / piece_len
            u_lo = -math.inf if piece.ray_start else 0.0
            u_hi = math.inf if piece.ray_end else 1.0
            if t < -t_tol or t > 1.0 + t_tol or u < u_lo - u_tol or u > u_hi + u_tol:
                continue
            if abs(t) <= t_tol or abs(t - 1.0) <= t_tol:
                return None  # endpoint of the query segment grazes the boundary
            if (not piece.ray_start and abs(u) <= u_tol) or \
               (not piece.ray_end and abs(u - 1.0) <= u_tol):
                return None  # crossing at a boundary vertex
            count += 1
        return count

    def black_mask(self, xs: np.ndarray, ys: np.ndarray,
                   tol: float = DEFAULT_TOL) -> np.ndarray:
        out = np.zeros(xs.shape, dtype=bool)
        for j in range(xs.shape[0]):
            out[j] = self.color_at(Point(float(xs[j]), float(ys[j])), tol) is Color.BLACK
        return out

    def boundary_mask(self, xs: np.ndarray, ys: np.ndarray,
                      tol: float = DEFAULT_TOL) -> np.ndarray:
        out = np.zeros(xs.shape, dtype=bool)
        for piece in self.pieces:
            a, b = piece.seg.p, piece.seg.q
            ex, ey = b.x - a.x, b.y - a.y
            L2 = ex * ex + ey * ey
            t = ((xs - a.x) * ex + (ys - a.y) * ey) / L2
            lo = -np.inf if piece.ray_start else 0.0
            hi = np.inf if piece.ray_end else 1.0
            t = np.clip(t, lo, hi)
            d = np.hypot(xs - (a.x + t * ex), ys - (a.y + t * ey))
            out |= d <= tol
        return out

    def boundary_segments(self, window: Region) -> list[BoundaryPiece]:
        return list(self.pieces)

    def boundary_distance(self, p: Point) -> float:
        if not self.pieces:
            return math.inf
        return min(piece.distance_to(p) for piece in self.pieces)

    def to_dict(self) -> dict:
        return {
            "type": "polygonal",
            "segments": [{"p": [pc.seg.p.x, pc.seg.p.y],
                          "q": [pc.seg.q.x, pc.seg.q.y],
                          "ray_start": pc.ray_start, "ray_end": pc.ray_end}
                         for pc in self.pieces],
            "boundary_colors": [pc.color.value for pc in self.pieces],
            "seeds": [[pt.x, pt.y, color.value] for pt, color in self.seeds],
            "window": [self.window.x0, self.window.y0, self.window.x1, self.window.y1],
        }


def polygonal_color(pc: PolygonalColoring, p: Point, tol: float = DEFAULT_TOL) -> Color:
    return pc.color_at(p, tol)


def strip_color(sc: StripColoring, p: Point, tol: float = DEFAULT_TOL) -> Color:
    return sc.color_at(p, tol)


def zebra_color(zc: ZebraColoring, p: Point, tol: float = DEFAULT_TOL) -> Color:
    return zc.color_at(p, tol)


def zebra_curve(zc: ZebraColoring, i: int, window: Region) -> list[Segment]:
    return zc.zebra_curve(i, window)


# ---------------------------------------------------------------------------
# Zebra condition checker
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DWitness:
    """A pair violating the distance/angle biconditional of condition (d)."""

    A: Point
    B: Point
    dist: float
    theta: float


@dataclass(frozen=True)
class ZebraConditionReport:
    a_ok: bool
    b_ok: bool
    c_ok: bool
    d_ok: bool
    witness: Optional[DWitness] = None
    pairs_checked: int = 0
    candidates_checked: int = 0
    notes: tuple[str, ...] = ()

    @property
    def all_ok(self) -> bool:
        return self.a_ok and self.b_ok and self.c_ok and self.d_ok

    def to_dict(self) -> dict:
        doc = {
            "a": "pass" if self.a_ok else "fail",
            "b": "pass" if self.b_ok else "fail",
            "c": "pass" if self.c_ok else "fail",
            "d": "pass" if self.d_ok else "fail",
            "pairs_checked": self.pairs_checked,
            "candidates_checked": self.candidates_checked,
            "notes": list(self.notes),
        }
        if self.witness is not None:
            doc["witness"] = {
                "A": [self.witness.A.x, self.witness.A.y],
                "B": [self.witness.B.x, self.witness.B.y],
                "dist": self.witness.dist,
                "theta": self.witness.theta,
            }
        else:
            doc["witness"] = None
        return doc


def _d_violation(dx: float, dy: float, tol: float) -> bool:
    """Violation of: dist > 1 iff acute angle with the x axis < pi/3.

    Points within tol of the decision boundaries are treated as consistent;
    the checker reports only violations that survive the tolerance.
    """
    r = math.hypot(dx, dy)
    theta = math.atan2(abs(dy), abs(dx))
    third = math.pi / 3.0
    if r >= 1.0 + tol and theta >= third + tol:
        return True
    if r <= 1.0 - tol and theta <= third - tol:
        return True
    return False


def _segment_event_params(ax, ay, bx, by) -> list[float]:
    """Parameters where the segment crosses the unit circle or the pi/3 rays."""
    dx, dy = bx - ax, by - ay
    events = []
    # unit circle
    qa = dx * dx + dy * dy
    qb = 2.0 * (ax * dx + ay * dy)
    qc = ax * ax + ay * ay - 1.0
    disc = qb * qb - 4.0 * qa * qc
    if qa > 0.0 and disc > 0.0:
        root = math.sqrt(disc)
        events.extend([(-qb - root) / (2.0 * qa), (-qb + root) / (2.0 * qa)])
    # rays dy = +-sqrt(3) dx (full lines through the origin)
    for sign in (1.0, -1.0):
        denom = dy - sign * SQRT3 * dx
        if abs(denom) > 1e-15:
            events.append((sign * SQRT3 * ax - ay) / denom)
    return [t for t in events if 0.0 < t < 1.0]


def _quad_contains(quad: list[tuple[float, float]], pt: tuple[float, float]) -> bool:
    sign = 0.0
    n = len(quad)
    for j in range(n):
        ax, ay = quad[j]
        bx, by = quad[(j + 1) % n]
        cross = (bx - ax) * (pt[1] - ay) - (by - ay) * (pt[0] - ax)
        if abs(cross) < 1e-15:
            continue
        if sign == 0.0:
            sign = math.copysign(1.0, cross)
        elif math.copysign(1.0, cross) != sign:
            return False
    return sign != 0.0


def _knot_intervals(profile: ZebraProfile, lo: float, hi: float) -> list[tuple[float, float]]:
    """Consecutive linear sub-intervals of [lo, hi] split at profile breakpoints."""
    knots = [lo] + profile.breakpoints_in(lo + 1e-12, hi - 1e-12) + [hi]
    return [(k0, k1) for k0, k1 in zip(knots, knots[1:]) if k1 - k0 > 1e-12]


def check_zebra_conditions(zc: ZebraColoring,
                           tol: float = DEFAULT_TOL) -> ZebraConditionReport:
    """Verify the four structural conditions of a zebra coloring.

    (a) x_hat-periodicity, (b) the translation law between consecutive
    curves, and (c) alternating band colors hold by construction of the
    representation and are recorded as such. Condition (d) is decided
    exactly on the piecewise-linear data: over every pair of linear pieces
    of L_0 and L_1, the difference vector B - A ranges over a parallelogram,
    and the biconditional fails somewhere iff a parallelogram meets one of
    the two forbidden zones (outside the unit circle at angle >= pi/3 from
    x_hat, or inside at angle < pi/3). Zone membership changes only across
    the unit circle and the pi/3 rays, so testing vertices, edge
    sub-intervals split at those crossings, and four zone probe points is a
    complete check. A failure is reported as a concrete pair (A, B) with
    its distance and angle. The per-point lens containment stated in the
    equivalent form of (d) is additionally checked at breakpoint and
    midpoint candidates of one period.
    """
    profile = zc.profile
    notes = ("a: profile is one exact period, invariant under u -> u + 1",
             "b: curves generated as L_i = L_0 + i * z by construction",
             "c: band colors assigned by parity of the band index")

    us, vs = profile.arrays()
    n_pieces = len(us) - 1
    slopes = ZebraProfile._piece_slopes(profile.vertices)

    # Period shifts m wide enough that every violating difference vector
    # (necessarily |dx| <= 1 since |dy| <= sqrt(3)) is covered.
    m_lo, m_hi = -3, 2

    pairs_checked = 0
    witness: Optional[DWitness] = None

    def world_pair(alpha: float, beta: float) -> DWitness:
        A = zc.curve_point(0, alpha)
        B = zc.curve_point(1, beta)
        dx, dy = B - A
        r = distance(A, B)
        theta = math.atan2(abs(-dx * zc.x_hat.dy + dy * zc.x_hat.dx),
                           abs(dx * zc.x_hat.dx + dy * zc.x_hat.dy))
        return DWitness(A, B, r, theta)

    for j in range(n_pieces):
        if witness:
            break
        a0, a1 = float(us[j]), float(us[j + 1])
        mj = float(slopes[j])
        fa0 = float(vs[j])
        for k in range(n_pieces):
            if witness:
                break
            mk = float(slopes[k])
            fb0 = float(vs[k])
            for m in range(m_lo, m_hi + 1):
                b0, b1 = float(us[k]) + m, float(us[k + 1]) + m

                def delta(alpha: float, beta: float) -> tuple[float, float]:
                    fa = fa0 + mj * (alpha - a0)
                    fb = fb0 + mk * (beta - b0)
                    return (beta - alpha + 0.5, fb - fa + HALF_SQRT3)

                corners_ab = [(a0, b0), (a1, b0), (a1, b1), (a0, b1)]
                quad = [delta(a, b) for a, b in corners_ab]
                pairs_checked += 1

                # vertices
                for dxy, ab in zip(quad, corners_ab):
                    if _d_violation(dxy[0], dxy[1], tol):
                        witness = world_pair(*ab)
                        break
                if witness:
                    break
                # edge sub-intervals between zone-boundary crossings
                for e in range(4):
                    (px, py), (qx, qy) = quad[e], quad[(e + 1) % 4]
                    (pa, pb), (qa, qb) = corners_ab[e], corners_ab[(e + 1) % 4]
                    params = sorted([0.0, 1.0] + _segment_event_params(px, py, qx, qy))
                    for t0, t1 in zip(params, params[1:]):
                        tm = 0.5 * (t0 + t1)
                        mx, my = px + tm * (qx - px), py + tm * (qy - py)
                        if _d_violation(mx, my, tol):
                            witness = world_pair(pa + tm * (qa - pa), pb + tm * (qb - pb))
                            break
                    if witness:
                        break
                if witness:
                    break
                # Full containment of a forbidden-zone component: one interior
                # probe point per component certifies the overlap.
                det = mk - mj
                if abs(det) > 1e-12:
                    c_x = b0 - a0 + 0.5
                    c_y = fb0 - fa0 + HALF_SQRT3
                    for probe in ((0.5, 0.0), (-0.5, 0.0), (0.0, 2.0), (0.0, -2.0)):
                        if _quad_contains(quad, probe):
                            # Invert the affine map delta(alpha, beta) = probe.
                            rx, ry = probe[0] - c_x, probe[1] - c_y
                            alpha_off = (ry - mk * rx) / det
                            beta_off = alpha_off + rx
                            witness = world_pair(a0 + alpha_off, b0 + beta_off)
                            break
                    if witness:
                        break

    # Candidate-based lens containment (the equivalent pointwise form):
    # the portion of L_1 between the lens corners must fill the closed lens
    # of unit disks around A and A' = A + sqrt(3) y_hat, the rest stays out.
    candidates = [float(u) for u in us[:-1]]
    candidates += [0.5 * float(us[i] + us[i + 1]) for i in range(n_pieces)]
    candidates_checked = 0
    for alpha in candidates:
        if witness:
            break
        candidates_checked += 1
        fa = profile.value(alpha)
        A = (alpha, fa)
        A2 = (alpha, fa + SQRT3)
        # Between-corner portion: beta in [alpha - 1, alpha]. The lens is
        # convex, so breakpoint membership decides the whole polyline.
        betas = [alpha - 1.0] + profile.breakpoints_in(alpha - 1.0 + 1e-12,
                                                       alpha - 1e-12) + [alpha]
        for beta in betas:
            bx, by = beta + 0.5, profile.value(beta) + HALF_SQRT3
            if math.hypot(bx - A[0], by - A[1]) > 1.0 + tol or \
               math.hypot(bx - A2[0], by - A2[1]) > 1.0 + tol:
                witness = world_pair(alpha, beta)
                break
        if witness:
            break
        # Remainder of one-plus period on each side must avoid the open lens.
        outer = _knot_intervals(profile, alpha - 2.5, alpha - 1.0) + \
            _knot_intervals(profile, alpha, alpha + 1.5)
        for b_lo, b_hi in outer:
            p0 = (b_lo + 0.5, profile.value(b_lo) + HALF_SQRT3)
            p1 = (b_hi + 0.5, profile.value(b_hi) + HALF_SQRT3)
            iv = _interval_in_disk(p0, p1, A)
            iv2 = _interval_in_disk(p0, p1, A2)
            if iv and iv2:
                lo, hi = max(iv[0], iv2[0]), min(iv[1], iv2[1])
                if hi > lo:
                    tm = 0.5 * (lo + hi)
                    mx = p0[0] + tm * (p1[0] - p0[0])
                    my = p0[1] + tm * (p1[1] - p0[1])
                    if math.hypot(mx - A[0], my - A[1]) < 1.0 - tol and \
                       math.hypot(mx - A2[0], my - A2[1]) < 1.0 - tol:
                        witness = world_pair(alpha, b_lo + tm * (b_hi - b_lo))
                        break

    return ZebraConditionReport(
        a_ok=True, b_ok=True, c_ok=True, d_ok=witness is None,
        witness=witness, pairs_checked=pairs_checked,
        candidates_checked=candidates_checked, notes=notes)


def _interval_in_disk(p0, p1, center) -> Optional[tuple[float, float]]:
    """Parameter interval of segment p0-p1 inside the unit disk around center."""
    dx, dy = p1[0] - p0[0], p1[1] - p0[1]
    fx, fy = p0[0] - center[0], p0[1] - center[1]
    qa = dx * dx + dy * dy
    qb = 2.0 * (fx * dx + fy * dy)
    qc = fx * fx + fy * fy - 1.0
    disc = qb * qb - 4.0 * qa * qc
    if disc <= 0.0:
        return None
    root = math.sqrt(disc)
    lo = max((-qb - root) / (2.0 * qa), 0.0)
    hi = min((-qb + root) / (2.0 * qa), 1.0)
    if hi <= lo:
        return None
    return (lo, hi)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

Coloring = StripColoring | ZebraColoring | HalfPlaneColoring | PolygonalColoring


def coloring_from_dict(doc: dict) -> Coloring:
    """Build a coloring from its JSON document form."""
    kind = doc.get("type")
    if kind == "strip":
        return StripColoring(scale=float(doc["scale"]),
                             boundary_rule=doc.get("boundary_rule", "upper-closed"))
    if kind == "zebra":
        profile = ZebraProfile(tuple((float(u), float(v)) for u, v in doc["profile"]))
        xh = doc.get("x_hat", [1.0, 0.0])
        return ZebraColoring(
            profile=profile,
            x_hat=UnitVector.normalized(float(xh[0]), float(xh[1])),
            parity_rule=doc.get("parity_rule", "even-black"),
            boundary_parity=doc.get("boundary_parity", "even-black"))
    if kind == "halfplane":
        n = doc["normal"]
        return HalfPlaneColoring(
            normal=UnitVector.normalized(float(n[0]), float(n[1])),
            offset=float(doc.get("offset", 0.0)),
            closed_side_color=Color(doc.get("closed_color", "black")))
    if kind == "polygonal":
        colors = [Color(c) for c in doc.get("boundary_colors", [])]
        segs = doc.get("segments", [])
        if len(colors) != len(segs):
            raise ValueError("boundary_colors must match segments one-to-one")
        pieces = []
        for raw, color in zip(segs, colors):
            seg = Segment(Point(float(raw["p"][0]), float(raw["p"][1])),
                          Point(float(raw["q"][0]), float(raw["q"][1])))
            pieces.append(BoundaryPiece(seg, color,
                                        ray_start=bool(raw.get("ray_start", False)),
                                        ray_end=bool(raw.get("ray_end", False))))
        seeds = tuple((Point(float(s[0]), float(s[1])), Color(s[2]))
                      for s in doc.get("seeds", []))
        if "window" in doc:
            w = doc["window"]
            window = Region(float(w[0]), float(w[1]), float(w[2]), float(w[3]))
        else:
            xs = [c for pc in pieces for c in (pc.seg.p.x, pc.seg.q.x)] or [0.0]
            ys = [c for pc in pieces for c in (pc.seg.p.y, pc.seg.q.y)] or [0.0]
            window = Region(min(xs) - 1.0, min(ys) - 1.0, max(xs) + 1.0, max(ys) + 1.0)
        return PolygonalColoring(tuple(pieces), seeds, window)
    raise ValueError(f"unknown coloring type {kind!r}")


def l_shape_coloring(arm: float = 16.0) -> PolygonalColoring:
    """Open first quadrant black, the rest white; corner of angle pi/2.

    The two boundary rays leave the origin along +x and +y, clipped at
    ``arm`` for representation but flagged unbounded.
    """
    along_x = BoundaryPiece(Segment(Point(arm, 0.0), Point(0.0, 0.0)),
                            Color.BLACK, ray_start=True)
    along_y = BoundaryPiece(Segment(Point(0.0, 0.0), Point(0.0, arm)),
                            Color.BLACK, ray_end=True)
    return PolygonalColoring(
        (along_x, along_y),
        ((Point(1.0, 1.0), Color.BLACK), (Point(-1.0, -1.0), Color.WHITE)),
        Region(-arm, -arm, arm, arm))


def all_black_coloring(arm: float = 16.0) -> PolygonalColoring:
    """Degenerate polygonal coloring with no boundary: everything black."""
    return PolygonalColoring((), ((Point(0.0, 0.0), Color.BLACK),),
                             Region(-arm, -arm, arm, arm))
