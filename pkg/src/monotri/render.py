"""Deterministic SVG rendering of colorings and scan witnesses.

Black regions fill dark, white regions stay light, boundary polylines are
stroked, and an optional witness triangle is overlaid with vertex markers.
Output is plain SVG 1.1 built by string assembly with fixed-precision
coordinates, so a given input always renders to the same bytes. Strip,
zebra and half-plane fills are exact band/half-plane polygons (cropped by
the viewBox); generic polygonal interiors fall back to a fine cell raster
colored by point queries while their boundaries stay exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .geom import Point, Region, Segment
from .colorings import (
    Color,
    Coloring,
    HalfPlaneColoring,
    PolygonalColoring,
    StripColoring,
    UnresolvedFace,
    ZebraColoring,
    _parity_color,
)

BLACK_FILL = "#3a3a3a"
WHITE_FILL = "#f4f1ea"
STROKE = "#b03030"
WITNESS_STROKE = "#1060c0"


@dataclass(frozen=True)
class RenderSpec:
    coloring: Coloring
    region: Region
    pixels_per_unit: float = 60.0
    witness: Optional[dict] = None

    def __post_init__(self):
        if not (self.pixels_per_unit > 0.0):
            raise ValueError("pixels_per_unit must be positive")


def _fmt(v: float) -> str:
    out = f"{v:.4f}"
    return "0.0000" if out == "-0.0000" else out


class _Canvas:
    def __init__(self, region: Region, ppu: float):
        self.region = region
        self.ppu = ppu
        self.width = (region.x1 - region.x0) * ppu
        self.height = (region.y1 - region.y0) * ppu
        self.parts: list[str] = []

    def to_svg(self, p: Point) -> tuple[float, float]:
        return ((p.x - self.region.x0) * self.ppu,
                (self.region.y1 - p.y) * self.ppu)

    def polygon(self, pts: list[Point], fill: str) -> None:
        coords = " ".join("%s,%s" % tuple(map(_fmt, self.to_svg(p))) for p in pts)
        self.parts.append(f'<polygon points="{coords}" fill="{fill}" stroke="none"/>')

    def rect(self, x: float, y: float, w: float, h: float, fill: str) -> None:
        self.parts.append(
            f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(w)}" '
            f'height="{_fmt(h)}" fill="{fill}" stroke="none"/>')

    def line(self, seg: Segment, stroke: str, width: float) -> None:
        (x1, y1), (x2, y2) = self.to_svg(seg.p), self.to_svg(seg.q)
        self.parts.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{stroke}" stroke-width="{_fmt(width)}"/>')

    def circle(self, p: Point, r: float, fill: str) -> None:
        cx, cy = self.to_svg(p)
        self.parts.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" fill="{fill}"/>')

    def document(self) -> str:
        head = ('<?xml version="1.0" encoding="UTF-8"?>\n'
                '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
                f'width="{_fmt(self.width)}" height="{_fmt(self.height)}" '
                f'viewBox="0 0 {_fmt(self.width)} {_fmt(self.height)}">')
        return head + "\n" + "\n".join(self.parts) + "\n</svg>\n"


def _fill_strip(canvas: _Canvas, coloring: StripColoring) -> None:
    region = canvas.region
    period = coloring.period
    n_lo = math.floor(region.y0 / period) - 1
    n_hi = math.ceil(region.y1 / period) + 1
    for n in range(n_lo, n_hi + 1):
        top = (n + 0.5) * period
        x, y = canvas.to_svg(Point(region.x0, top))
        canvas.rect(x, y, canvas.width, 0.5 * period * canvas.ppu, BLACK_FILL)


def _fill_zebra(canvas: _Canvas, coloring: ZebraColoring) -> None:
    region = canvas.region
    pad = region.inflated(1.0)
    for i in coloring.curve_indices_for(pad):
        if _parity_color(i, coloring.parity_rule) is not Color.BLACK:
            continue
        lo_u = coloring._window_param_range(i, pad)
        hi_u = coloring._window_param_range(i + 1, pad)
        lower = coloring._curve_polyline(i, lo_u[0], lo_u[1])
        upper = coloring._curve_polyline(i + 1, hi_u[0], hi_u[1])
        canvas.polygon(lower + upper[::-1], BLACK_FILL)


def _fill_halfplane(canvas: _Canvas, coloring: HalfPlaneColoring) -> None:
    region = canvas.region
    n = coloring.normal
    anchor = Point(n.dx * coloring.offset, n.dy * coloring.offset)
    reach = (region.x1 - region.x0) + (region.y1 - region.y0) + \
        abs(coloring.offset) + abs(region.x0) + abs(region.y0) + 4.0
    d = (-n.dy, n.dx)
    sign = 1.0 if coloring.closed_side_color is Color.BLACK else -1.0
    a = Point(anchor.x - reach * d[0], anchor.y - reach * d[1])
    b = Point(anchor.x + reach * d[0], anchor.y + reach * d[1])
    canvas.polygon([
        a, b,
        Point(b.x + sign * reach * n.dx, b.y + sign * reach * n.dy),
        Point(a.x + sign * reach * n.dx, a.y + sign * reach * n.dy),
    ], BLACK_FILL)


def _fill_polygonal(canvas: _Canvas, coloring: PolygonalColoring, cells: int = 160) -> None:
    region = canvas.region
    nx = cells
    ny = max(int(round(cells * (region.y1 - region.y0) / (region.x1 - region.x0))), 1)
    dx = (region.x1 - region.x0) / nx
    dy = (region.y1 - region.y0) / ny
    for i in range(nx):
        for j in range(ny):
            cx = region.x0 + (i + 0.5) * dx
            cy = region.y0 + (j + 0.5) * dy
            try:
                color = coloring.color_at(Point(cx, cy))
            except UnresolvedFace:
                continue
            if color is Color.BLACK:
                x, y = canvas.to_svg(Point(region.x0 + i * dx, region.y0 + (j + 1) * dy))
                canvas.rect(x, y, dx * canvas.ppu, dy * canvas.ppu, BLACK_FILL)


def render_svg(spec: RenderSpec) -> str:
    """Render a coloring (and optional witness overlay) to an SVG document."""
    canvas = _Canvas(spec.region, spec.pixels_per_unit)
    canvas.rect(0.0, 0.0, canvas.width, canvas.height, WHITE_FILL)
    coloring = spec.coloring
    if isinstance(coloring, StripColoring):
        _fill_strip(canvas, coloring)
    elif isinstance(coloring, ZebraColoring):
        _fill_zebra(canvas, coloring)
    elif isinstance(coloring, HalfPlaneColoring):
        _fill_halfplane(canvas, coloring)
    elif isinstance(coloring, PolygonalColoring):
        _fill_polygonal(canvas, coloring)
    else:
        raise ValueError(f"cannot render coloring of type {type(coloring).__name__}")

    stroke_w = max(1.5, 0.02 * spec.pixels_per_unit)
    for piece in coloring.boundary_segments(spec.region):
        canvas.line(piece.seg, STROKE, stroke_w)

    if spec.witness is not None:
        verts = [Point(float(x), float(y)) for x, y in spec.witness["vertices"]]
        coords = " ".join("%s,%s" % tuple(map(_fmt, canvas.to_svg(p))) for p in verts)
        canvas.parts.append(
            f'<polygon points="{coords}" fill="none" stroke="{WITNESS_STROKE}" '
            f'stroke-width="{_fmt(stroke_w * 1.25)}"/>')
        for p in verts:
            canvas.circle(p, max(2.5, 0.05 * spec.pixels_per_unit), WITNESS_STROKE)
    return canvas.document()
