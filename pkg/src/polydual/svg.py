"""Deterministic SVG emission for solved configurations.

Scenes carry plain geometry (polygons, construction circles, point
markers, distance segments, labels); the emitter fits the viewBox with a
10% margin and flips the y axis so figures match mathematical
orientation.  Identical scenes produce byte-identical documents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geometry import Point2, RegularPolygonSpec, vertices
from .pompeiu import TrianglePair
from .reconstruct import DualPolygonPair
from .two_points import TwoPointsSolution

_STROKES = {
    "polygon": "#1f4e79",
    "construction-circle": "#888888",
    "distance-segment": "#b05923",
    "point-marker": "#a01010",
}


@dataclass(frozen=True)
class Scene:
    polygons: tuple[tuple[RegularPolygonSpec, str], ...] = ()  # (spec, label prefix)
    circles: tuple[tuple[Point2, float], ...] = ()
    markers: tuple[tuple[Point2, str], ...] = ()
    segments: tuple[tuple[Point2, Point2], ...] = ()
    extra_labels: tuple[tuple[Point2, str], ...] = field(default=())


def _fmt(v: float) -> str:
    return format(v, ".8g")


def scene_from_dual_pair(pair: DualPolygonPair, include_mirror: bool = False) -> Scene:
    """Original polygon, companion(s), both circumcircles, auxiliary circle."""
    p = pair.primary_polygon
    polys: list[tuple[RegularPolygonSpec, str]] = [(p, "A"), (pair.b_polygon, "B")]
    if include_mirror:
        polys.append((pair.c_polygon, "C"))
    anchor = pair.point.distance_to(vertices(pair.b_polygon)[0])
    circles = (
        (p.center, p.circumradius),
        (pair.b_polygon.center, pair.b_polygon.circumradius),
        (pair.point, anchor),
    )
    segments = tuple((pair.point, v) for v in vertices(p))
    return Scene(
        polygons=tuple(polys),
        circles=circles,
        markers=((pair.point, "M"),),
        segments=segments,
    )


def scene_from_two_points(
    pa: RegularPolygonSpec, pb: RegularPolygonSpec, sol: TwoPointsSolution
) -> Scene:
    """Both polygons, the two swapped-radius circles, the matched point(s)."""
    markers = [(sol.m1, "M1")]
    if sol.m2 is not None:
        markers.append((sol.m2, "M2"))
    circles = (
        (pb.center, pa.circumradius),
        (pa.center, pb.circumradius),
    )
    return Scene(
        polygons=((pa, "A"), (pb, "B")),
        circles=circles,
        markers=tuple(markers),
    )


def scene_from_triangle_pair(tp: TrianglePair) -> Scene:
    """Both equilateral triangles with all six distance segments."""
    polys = []
    for tri, prefix in ((tp.larger, "A"), (tp.smaller, "B")):
        cx = sum(v.x for v in tri) / 3.0
        cy = sum(v.y for v in tri) / 3.0
        center = Point2(cx, cy)
        radius = center.distance_to(tri[0])
        phase = math.atan2(tri[0].y - cy, tri[0].x - cx) if radius > 0 else 0.0
        polys.append((RegularPolygonSpec(3, center, radius, phase), prefix))
    segments = tuple((tp.point, v) for tri in (tp.larger, tp.smaller) for v in tri)
    return Scene(
        polygons=tuple(polys),
        markers=((tp.point, "M"),),
        segments=segments,
    )


def _scene_bounds(scene: Scene) -> tuple[float, float, float, float]:
    xs: list[float] = []
    ys: list[float] = []
    for p, _ in scene.polygons:
        xs += [p.center.x - p.circumradius, p.center.x + p.circumradius]
        ys += [p.center.y - p.circumradius, p.center.y + p.circumradius]
    for c, r in scene.circles:
        xs += [c.x - r, c.x + r]
        ys += [c.y - r, c.y + r]
    for q, _ in scene.markers:
        xs.append(q.x)
        ys.append(q.y)
    for a, b in scene.segments:
        xs += [a.x, b.x]
        ys += [a.y, b.y]
    if not xs:
        return (-1.0, -1.0, 1.0, 1.0)
    return (min(xs), min(ys), max(xs), max(ys))


def render_svg(scene: Scene) -> str:
    """Emit the scene as an SVG 1.1 document (y axis pointing up)."""
    x0, y0, x1, y1 = _scene_bounds(scene)
    span = max(x1 - x0, y1 - y0, 1e-9)
    margin = 0.1 * span
    vx, vy = x0 - margin, y0 - margin
    vw, vh = (x1 - x0) + 2 * margin, (y1 - y0) + 2 * margin
    stroke = 0.005 * span
    marker_r = 0.012 * span
    font = 0.035 * span

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(vx)} {_fmt(-(vy + vh))} {_fmt(vw)} {_fmt(vh)}">',
        '<g transform="scale(1,-1)">',
    ]
    for center, radius in scene.circles:
        lines.append(
            f'<circle class="construction-circle" cx="{_fmt(center.x)}" cy="{_fmt(center.y)}" '
            f'r="{_fmt(radius)}" fill="none" stroke="{_STROKES["construction-circle"]}" '
            f'stroke-width="{_fmt(stroke)}" stroke-dasharray="{_fmt(4 * stroke)} {_fmt(3 * stroke)}"/>'
        )
    for p, _prefix in scene.polygons:
        pts = " ".join(f"{_fmt(v.x)},{_fmt(v.y)}" for v in vertices(p))
        lines.append(
            f'<polygon class="polygon" points="{pts}" fill="none" '
            f'stroke="{_STROKES["polygon"]}" stroke-width="{_fmt(1.6 * stroke)}"/>'
        )
    for a, b in scene.segments:
        lines.append(
            f'<line class="distance-segment" x1="{_fmt(a.x)}" y1="{_fmt(a.y)}" '
            f'x2="{_fmt(b.x)}" y2="{_fmt(b.y)}" stroke="{_STROKES["distance-segment"]}" '
            f'stroke-width="{_fmt(stroke)}"/>'
        )
    for q, _label in scene.markers:
        lines.append(
            f'<circle class="point-marker" cx="{_fmt(q.x)}" cy="{_fmt(q.y)}" '
            f'r="{_fmt(marker_r)}" fill="{_STROKES["point-marker"]}"/>'
        )
    lines.append("</g>")
    # labels live outside the flipped group so the glyphs stay upright
    for p, prefix in scene.polygons:
        for i, v in enumerate(vertices(p), start=1):
            lines.append(
                f'<text class="label" x="{_fmt(v.x + 1.2 * marker_r)}" '
                f'y="{_fmt(-(v.y + 1.2 * marker_r))}" font-size="{_fmt(font)}">{prefix}{i}</text>'
            )
    for q, label in scene.markers:
        lines.append(
            f'<text class="label" x="{_fmt(q.x + 1.2 * marker_r)}" '
            f'y="{_fmt(-(q.y - 1.2 * marker_r))}" font-size="{_fmt(font)}">{label}</text>'
        )
    for q, label in scene.extra_labels:
        lines.append(
            f'<text class="label" x="{_fmt(q.x)}" y="{_fmt(-q.y)}" '
            f'font-size="{_fmt(font)}">{label}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
