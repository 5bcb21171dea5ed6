"""Equilateral-triangle specialization: closed forms and rotation constructions.

The three distances from any point to the vertices of an equilateral
triangle themselves satisfy the triangle inequality (Pompeiu's theorem),
degenerating exactly when the point lies on the circumcircle (Van
Schooten).  The area of that distance triangle feeds closed forms for
both equilateral triangles realizing the distances, and 60-degree
rotations construct them explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dual import DEGENERACY_EPS, Degeneracy, DualSolution, RadiusDistancePair, solve
from .errors import DegenerateError, TriangleInequalityError
from .geometry import (
    ABS_FLOOR,
    Point2,
    RegularPolygonSpec,
    azimuth,
    distances_from,
    rotate_about,
    vertices,
)

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class PompeiuTriangle:
    """The triangle whose sides are the three vertex distances."""

    d1: float
    d2: float
    d3: float
    area: float
    degenerate: bool


@dataclass(frozen=True)
class EquilateralDual:
    """Closed-form parameter pairs plus the two triangle side lengths."""

    solution: DualSolution
    side_larger: float
    side_smaller: float


@dataclass(frozen=True)
class TrianglePair:
    """Both equilateral triangles realizing one distance triple.

    The first vertex of ``larger`` and of ``smaller`` is the shared one.
    """

    point: Point2
    larger: tuple[Point2, Point2, Point2]
    smaller: tuple[Point2, Point2, Point2]


def pompeiu_from_distances(
    d1: float, d2: float, d3: float, tol: float = 1e-9
) -> PompeiuTriangle:
    """Build the distance triangle, with Kahan's ordering-stable Heron area.

    Degeneracy (largest value equal to the sum of the others within tol,
    relative to the largest value) forces the area to exactly zero; a
    violation beyond tol means no point/equilateral-triangle pair can
    produce the triple.
    """
    for v in (d1, d2, d3):
        if not math.isfinite(v) or v < 0.0:
            raise ValueError(f"distances must be finite and >= 0, got {v}")
    a, b, c = sorted((d1, d2, d3), reverse=True)
    slack = (b + c) - a
    scale = max(a, ABS_FLOOR)
    if slack < -tol * scale:
        raise TriangleInequalityError(
            "largest distance exceeds the sum of the others",
            sides=(d1, d2, d3),
            gap=-slack,
        )
    degenerate = slack <= tol * scale
    if degenerate:
        area = 0.0
    else:
        area = 0.25 * math.sqrt(
            max((a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c)), 0.0)
        )
    return PompeiuTriangle(d1, d2, d3, area, degenerate)


def solve_equilateral(t: PompeiuTriangle) -> EquilateralDual:
    """Closed-form parameter pairs from the distance-triangle area.

    The circumradii are (sum of squares +/- 4*sqrt(3)*area)/6 and the
    side lengths are sqrt(3) times them; the discriminant comes out as
    (16/3)*area^2, so degeneracy classification matches the general
    solver's thresholds.
    """
    q1, q2, q3 = t.d1 * t.d1, t.d2 * t.d2, t.d3 * t.d3
    qsum = q1 + q2 + q3
    corr = 4.0 * SQRT3 * t.area
    s2 = qsum / 3.0
    s4 = (q1 * q1 + q2 * q2 + q3 * q3) / 3.0
    disc = (16.0 / 3.0) * t.area * t.area
    if disc <= DEGENERACY_EPS * s2 * s2:
        # on the circumcircle both triangles coincide; drop the residual
        # area so all four values come out equal (matches the solver)
        disc = 0.0
        corr = 0.0
        degeneracy = Degeneracy.ON_CIRCUMCIRCLE
    else:
        degeneracy = None
    r1sq = (qsum + corr) / 6.0
    l1sq = max((qsum - corr) / 6.0, 0.0)
    if degeneracy is None:
        degeneracy = (
            Degeneracy.AT_CENTER if l1sq <= DEGENERACY_EPS * s2 else Degeneracy.NONE
        )
    r1 = math.sqrt(r1sq)
    l1 = math.sqrt(l1sq)
    sol = DualSolution(
        mean_square=s2,
        mean_fourth=s4,
        discriminant=disc,
        larger=RadiusDistancePair(r1, l1),
        smaller=RadiusDistancePair(l1, r1),
        degeneracy=degeneracy,
    )
    return EquilateralDual(sol, r1 * SQRT3, l1 * SQRT3)


def weitzenbock_margin(t: PompeiuTriangle) -> float:
    """Sum of squared sides minus 4*sqrt(3) times the area.

    Nonnegative for every triangle, zero exactly for an equilateral
    distance triple, and equal to six times the squared point-to-center
    distance of the larger triangle.
    """
    return (t.d1 * t.d1 + t.d2 * t.d2 + t.d3 * t.d3) - 4.0 * SQRT3 * t.area


def _rotation_image(p: Point2, pivot: Point2, src: Point2, dst: Point2) -> Point2:
    """Image of ``p`` under the rotation about ``pivot`` taking src to dst."""
    ang = azimuth(pivot, dst) - azimuth(pivot, src)
    return rotate_about(p, pivot, ang)


def construct_both_triangles(
    d1: float, d2: float, d3: float, tol: float = 1e-9
) -> TrianglePair:
    """Both equilateral triangles realizing the triple, by rotation.

    Canonical placement: the point at the origin and the edge of length
    d2 supporting the auxiliary equilateral triangles along the positive
    x axis; the shared vertex (distance d1 from the point) goes in the
    upper half plane.  The counterclockwise auxiliary apex is built
    first, the clockwise one second; each apex becomes the second vertex
    of one output triangle and the third vertex is the image of the
    shared vertex under the rotation about that apex taking the support
    edge's far end onto the point.
    """
    t = pompeiu_from_distances(d1, d2, d3, tol)
    if t.degenerate:
        raise DegenerateError(
            "distance triangle is degenerate; the companion collapses",
            sides=(d1, d2, d3),
        )
    m = Point2(0.0, 0.0)
    support = Point2(d2, 0.0)
    # shared vertex: upper intersection of circles (m, d1) and (support, d3)
    x = (d1 * d1 - d3 * d3 + d2 * d2) / (2.0 * d2)
    shared = Point2(x, math.sqrt(max(d1 * d1 - x * x, 0.0)))
    apex_ccw = rotate_about(support, m, math.pi / 3.0)
    apex_cw = rotate_about(support, m, -math.pi / 3.0)
    tri_ccw = (shared, apex_ccw, _rotation_image(shared, apex_ccw, support, m))
    tri_cw = (shared, apex_cw, _rotation_image(shared, apex_cw, support, m))
    if shared.distance_to(apex_ccw) >= shared.distance_to(apex_cw):
        larger, smaller = tri_ccw, tri_cw
    else:
        larger, smaller = tri_cw, tri_ccw
    return TrianglePair(m, larger, smaller)


def _reflect_across(a: Point2, b: Point2, p: Point2) -> Point2:
    """Mirror image of ``p`` across the line through a and b."""
    ux, uy = b.x - a.x, b.y - a.y
    norm = ux * ux + uy * uy
    px, py = p.x - a.x, p.y - a.y
    s = (px * ux + py * uy) / norm
    return Point2(a.x + 2.0 * s * ux - px, a.y + 2.0 * s * uy - py)


def construct_second_from_first(
    p: RegularPolygonSpec,
    point: Point2,
    tol: float = 1e-9,
    *,
    orientation: int = 1,
) -> RegularPolygonSpec:
    """The companion equilateral triangle through the first vertex.

    The second vertex of the input is carried twice through a 60-degree
    rotation about the point (clockwise for the counterclockwise vertex
    order used here); the intermediate image is the auxiliary apex, the
    final image is the companion's second vertex, and its third vertex
    follows by the rotation about the second vertex taking the apex onto
    the point.  Works in both directions (larger input gives the smaller
    companion and vice versa).  ``orientation=-1`` returns the mirror
    companion, reflected across the line through the point and the
    shared vertex.
    """
    if p.n != 3:
        raise ValueError(f"only defined for triangles, got n={p.n}")
    sol = solve(distances_from(point, p), tol)
    if sol.degeneracy is not Degeneracy.NONE:
        raise DegenerateError(
            "no non-congruent companion triangle exists for this configuration",
            degeneracy=sol.degeneracy.value,
        )
    a1, a2, _ = vertices(p)
    aux = rotate_about(a2, point, -math.pi / 3.0)
    b2 = rotate_about(a2, point, -2.0 * math.pi / 3.0)
    b3 = _rotation_image(a1, b2, aux, point)
    if orientation < 0:
        b2 = _reflect_across(point, a1, b2)
        b3 = _reflect_across(point, a1, b3)
    center = Point2((a1.x + b2.x + b3.x) / 3.0, (a1.y + b2.y + b3.y) / 3.0)
    return RegularPolygonSpec(3, center, center.distance_to(a1), azimuth(center, a1))
