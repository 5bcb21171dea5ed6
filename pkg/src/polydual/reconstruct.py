"""Coordinates for the companion polygon sharing a distance multiset.

Given a polygon, a point M and one anchored vertex distance, the
companion is pinned down up to mirror once its center is chosen: the
center may sit anywhere on the circle about M of radius equal to the
original circumradius, the companion's own radius equals the original
center distance, and the anchored vertex must land on the circle about M
through the anchor distance.  Intersecting that auxiliary circle with the
companion circumcircle gives the two mirror-image companions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dual import Degeneracy, solve
from .errors import DegenerateError, NoIntersectionError, RangeError
from .geometry import (
    ABS_FLOOR,
    TWO_PI,
    DistanceSpec,
    Point2,
    RegularPolygonSpec,
    azimuth,
    distances_from,
    multiset_residual,
    normalize_angle,
)

#: Absolute slack allowed on the law-of-cosines value before raising.
COS_CLAMP_TOL = 1e-9


@dataclass(frozen=True)
class PermutationMatch:
    ok: bool
    permutation: tuple[int, ...]
    residual: float


@dataclass(frozen=True)
class DualPolygonPair:
    primary_polygon: RegularPolygonSpec
    point: Point2
    b_polygon: RegularPolygonSpec
    c_polygon: RegularPolygonSpec
    center_direction: float
    match_residual: float


def solve_phase(
    point: Point2,
    center: Point2,
    n: int,
    circumradius: float,
    center_distance: float,
    anchor_distance: float,
) -> tuple[float, float]:
    """Two first-vertex angles placing a vertex at ``anchor_distance`` from ``point``.

    Inverts the law of cosines on the triangle (center, point, vertex):
    the vertex sits at azimuth(center -> point) +/- alpha as seen from the
    center, and the two signs give the mirror pair.  The cosine is clamped
    within COS_CLAMP_TOL of [-1, 1] to absorb boundary tangency.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if circumradius <= 0.0 or center_distance <= 0.0:
        raise ValueError("circumradius and center_distance must be positive")
    cos_arg = (
        circumradius * circumradius
        + center_distance * center_distance
        - anchor_distance * anchor_distance
    ) / (2.0 * circumradius * center_distance)
    if cos_arg > 1.0 + COS_CLAMP_TOL or cos_arg < -1.0 - COS_CLAMP_TOL:
        raise RangeError(
            "anchor distance unreachable on the target circle",
            cos_value=cos_arg,
            circumradius=circumradius,
            center_distance=center_distance,
            anchor_distance=anchor_distance,
        )
    alpha = math.acos(min(1.0, max(-1.0, cos_arg)))
    base = azimuth(center, point)
    return normalize_angle(base + alpha), normalize_angle(base - alpha)


def construct_dual(
    p: RegularPolygonSpec,
    point: Point2,
    center_direction: float = 0.0,
    tol: float = 1e-9,
    *,
    anchor_index: int = 0,
) -> DualPolygonPair:
    """Place the companion polygon for one choice of center direction.

    The companion center goes at the original circumradius from ``point``
    along ``center_direction`` (a genuinely free choice: every direction
    yields a valid companion).  Vertex 0 of each returned polygon is the
    anchored vertex, at the same distance from ``point`` as vertex
    ``anchor_index`` of the original; the b/c polygons are the two mirror
    solutions, counterclockwise offset first.
    """
    if not 0 <= anchor_index < p.n:
        raise ValueError(f"anchor_index must be in [0, {p.n}), got {anchor_index}")
    d = distances_from(point, p)
    sol = solve(d, tol)
    if sol.degeneracy is not Degeneracy.NONE:
        raise DegenerateError(
            "no non-congruent companion polygon exists for this configuration",
            degeneracy=sol.degeneracy.value,
        )
    radius_in = p.circumradius
    dist_in = point.distance_to(p.center)
    center = Point2(
        point.x + radius_in * math.cos(center_direction),
        point.y + radius_in * math.sin(center_direction),
    )
    anchor = d.values[anchor_index]
    try:
        phase_plus, phase_minus = solve_phase(
            point, center, p.n, dist_in, radius_in, anchor
        )
    except RangeError as exc:
        raise NoIntersectionError(
            "auxiliary circle misses the companion circumcircle",
            anchor_distance=anchor,
            companion_radius=dist_in,
            companion_center_distance=radius_in,
            cos_value=exc.context.get("cos_value"),
        ) from exc
    b_polygon = RegularPolygonSpec(p.n, center, dist_in, phase_plus)
    c_polygon = RegularPolygonSpec(p.n, center, dist_in, phase_minus)
    residual = max(
        multiset_residual(d, distances_from(point, b_polygon)),
        multiset_residual(d, distances_from(point, c_polygon)),
    )
    return DualPolygonPair(
        primary_polygon=p,
        point=point,
        b_polygon=b_polygon,
        c_polygon=c_polygon,
        center_direction=normalize_angle(center_direction),
        match_residual=residual,
    )


def verify_permutation(
    d: DistanceSpec,
    x: DistanceSpec,
    tol: float = 1e-9,
    *,
    abs_floor: float = ABS_FLOOR,
) -> PermutationMatch:
    """Best index pairing of the two lists: pi with x[pi[i]] matching d[i].

    Matching in sorted order minimizes the largest pairwise gap, so the
    reported residual is the best achievable over all permutations; the
    permutation itself is returned even on failure.
    """
    if d.n != x.n:
        raise ValueError(f"distance lists differ in length: {d.n} != {x.n}")
    order_d = sorted(range(d.n), key=d.values.__getitem__)
    order_x = sorted(range(x.n), key=x.values.__getitem__)
    perm = [0] * d.n
    ok = True
    residual = 0.0
    for i_d, i_x in zip(order_d, order_x):
        perm[i_d] = i_x
        gap = abs(d.values[i_d] - x.values[i_x])
        residual = max(residual, gap)
        if gap > max(abs_floor, tol * max(abs(d.values[i_d]), abs(x.values[i_x]))):
            ok = False
    return PermutationMatch(ok, tuple(perm), residual)
