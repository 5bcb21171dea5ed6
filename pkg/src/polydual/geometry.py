"""Planar primitives: points, regular polygons, vertex distances.

All types are immutable values and every function is pure, so everything
here can be shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

TWO_PI = 2.0 * math.pi

#: Absolute floor used when comparing lengths that may be exactly zero.
ABS_FLOOR = 1e-12


def normalize_angle(angle: float) -> float:
    """Reduce an angle to [0, 2*pi)."""
    a = angle % TWO_PI
    # a tiny negative input can round up to exactly 2*pi
    return 0.0 if a >= TWO_PI else a


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"coordinates must be finite, got ({self.x}, {self.y})")

    def distance_to(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


def azimuth(origin: Point2, target: Point2) -> float:
    """Angle of the ray origin -> target, counterclockwise from the +x axis."""
    return math.atan2(target.y - origin.y, target.x - origin.x)


def rotate_about(p: Point2, center: Point2, angle: float) -> Point2:
    """Rotate ``p`` about ``center`` by ``angle`` radians, counterclockwise."""
    c, s = math.cos(angle), math.sin(angle)
    dx, dy = p.x - center.x, p.y - center.y
    return Point2(center.x + c * dx - s * dy, center.y + s * dx + c * dy)


@dataclass(frozen=True)
class RegularPolygonSpec:
    """A regular n-gon given by center, circumradius and first-vertex angle.

    ``circumradius == 0`` is allowed as an explicit degenerate carrier; all
    vertices then collapse onto the center.  The phase is normalized to
    [0, 2*pi) on construction.
    """

    n: int
    center: Point2
    circumradius: float
    phase: float = 0.0

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"need at least 3 vertices, got n={self.n}")
        if not math.isfinite(self.circumradius) or self.circumradius < 0.0:
            raise ValueError(
                f"circumradius must be finite and >= 0, got {self.circumradius}"
            )
        if not math.isfinite(self.phase):
            raise ValueError("phase must be finite")
        object.__setattr__(self, "phase", normalize_angle(self.phase))


@dataclass(frozen=True)
class DistanceSpec:
    """Ordered distances from one point to the n polygon vertices."""

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        vals = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) < 3:
            raise ValueError(f"need at least 3 distances, got {len(vals)}")
        for v in vals:
            if not math.isfinite(v) or v < 0.0:
                raise ValueError(f"distances must be finite and >= 0, got {v}")

    @property
    def n(self) -> int:
        return len(self.values)


def make_distances(values: Iterable[float]) -> DistanceSpec:
    return DistanceSpec(tuple(values))


def vertices(p: RegularPolygonSpec) -> list[Point2]:
    """Vertices in counterclockwise order; vertex i at angle phase + 2*pi*i/n."""
    step = TWO_PI / p.n
    return [
        Point2(
            p.center.x + p.circumradius * math.cos(p.phase + step * i),
            p.center.y + p.circumradius * math.sin(p.phase + step * i),
        )
        for i in range(p.n)
    ]


def distances_from(point: Point2, p: RegularPolygonSpec) -> DistanceSpec:
    """Euclidean distances from ``point`` to each vertex, in vertex order.

    Computed by coordinate subtraction rather than the law of cosines; the
    direct form has no cancellation blow-up near the circumcircle.
    """
    return DistanceSpec(tuple(point.distance_to(v) for v in vertices(p)))


def multiset_equal(
    a: DistanceSpec,
    b: DistanceSpec,
    tol: float = 1e-9,
    *,
    abs_floor: float = ABS_FLOOR,
) -> bool:
    """True iff the sorted value lists agree elementwise.

    Each pair is compared with tolerance max(abs_floor, tol*max(|x|, |y|)),
    so values near zero still compare sanely.  Mismatched lengths are a
    caller bug, not inequality.
    """
    if a.n != b.n:
        raise ValueError(f"distance lists differ in length: {a.n} != {b.n}")
    for x, y in zip(sorted(a.values), sorted(b.values)):
        if abs(x - y) > max(abs_floor, tol * max(abs(x), abs(y))):
            return False
    return True


def multiset_residual(a: DistanceSpec, b: DistanceSpec) -> float:
    """Largest elementwise gap between the two sorted value lists."""
    if a.n != b.n:
        raise ValueError(f"distance lists differ in length: {a.n} != {b.n}")
    return max(abs(x - y) for x, y in zip(sorted(a.values), sorted(b.values)))
