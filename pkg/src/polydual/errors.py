"""Exception types shared across the package.

Every domain failure carries a stable machine-readable ``code`` so the CLI
can map it onto its error-object contract.
"""

from __future__ import annotations

from typing import Any


class DomainError(Exception):
    """Base class for geometric/algebraic domain failures (CLI exit code 1)."""

    code = "DOMAIN"

    def __init__(self, message: str, **context: Any) -> None:
        super().__init__(message)
        self.message = message
        self.context = context


class RealizabilityError(DomainError):
    """The distance list cannot come from any point/regular-polygon pair."""

    code = "REALIZABILITY"


class DegenerateError(DomainError):
    """A construction was requested in a degenerate configuration."""

    code = "DEGENERATE"


class NoIntersectionError(DomainError):
    """Two construction circles that must meet failed to intersect."""

    code = "NO_INTERSECTION"


class RangeError(DomainError):
    """A law-of-cosines inversion left the valid cosine range."""

    code = "RANGE"


class TriangleInequalityError(DomainError):
    """Three lengths violate the triangle inequality beyond tolerance."""

    code = "TRIANGLE_INEQUALITY"


class ConcentricError(DomainError):
    """Circle intersection is ill-posed: the circles coincide."""

    code = "CONCENTRIC"


class SharedVertexError(DomainError):
    """The two polygons do not share a vertex."""

    code = "SHARED_VERTEX"


class CongruentError(DomainError):
    """The two polygons are congruent within tolerance."""

    code = "CONGRUENT"


class SchemaError(Exception):
    """Malformed CLI/JSON request (CLI exit code 2)."""
