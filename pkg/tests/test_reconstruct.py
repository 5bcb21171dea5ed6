import math

import numpy as np
import pytest

from conftest import random_configuration
from polydual.dual import solve
from polydual.errors import DegenerateError, RangeError
from polydual.geometry import (
    DistanceSpec,
    Point2,
    RegularPolygonSpec,
    distances_from,
    multiset_equal,
    multiset_residual,
    vertices,
)
from polydual.cyclic import averages_from_distances
from polydual.reconstruct import construct_dual, solve_phase, verify_permutation

SQRT2 = math.sqrt(2.0)
SQRT5 = math.sqrt(5.0)
TWO_PI = 2.0 * math.pi


def unit_square():
    return RegularPolygonSpec(4, Point2(0.0, 0.0), SQRT2, math.pi / 4)


class TestSolvePhase:
    def test_square_companion_angle(self):
        center = Point2(1.0 + SQRT2, 0.0)
        point = Point2(1.0, 0.0)
        plus, minus = solve_phase(point, center, 4, 1.0, SQRT2, 1.0)
        # cos(alpha) = (1 + 2 - 1) / (2*sqrt(2)) = 1/sqrt(2)
        base = math.pi
        assert plus == pytest.approx(base + math.pi / 4, rel=1e-12)
        assert minus == pytest.approx(base - math.pi / 4, rel=1e-12)

    def test_anchor_at_sum_is_unique(self):
        center = Point2(3.0, 0.0)
        point = Point2(0.0, 0.0)
        plus, minus = solve_phase(point, center, 5, 1.0, 3.0, 4.0)
        # alpha = pi: the two phases coincide at the far pole
        assert math.cos(plus) == pytest.approx(math.cos(minus), abs=1e-12)
        assert plus == pytest.approx((math.pi + math.pi) % TWO_PI, abs=1e-6)

    def test_anchor_at_difference_is_unique(self):
        center = Point2(3.0, 0.0)
        point = Point2(0.0, 0.0)
        plus, minus = solve_phase(point, center, 5, 1.0, 3.0, 2.0)
        assert plus == pytest.approx(math.pi, rel=1e-12)
        assert minus == pytest.approx(math.pi, rel=1e-12)

    def test_out_of_range_anchor(self):
        center = Point2(3.0, 0.0)
        point = Point2(0.0, 0.0)
        with pytest.raises(RangeError):
            solve_phase(point, center, 5, 1.0, 3.0, 4.1)
        with pytest.raises(RangeError):
            solve_phase(point, center, 5, 1.0, 3.0, 1.9)


class TestConstructDual:
    def test_square_worked_example(self):
        pair = construct_dual(unit_square(), Point2(1.0, 0.0), 0.0)
        b = pair.b_polygon
        assert b.center.x == pytest.approx(1.0 + SQRT2, rel=1e-12)
        assert b.center.y == pytest.approx(0.0, abs=1e-12)
        assert b.circumradius == pytest.approx(1.0, rel=1e-12)
        # one vertex sits at angle pi/4 from the companion center
        angles = [(b.phase + TWO_PI * i / 4) % TWO_PI for i in range(4)]
        assert any(abs(a - math.pi / 4) < 1e-9 for a in angles)
        d = distances_from(Point2(1.0, 0.0), b)
        assert multiset_equal(d, DistanceSpec((1.0, 1.0, SQRT5, SQRT5)), 1e-9)
        assert pair.match_residual <= 1e-12

    def test_equilateral_three_five_seven(self):
        # place the distance triple around an equilateral triangle of side 8
        from polydual.pompeiu import construct_both_triangles

        tp = construct_both_triangles(3.0, 5.0, 7.0)
        tri = tp.larger
        cx = sum(v.x for v in tri) / 3.0
        cy = sum(v.y for v in tri) / 3.0
        center = Point2(cx, cy)
        p = RegularPolygonSpec(
            3, center, center.distance_to(tri[0]), math.atan2(tri[0].y - cy, tri[0].x - cx)
        )
        pair = construct_dual(p, tp.point, 1.234)
        assert pair.b_polygon.circumradius == pytest.approx(math.sqrt(19.0 / 3.0), rel=1e-12)
        side = pair.b_polygon.circumradius * math.sqrt(3.0)
        assert side == pytest.approx(math.sqrt(19.0), rel=1e-12)

    def test_point_on_circumcircle_is_degenerate(self):
        with pytest.raises(DegenerateError):
            construct_dual(unit_square(), Point2(SQRT2, 0.0), 0.0)

    def test_point_at_center_is_degenerate(self):
        with pytest.raises(DegenerateError):
            construct_dual(unit_square(), Point2(0.0, 0.0), 0.0)

    def test_full_circle_of_directions(self):
        rng = np.random.default_rng(777)
        for _ in range(100):
            poly, point = random_configuration(rng)
            d = distances_from(point, poly)
            direction = float(rng.uniform(0.0, TWO_PI))
            pair = construct_dual(poly, point, direction)
            scale = max(d.values)
            for q in (pair.b_polygon, pair.c_polygon):
                assert multiset_residual(d, distances_from(point, q)) <= 1e-8 * scale
            # swap conditions: companion center at the original circumradius,
            # companion radius equal to the original center distance
            radius = poly.circumradius
            dist = point.distance_to(poly.center)
            assert point.distance_to(pair.b_polygon.center) == pytest.approx(
                radius, rel=1e-10
            )
            assert pair.b_polygon.circumradius == pytest.approx(
                dist, rel=1e-10, abs=1e-12 * scale
            )

    def test_power_sum_transfer(self):
        rng = np.random.default_rng(778)
        for _ in range(60):
            poly, point = random_configuration(rng)
            d = distances_from(point, poly)
            pair = construct_dual(poly, point, float(rng.uniform(0.0, TWO_PI)))
            x = distances_from(point, pair.b_polygon)
            for a, b in zip(
                averages_from_distances(d).values, averages_from_distances(x).values
            ):
                assert abs(a - b) <= 1e-9 * max(abs(a), abs(b), 1e-300)

    def test_mirror_pair(self):
        rng = np.random.default_rng(779)
        for _ in range(60):
            poly, point = random_configuration(rng)
            pair = construct_dual(poly, point, float(rng.uniform(0.0, TWO_PI)))
            d_b = distances_from(point, pair.b_polygon)
            d_c = distances_from(point, pair.c_polygon)
            assert multiset_equal(d_b, d_c, 1e-9)
            # reflecting b across the line point -> companion center gives c
            axis = math.atan2(
                pair.b_polygon.center.y - point.y, pair.b_polygon.center.x - point.x
            )
            vb = vertices(pair.b_polygon)
            vc = vertices(pair.c_polygon)
            for v in vb:
                rel = math.atan2(v.y - point.y, v.x - point.x)
                radius = point.distance_to(v)
                mirrored = Point2(
                    point.x + radius * math.cos(2 * axis - rel),
                    point.y + radius * math.sin(2 * axis - rel),
                )
                assert any(mirrored.distance_to(w) < 1e-7 * max(radius, 1.0) for w in vc)

    def test_anchor_index_choice(self):
        poly, point = random_configuration(np.random.default_rng(780))
        d = distances_from(point, poly)
        for k in range(poly.n):
            pair = construct_dual(poly, point, 0.3, anchor_index=k)
            assert multiset_equal(d, distances_from(point, pair.b_polygon), 1e-8)
            anchored = vertices(pair.b_polygon)[0]
            assert point.distance_to(anchored) == pytest.approx(
                d.values[k], rel=1e-9, abs=1e-12 * max(d.values)
            )

    def test_involution_through_solve(self):
        rng = np.random.default_rng(781)
        for _ in range(60):
            poly, point = random_configuration(rng)
            sol = solve(distances_from(point, poly))
            pair = construct_dual(poly, point, float(rng.uniform(0.0, TWO_PI)))
            sol_b = solve(distances_from(point, pair.b_polygon))
            for a, b in (
                (sol.larger.circumradius, sol_b.larger.circumradius),
                (sol.larger.center_distance, sol_b.larger.center_distance),
                (sol.smaller.circumradius, sol_b.smaller.circumradius),
                (sol.smaller.center_distance, sol_b.smaller.center_distance),
            ):
                assert abs(a - b) <= 1e-8 * max(a, b, 1e-300)


class TestVerifyPermutation:
    def test_identity(self):
        d = DistanceSpec((1.0, SQRT5, SQRT5, 1.0))
        match = verify_permutation(d, d, 1e-9)
        assert match.ok
        assert match.permutation == (0, 1, 2, 3)
        assert match.residual == 0.0

    def test_reversal(self):
        d = DistanceSpec((1.0, 2.0, 3.0, 4.0))
        x = DistanceSpec((4.0, 3.0, 2.0, 1.0))
        match = verify_permutation(d, x, 1e-9)
        assert match.ok
        assert match.permutation == (3, 2, 1, 0)

    def test_failure_reports_residual(self):
        match = verify_permutation(DistanceSpec((1, 2, 3)), DistanceSpec((1, 2, 4)), 1e-9)
        assert not match.ok
        assert match.residual == pytest.approx(1.0)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            verify_permutation(DistanceSpec((1, 2, 3)), DistanceSpec((1, 2, 3, 4)), 1e-9)
