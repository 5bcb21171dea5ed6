#!/usr/bin/env python3
"""Emit the standard set of SVG figures into a directory.

Covers the three scene types: the companion construction for a square and
a regular pentagon, the two equilateral triangles of a 3-5-7 distance
triple, and the two-points configuration for a shared-vertex square pair.
"""

from __future__ import annotations

import argparse
import math
from pathlib import Path

from polydual.geometry import Point2, RegularPolygonSpec
from polydual.pompeiu import construct_both_triangles
from polydual.reconstruct import construct_dual
from polydual.svg import (
    render_svg,
    scene_from_dual_pair,
    scene_from_triangle_pair,
    scene_from_two_points,
)
from polydual.two_points import two_points


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figures")
    args = parser.parse_args()
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    square = RegularPolygonSpec(4, Point2(0.0, 0.0), math.sqrt(2.0), math.pi / 4)
    point = Point2(1.0, 0.0)
    pair = construct_dual(square, point, 0.0)
    (out / "square_companion.svg").write_text(
        render_svg(scene_from_dual_pair(pair, include_mirror=True)), encoding="utf-8"
    )

    pentagon = RegularPolygonSpec(5, Point2(0.0, 0.0), 1.3, 0.2)
    pair = construct_dual(pentagon, Point2(0.6, 0.25), 0.8)
    (out / "pentagon_companion.svg").write_text(
        render_svg(scene_from_dual_pair(pair, include_mirror=True)), encoding="utf-8"
    )

    tp = construct_both_triangles(3.0, 5.0, 7.0)
    (out / "triangles_3_5_7.svg").write_text(
        render_svg(scene_from_triangle_pair(tp)), encoding="utf-8"
    )

    pa = square
    pb = RegularPolygonSpec(4, Point2(2.0, 1.0), 1.0, math.pi)
    sol = two_points(pa, pb)
    (out / "two_points_squares.svg").write_text(
        render_svg(scene_from_two_points(pa, pb, sol)), encoding="utf-8"
    )

    for name in sorted(p.name for p in out.glob("*.svg")):
        print(out / name)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
