"""Command-line front end: JSON in/out, SVG figures, stable formatting.

Every command builds a ``JobRequest``, dispatches through ``run`` and
prints one JSON document (or an SVG for ``render``).  All numbers are
rendered with 17 significant digits and dictionary order is fixed, so
identical requests produce byte-identical output.  Exit codes: 0 on
success, 1 on a domain error (with a machine-readable error object), 2 on
usage or schema violations.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Any, Optional

from . import cyclic, oracle, pompeiu, svg
from .dual import DualSolution, classify_point, solve
from .errors import DomainError, SchemaError
from .geometry import DistanceSpec, Point2, RegularPolygonSpec, distances_from
from .reconstruct import construct_dual, verify_permutation
from .two_points import two_points

COMMANDS = ("averages", "dual", "reconstruct", "pompeiu", "two-points", "verify", "render")


@dataclass(frozen=True)
class JobRequest:
    command: str
    payload: dict[str, Any] = field(default_factory=dict)
    tol: float = 1e-9
    seed: int = 0
    output_path: Optional[str] = None


# ---------------------------------------------------------------------------
# deterministic JSON with 17-significant-digit numbers


def dumps(obj: Any) -> str:
    out: list[str] = []
    _emit(obj, out)
    return "".join(out)


def _emit(obj: Any, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(format(obj, ".17g") if math.isfinite(obj) else "null")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(",")
            out.append(json.dumps(str(k)))
            out.append(":")
            _emit(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(",")
            _emit(v, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


# ---------------------------------------------------------------------------
# payload parsing


def _parse_angle(value: Any) -> float:
    if isinstance(value, bool):
        raise SchemaError("angle must be a number or a 'deg'-suffixed string")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        s = value.strip()
        try:
            if s.endswith("deg"):
                return math.radians(float(s[:-3]))
            return float(s)
        except ValueError as exc:
            raise SchemaError(f"cannot parse angle {value!r}") from exc
    raise SchemaError(f"cannot parse angle {value!r}")


def _parse_distances(payload: dict[str, Any]) -> DistanceSpec:
    raw = payload.get("distances")
    if not isinstance(raw, (list, tuple)) or len(raw) < 3:
        raise SchemaError("'distances' must be an array of at least 3 numbers")
    try:
        return DistanceSpec(tuple(float(v) for v in raw))
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"bad distances: {exc}") from exc


def _parse_point(obj: Any, name: str) -> Point2:
    if not isinstance(obj, dict) or "x" not in obj or "y" not in obj:
        raise SchemaError(f"'{name}' must be an object with 'x' and 'y'")
    try:
        return Point2(float(obj["x"]), float(obj["y"]))
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"bad point '{name}': {exc}") from exc


def _parse_polygon(obj: Any, name: str) -> RegularPolygonSpec:
    if not isinstance(obj, dict):
        raise SchemaError(f"'{name}' must be an object with n, center, r, phase")
    for key in ("n", "center", "r"):
        if key not in obj:
            raise SchemaError(f"'{name}' is missing '{key}'")
    try:
        return RegularPolygonSpec(
            int(obj["n"]),
            _parse_point(obj["center"], f"{name}.center"),
            float(obj["r"]),
            _parse_angle(obj.get("phase", 0.0)),
        )
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"bad polygon '{name}': {exc}") from exc


# ---------------------------------------------------------------------------
# result shaping


def _point_json(p: Point2) -> dict[str, float]:
    return {"x": p.x, "y": p.y}


def _polygon_json(p: RegularPolygonSpec) -> dict[str, Any]:
    return {
        "n": p.n,
        "center": _point_json(p.center),
        "r": p.circumradius,
        "phase": p.phase,
    }


def _consistency_json(report: cyclic.ConsistencyReport) -> dict[str, Any]:
    return {
        "passed": report.passed,
        "moment_inequality_ok": report.moment_inequality_ok,
        "checks": [
            {
                "order": c.order,
                "expected": c.expected,
                "actual": c.actual,
                "residual": c.residual,
                "passed": c.passed,
            }
            for c in report.checks
        ],
    }


def _solution_json(sol: DualSolution) -> dict[str, Any]:
    return {
        "mean_square": sol.mean_square,
        "mean_fourth": sol.mean_fourth,
        "discriminant": sol.discriminant,
        "larger": {
            "circumradius": sol.larger.circumradius,
            "center_distance": sol.larger.center_distance,
        },
        "smaller": {
            "circumradius": sol.smaller.circumradius,
            "center_distance": sol.smaller.center_distance,
        },
        "degeneracy": sol.degeneracy.value,
        "point_class": classify_point(sol).value,
    }


# ---------------------------------------------------------------------------
# command handlers


def _cmd_averages(request: JobRequest) -> dict[str, Any]:
    d = _parse_distances(request.payload)
    max_n = int(request.payload.get("max_n", cyclic.DEFAULT_MAX_N))
    avgs = cyclic.averages_from_distances(d, max_n=max_n)
    report = cyclic.check_consistency(avgs, max(request.tol, 1e-12))
    return {
        "n": avgs.n,
        "values": list(avgs.values),
        "consistency": _consistency_json(report),
    }


def _cmd_dual(request: JobRequest) -> dict[str, Any]:
    d = _parse_distances(request.payload)
    if d.n == 3:
        # the sharper n=3 diagnosis: distances must form a triangle
        pompeiu.pompeiu_from_distances(*d.values, tol=request.tol)
    sol = solve(d, request.tol)
    avgs = cyclic.averages_from_distances(d)
    report = cyclic.check_consistency(avgs, max(request.tol, 1e-12))
    out = _solution_json(sol)
    out["consistency"] = _consistency_json(report)
    return out


def _cmd_reconstruct(request: JobRequest) -> dict[str, Any]:
    p = _parse_polygon(request.payload.get("polygon"), "polygon")
    point = _parse_point(request.payload.get("point"), "point")
    direction = _parse_angle(request.payload.get("direction", 0.0))
    anchor_index = int(request.payload.get("anchor_index", 0))
    pair = construct_dual(
        p, point, direction, request.tol, anchor_index=anchor_index
    )
    d_in = distances_from(point, p)
    d_b = distances_from(point, pair.b_polygon)
    match = verify_permutation(d_in, d_b, max(request.tol, 1e-10))
    return {
        "b_polygon": _polygon_json(pair.b_polygon),
        "c_polygon": _polygon_json(pair.c_polygon),
        "center_direction": pair.center_direction,
        "distances": list(d_in.values),
        "companion_distances": list(d_b.values),
        "match_residual": pair.match_residual,
        "permutation": {
            "ok": match.ok,
            "indices": list(match.permutation),
            "residual": match.residual,
        },
    }


def _cmd_pompeiu(request: JobRequest) -> dict[str, Any]:
    d = _parse_distances(request.payload)
    if d.n != 3:
        raise SchemaError("'pompeiu' needs exactly 3 distances")
    d1, d2, d3 = d.values
    tri = pompeiu.pompeiu_from_distances(d1, d2, d3, request.tol)
    dual = pompeiu.solve_equilateral(tri)
    out: dict[str, Any] = {
        "area": tri.area,
        "degenerate": tri.degenerate,
        "weitzenbock_margin": pompeiu.weitzenbock_margin(tri),
        "side_larger": dual.side_larger,
        "side_smaller": dual.side_smaller,
        "solution": _solution_json(dual.solution),
    }
    if request.payload.get("construct"):
        tp = pompeiu.construct_both_triangles(d1, d2, d3, request.tol)
        out["construction"] = {
            "point": _point_json(tp.point),
            "larger": [_point_json(v) for v in tp.larger],
            "smaller": [_point_json(v) for v in tp.smaller],
        }
    return out


def _cmd_two_points(request: JobRequest) -> dict[str, Any]:
    pa = _parse_polygon(request.payload.get("polygon_a"), "polygon_a")
    pb = _parse_polygon(request.payload.get("polygon_b"), "polygon_b")
    sol = two_points(pa, pb, request.tol)
    return {
        "m1": _point_json(sol.m1),
        "m2": None if sol.m2 is None else _point_json(sol.m2),
        "collinear_degenerate": sol.collinear_degenerate,
        "matches": [
            {
                "ok": m.ok,
                "permutation": list(m.permutation),
                "residual": m.residual,
            }
            for m in sol.matches
        ],
    }


def _cmd_verify(request: JobRequest) -> dict[str, Any]:
    payload = request.payload
    instances = int(payload.get("instances", 20))
    n_min = int(payload.get("n_min", 3))
    n_max = int(payload.get("n_max", 8))
    cfg = oracle.OracleConfig(
        grid_resolution=int(payload.get("grid", 64)),
        refine_iterations=int(payload.get("refine", 3)),
        seed=request.seed,
        tol=float(payload.get("oracle_tol", 1e-6)),
    )
    results = []
    agreed = 0
    found = 0
    worst = 0.0
    for i in range(instances):
        poly, point = oracle.random_instance(request.seed + i, (n_min, n_max))
        res = oracle.search_second_polygon(poly, point, cfg)
        r_in = poly.circumradius
        l_in = point.distance_to(poly.center)
        entry: dict[str, Any] = {
            "seed": request.seed + i,
            "n": poly.n,
            "found": res.found,
            "residual": res.residual,
        }
        if res.found and res.polygon is not None:
            found += 1
            err = max(
                abs(res.polygon.circumradius - l_in),
                abs(point.distance_to(res.polygon.center) - r_in),
            ) / max(r_in, l_in)
            entry["param_error"] = err
            worst = max(worst, err)
            if err <= 1e-5:
                agreed += 1
        results.append(entry)
    return {
        "instances": instances,
        "found": found,
        "agreed": agreed,
        "max_param_error": worst,
        "results": results,
    }


def _cmd_render(request: JobRequest) -> dict[str, Any]:
    payload = request.payload
    scene_kind = payload.get("scene")
    if scene_kind == "dual":
        p = _parse_polygon(payload.get("polygon"), "polygon")
        point = _parse_point(payload.get("point"), "point")
        direction = _parse_angle(payload.get("direction", 0.0))
        pair = construct_dual(p, point, direction, request.tol,
                              anchor_index=int(payload.get("anchor_index", 0)))
        scene = svg.scene_from_dual_pair(pair, include_mirror=bool(payload.get("mirror")))
    elif scene_kind == "two-points":
        pa = _parse_polygon(payload.get("polygon_a"), "polygon_a")
        pb = _parse_polygon(payload.get("polygon_b"), "polygon_b")
        scene = svg.scene_from_two_points(pa, pb, two_points(pa, pb, request.tol))
    elif scene_kind == "pompeiu":
        d = _parse_distances(payload)
        if d.n != 3:
            raise SchemaError("'pompeiu' scene needs exactly 3 distances")
        scene = svg.scene_from_triangle_pair(
            pompeiu.construct_both_triangles(*d.values, tol=request.tol)
        )
    else:
        raise SchemaError("'scene' must be one of dual, two-points, pompeiu")
    return {"svg": svg.render_svg(scene)}


_HANDLERS = {
    "averages": _cmd_averages,
    "dual": _cmd_dual,
    "reconstruct": _cmd_reconstruct,
    "pompeiu": _cmd_pompeiu,
    "two-points": _cmd_two_points,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def run(request: JobRequest) -> tuple[dict[str, Any], int]:
    """Dispatch a request; returns the JSON-ready result and an exit status."""
    if request.command not in _HANDLERS:
        raise SchemaError(f"unknown command {request.command!r}")
    if not isinstance(request.payload, dict):
        raise SchemaError("payload must be an object")
    try:
        return _HANDLERS[request.command](request), 0
    except DomainError as exc:
        context = {
            k: (v if isinstance(v, (int, float, str, bool, type(None))) else str(v))
            for k, v in exc.context.items()
        }
        return {"code": exc.code, "message": exc.message, "context": context}, 1


# ---------------------------------------------------------------------------
# argument parsing


def _csv_floats(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError as exc:
        raise SchemaError(f"cannot parse number list {text!r}") from exc


def _polygon_payload(text: str, name: str) -> dict[str, Any]:
    parts = [part.strip() for part in text.split(",")]
    if len(parts) not in (4, 5):
        raise SchemaError(f"'{name}' must be 'n,cx,cy,r[,phase]'")
    try:
        return {
            "n": int(parts[0]),
            "center": {"x": float(parts[1]), "y": float(parts[2])},
            "r": float(parts[3]),
            "phase": parts[4] if len(parts) == 5 else 0.0,
        }
    except ValueError as exc:
        raise SchemaError(f"bad polygon literal {text!r}") from exc


def _point_payload(text: str) -> dict[str, Any]:
    parts = text.split(",")
    if len(parts) != 2:
        raise SchemaError("'--point' must be 'x,y'")
    try:
        return {"x": float(parts[0]), "y": float(parts[1])}
    except ValueError as exc:
        raise SchemaError(f"bad point literal {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polydual",
        description="Both regular n-gons realizing a list of point-to-vertex distances",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--tol", type=float, default=1e-9)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", default=None)

    sp = sub.add_parser("averages", help="even-power distance means and closure checks")
    sp.add_argument("--distances", required=True)
    sp.add_argument("--max-n", type=int, default=cyclic.DEFAULT_MAX_N)
    common(sp)

    sp = sub.add_parser("dual", help="both size-parameter pairs from distances")
    sp.add_argument("--distances", required=True)
    common(sp)

    sp = sub.add_parser("reconstruct", help="coordinates of the companion polygon")
    sp.add_argument("--polygon", required=True, help="n,cx,cy,r[,phase]")
    sp.add_argument("--point", required=True, help="x,y")
    sp.add_argument("--direction", default="0")
    sp.add_argument("--anchor-index", type=int, default=0)
    common(sp)

    sp = sub.add_parser("pompeiu", help="equilateral-triangle closed forms")
    sp.add_argument("--distances", required=True)
    sp.add_argument("--construct", action="store_true")
    common(sp)

    sp = sub.add_parser("two-points", help="equal-multiset points for a shared-vertex pair")
    sp.add_argument("--polygon-a", required=True, help="n,cx,cy,r[,phase]")
    sp.add_argument("--polygon-b", required=True, help="n,cx,cy,r[,phase]")
    common(sp)

    sp = sub.add_parser("verify", help="closed-form-free search vs solver agreement")
    sp.add_argument("--instances", type=int, default=20)
    sp.add_argument("--n-min", type=int, default=3)
    sp.add_argument("--n-max", type=int, default=8)
    sp.add_argument("--grid", type=int, default=64)
    sp.add_argument("--refine", type=int, default=3)
    common(sp)

    sp = sub.add_parser("render", help="emit an SVG figure")
    sp.add_argument("--scene", required=True, choices=("dual", "two-points", "pompeiu"))
    sp.add_argument("--polygon")
    sp.add_argument("--point")
    sp.add_argument("--direction", default="0")
    sp.add_argument("--anchor-index", type=int, default=0)
    sp.add_argument("--distances")
    sp.add_argument("--polygon-a")
    sp.add_argument("--polygon-b")
    sp.add_argument("--mirror", action="store_true")
    sp.add_argument("--format", choices=("json", "svg"), default="svg")
    common(sp)

    return parser


def _request_from_args(args: argparse.Namespace) -> JobRequest:
    command = args.command
    payload: dict[str, Any] = {}
    if command in ("averages", "dual", "pompeiu"):
        payload["distances"] = _csv_floats(args.distances)
        if command == "averages":
            payload["max_n"] = args.max_n
        if command == "pompeiu":
            payload["construct"] = bool(args.construct)
    elif command == "reconstruct":
        payload["polygon"] = _polygon_payload(args.polygon, "polygon")
        payload["point"] = _point_payload(args.point)
        payload["direction"] = args.direction
        payload["anchor_index"] = args.anchor_index
    elif command == "two-points":
        payload["polygon_a"] = _polygon_payload(args.polygon_a, "polygon_a")
        payload["polygon_b"] = _polygon_payload(args.polygon_b, "polygon_b")
    elif command == "verify":
        payload.update(
            instances=args.instances,
            n_min=args.n_min,
            n_max=args.n_max,
            grid=args.grid,
            refine=args.refine,
        )
    elif command == "render":
        payload["scene"] = args.scene
        payload["mirror"] = bool(args.mirror)
        payload["format"] = args.format
        if args.polygon:
            payload["polygon"] = _polygon_payload(args.polygon, "polygon")
        if args.point:
            payload["point"] = _point_payload(args.point)
        if args.distances:
            payload["distances"] = _csv_floats(args.distances)
        if args.polygon_a:
            payload["polygon_a"] = _polygon_payload(args.polygon_a, "polygon_a")
        if args.polygon_b:
            payload["polygon_b"] = _polygon_payload(args.polygon_b, "polygon_b")
        payload["direction"] = args.direction
        payload["anchor_index"] = args.anchor_index
    return JobRequest(
        command=command,
        payload=payload,
        tol=args.tol,
        seed=args.seed,
        output_path=args.out,
    )


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        request = _request_from_args(args)
        result, code = run(request)
    except SchemaError as exc:
        sys.stderr.write(f"schema error: {exc}\n")
        return 2
    if request.command == "render" and code == 0 and request.payload.get("format") == "svg":
        text = result["svg"]
    else:
        text = dumps(result) + "\n"
    if request.output_path:
        with open(request.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
