"""Closed-form-free search for a second polygon with matching distances.

This is the trust anchor for the algebraic solver: candidates are scored
purely by the gap between sorted distance lists, scanned on a coarse grid
and polished by deterministic pattern descent, with the input's own
parameter pair excluded from the answers.  Nothing here consumes the
solver or the reconstruction code; only the geometric primitives are
used.

A candidate polygon is parameterized by the azimuth of its center about
the query point, the center distance, the circumradius and the phase.
The distance multiset depends on the phase only through its offset from
the center azimuth and repeats every 2*pi/n, so the phase grid covers one
period; the sorted-distance objective is also exactly symmetric under
swapping radius and center distance, which is why every descent seed is
paired with its swapped twin (this exploits a symmetry of the candidate
parameterization, not of the expected answer).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geometry import TWO_PI, Point2, RegularPolygonSpec, distances_from

#: Half-width of the excluded band of center-distance/radius ratios
#: around 1 in random instances (total width 1e-3).
RATIO_EXCLUSION_HALF_WIDTH = 5e-4

#: Relative size of the ball around the input parameters treated as
#: congruent and excluded from answers.  Must stay below the random
#: instances' ratio exclusion band so the genuine second polygon is
#: never excluded by accident.
CONGRUENT_EXCLUSION_REL = 2e-4

#: Coarse samples per size dimension inside every angular grid cell.
COARSE_SIZE_STEPS = 12

#: Number of grid cells seeding the descent stage.
DESCENT_SEEDS = 8


@dataclass(frozen=True)
class OracleConfig:
    """Search controls.

    ``tol`` is relative to the largest target distance: a candidate is a
    find when its worst sorted-distance gap is below tol times that
    scale.
    """

    grid_resolution: int = 64
    refine_iterations: int = 3
    seed: int = 0
    tol: float = 1e-6

    def __post_init__(self) -> None:
        if self.grid_resolution < 8:
            raise ValueError("grid_resolution must be >= 8")
        if self.refine_iterations < 0:
            raise ValueError("refine_iterations must be >= 0")


@dataclass(frozen=True)
class OracleResult:
    found: bool
    polygon: Optional[RegularPolygonSpec]
    residual: float
    samples_evaluated: int


def random_instance(
    seed: int,
    n_range: tuple[int, int] = (3, 12),
    *,
    degenerate_mode: bool = False,
) -> tuple[RegularPolygonSpec, Point2]:
    """Deterministic random polygon/point configuration.

    The vertex count is uniform over the range, the circumradius
    log-uniform in [0.1, 10], the point's center-distance/radius ratio
    uniform in [0, 3] minus a narrow band around 1 (so the point never
    accidentally sits on the circumcircle), and the phase and point
    azimuth uniform.  ``degenerate_mode`` pins the ratio to exactly 1
    instead.
    """
    lo, hi = n_range
    if not 3 <= lo <= hi:
        raise ValueError(f"invalid vertex-count range {n_range}")
    rng = np.random.default_rng(seed)
    n = int(rng.integers(lo, hi + 1))
    radius = float(np.exp(rng.uniform(np.log(0.1), np.log(10.0))))
    if degenerate_mode:
        ratio = 1.0
    else:
        ratio = float(rng.uniform(0.0, 3.0))
        while abs(ratio - 1.0) < RATIO_EXCLUSION_HALF_WIDTH:
            ratio = float(rng.uniform(0.0, 3.0))
    phase = float(rng.uniform(0.0, TWO_PI))
    point_azimuth = float(rng.uniform(0.0, TWO_PI))
    dist = ratio * radius
    polygon = RegularPolygonSpec(n, Point2(0.0, 0.0), radius, phase)
    point = Point2(dist * math.cos(point_azimuth), dist * math.sin(point_azimuth))
    return polygon, point


def _objective(
    n: int,
    point: Point2,
    target: list[float],
    phi: float,
    theta: float,
    ell: float,
    radius: float,
) -> float:
    cx = point.x + ell * math.cos(phi)
    cy = point.y + ell * math.sin(phi)
    ds = []
    for k in range(n):
        a = theta + TWO_PI * k / n
        ds.append(math.hypot(cx + radius * math.cos(a) - point.x, cy + radius * math.sin(a) - point.y))
    ds.sort()
    return sum((u - v) * (u - v) for u, v in zip(ds, target))


def _pattern_descent(
    n: int,
    point: Point2,
    target: list[float],
    start: tuple[float, float, float, float],
    steps: tuple[float, float, float, float],
    bounds_ell: tuple[float, float],
    bounds_r: tuple[float, float],
    stop_step: float,
    stop_objective: float,
    budget: int = 20000,
) -> tuple[tuple[float, float, float, float], float, int]:
    """Compass search over (phi, theta, ell, radius); angles wrap, sizes clip.

    Besides the four axis probes, each sweep tries the two diagonal moves
    that trade center distance against radius; near-equal parameter pairs
    form a narrow curved valley in exactly that direction and axis-only
    search stalls there.
    """
    x = list(start)
    f = _objective(n, point, target, *x)
    evals = 1
    step = list(steps)
    theta_period = TWO_PI / n
    while f > stop_objective and max(step[2], step[3]) > stop_step and evals < budget:
        h = min(step[2], step[3])
        moves = (
            (step[0], 0.0, 0.0, 0.0),
            (-step[0], 0.0, 0.0, 0.0),
            (0.0, step[1], 0.0, 0.0),
            (0.0, -step[1], 0.0, 0.0),
            (0.0, 0.0, step[2], 0.0),
            (0.0, 0.0, -step[2], 0.0),
            (0.0, 0.0, 0.0, step[3]),
            (0.0, 0.0, 0.0, -step[3]),
            (0.0, 0.0, h, -h),
            (0.0, 0.0, -h, h),
        )
        improved = False
        for move in moves:
            trial = [
                (x[0] + move[0]) % TWO_PI,
                (x[1] + move[1]) % theta_period,
                min(max(x[2] + move[2], bounds_ell[0]), bounds_ell[1]),
                min(max(x[3] + move[3], bounds_r[0]), bounds_r[1]),
            ]
            ft = _objective(n, point, target, *trial)
            evals += 1
            if ft < f:
                x, f = trial, ft
                improved = True
                break
        if not improved:
            step = [s * 0.5 for s in step]
    return (x[0], x[1], x[2], x[3]), f, evals


def search_second_polygon(
    p: RegularPolygonSpec,
    point: Point2,
    cfg: OracleConfig = OracleConfig(),
) -> OracleResult:
    """Best non-congruent polygon matching the distance multiset.

    Grid stage: for every cell of the angular grid (center azimuth by
    phase), the sorted-distance mismatch is minimized over a coarse grid
    of center distances and radii; the size bounds come from plain
    geometry (the center is the vertex centroid, so its distance from
    the point is at most the mean target distance).  Descent stage: the
    best separated cells, plus their radius/center-distance swapped
    twins, seed compass searches; results inside the congruent exclusion
    ball around the input parameters are discarded.
    """
    n = p.n
    target_arr = np.sort(np.asarray(distances_from(point, p).values, dtype=float))
    scale = float(target_arr[-1])
    if scale <= 0.0:
        return OracleResult(False, None, math.inf, 0)
    target = [float(v) for v in target_arr]
    r_in = p.circumradius
    l_in = point.distance_to(p.center)
    param_scale = max(r_in, l_in)
    mean_d = float(target_arr.mean())
    min_d = float(target_arr[0])

    ell_hi = mean_d * (1.0 + 1e-9)
    r_lo = max(0.0, scale - ell_hi)
    # realizable inputs always give r_lo <= r_hi; keep the grid sane otherwise
    r_hi = max(min_d + ell_hi, r_lo)

    res = cfg.grid_resolution
    phis = np.linspace(0.0, TWO_PI, res, endpoint=False)
    theta_period = TWO_PI / n
    thetas = np.linspace(0.0, theta_period, res, endpoint=False)
    ells = np.linspace(0.0, ell_hi, COARSE_SIZE_STEPS)
    radii = np.linspace(r_lo, r_hi, COARSE_SIZE_STEPS)

    vertex_offsets = TWO_PI * np.arange(n) / n
    ll = ells[:, None, None]
    rr = radii[None, :, None]
    sq = ll * ll + rr * rr
    cross = 2.0 * ll * rr
    samples = 0
    cell_records = []  # (objective, phi_idx, theta_idx, ell_idx, r_idx)
    for i, phi in enumerate(phis):
        # relative vertex angles as seen from the candidate center
        ang = thetas[:, None] + vertex_offsets[None, :] - (phi + math.pi)
        cosang = np.cos(ang)  # [theta, k]
        d2 = sq[None, :, :, :] - cross[None, :, :, :] * cosang[:, None, None, :]
        np.maximum(d2, 0.0, out=d2)
        dists = np.sort(np.sqrt(d2), axis=-1)
        diff = dists - target_arr
        obj = np.einsum("tlrk,tlrk->tlr", diff, diff)
        samples += obj.size
        flat = np.argsort(obj, axis=None)[: 2 * DESCENT_SEEDS]
        for idx in flat:
            t_i, l_i, r_i = np.unravel_index(idx, obj.shape)
            cell_records.append((float(obj[t_i, l_i, r_i]), i, int(t_i), int(l_i), int(r_i)))

    cell_records.sort(key=lambda rec: rec[0])
    # greedy pick of well-separated cells so the seeds cover distinct basins
    picked = []
    for rec in cell_records:
        _, pi_, ti_, li_, ri_ = rec
        dup = False
        for _, pj, tj, lj, rj in picked:
            d_phi = min(abs(pi_ - pj), res - abs(pi_ - pj))
            d_theta = min(abs(ti_ - tj), res - abs(ti_ - tj))
            if d_phi <= 1 and d_theta <= 1 and abs(li_ - lj) <= 1 and abs(ri_ - rj) <= 1:
                dup = True
                break
        if not dup:
            picked.append(rec)
        if len(picked) >= DESCENT_SEEDS:
            break

    phi_step = TWO_PI / res
    theta_step = theta_period / res
    ell_step = ell_hi / (COARSE_SIZE_STEPS - 1)
    r_step = (r_hi - r_lo) / (COARSE_SIZE_STEPS - 1) or ell_step
    stop_step = 1e-13 * max(scale, 1e-30)
    stop_objective = (1e-9 * scale) ** 2

    seeds = []
    for _, pi_, ti_, li_, ri_ in picked:
        base = (float(phis[pi_]), float(thetas[ti_]), float(ells[li_]), float(radii[ri_]))
        seeds.append(base)
        # swapped twin: same objective value by the radius/center-distance symmetry
        twin_ell = min(max(base[3], 0.0), ell_hi)
        twin_r = min(max(base[2], r_lo), r_hi)
        seeds.append((base[0], base[1], twin_ell, twin_r))

    exclusion_radius = CONGRUENT_EXCLUSION_REL * max(param_scale, 1e-30)

    def is_congruent(x: tuple[float, float, float, float]) -> bool:
        return max(abs(x[3] - r_in), abs(x[2] - l_in)) <= exclusion_radius

    best_excluded: tuple[float, Optional[tuple[float, float, float, float]]] = (math.inf, None)
    best_kept: tuple[float, Optional[tuple[float, float, float, float]]] = (math.inf, None)
    for seed_x in seeds:
        x = seed_x
        f = math.inf
        for level in range(max(1, cfg.refine_iterations)):
            shrink = 10.0**level
            x, f, ev = _pattern_descent(
                n,
                point,
                target,
                x,
                (phi_step / shrink, theta_step / shrink, ell_step / shrink, r_step / shrink),
                (0.0, ell_hi),
                (r_lo, r_hi),
                stop_step,
                stop_objective,
            )
            samples += ev
            if f <= stop_objective:
                break
        if is_congruent(x):
            if f < best_excluded[0]:
                best_excluded = (f, x)
        elif f < best_kept[0]:
            best_kept = (f, x)

    if best_excluded[1] is not None and best_excluded[0] < best_kept[0]:
        # swap the best congruent result; by the objective's exact symmetry
        # the swapped point scores identically and sits in the other basin,
        # so a fine-stepped descent refines the non-congruent twin
        xe = best_excluded[1]
        swapped = (
            xe[0],
            xe[1],
            min(max(xe[3], 0.0), ell_hi),
            min(max(xe[2], r_lo), r_hi),
        )
        h = max(0.25 * abs(xe[2] - xe[3]), 10.0 * stop_step)
        x, f, ev = _pattern_descent(
            n,
            point,
            target,
            swapped,
            (phi_step / 100.0, theta_step / 100.0, h, h),
            (0.0, ell_hi),
            (r_lo, r_hi),
            stop_step,
            stop_objective,
        )
        samples += ev
        if not is_congruent(x) and f < best_kept[0]:
            best_kept = (f, x)

    if best_kept[1] is None:
        return OracleResult(False, None, math.inf, samples)
    phi, theta, ell, radius = best_kept[1]
    center = Point2(point.x + ell * math.cos(phi), point.y + ell * math.sin(phi))
    candidate = RegularPolygonSpec(n, center, radius, theta)
    found_d = sorted(distances_from(point, candidate).values)
    residual = max(abs(u - v) for u, v in zip(found_d, target))
    return OracleResult(residual <= cfg.tol * scale, candidate, residual, samples)
