"""Reproductions of the three explicit constructions and randomized sweeps.

Every routine returns an :class:`ExperimentTable`: rows carry the numbers
behind each flagged inequality so that every flag can be recomputed from the
table alone. Table-level facts (monotonicity in ``j``, empirical infima) live
in ``summary`` next to the values they are derived from.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize
from scipy.spatial import ConvexHull

from .config import DEFAULT_CONFIG, QuadratureConfig
from .euclid_cheeger import cheeger_bracket, cheeger_convex_2d
from .euclid_indexes import oscillation_beta_sq, riesz_zeta
from .gauss1d import (
    INF,
    IntervalSet,
    alpha_gamma,
    beta_gamma,
    beta_gamma_omega_T_closed_form,
    cheeger_1d,
    epsilon_T,
    epsilon_T_residual,
    gauss_measure,
    omega_T,
)
from .scalar_kernels import (
    halfline_cheeger_ratio,
    halfline_ratio_derivative,
    log_asymmetry_Phi,
    ratio_drop,
    std_normal_quantile,
)
from .shapes2d import ConvexPolygon, annulus_family, flower

SCHEMA_VERSION = 1


@dataclass
class ExperimentRow:
    family: str
    param: float | int | str
    values: dict = field(default_factory=dict)
    # None marks a check that does not apply to this row
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.checks.values())

    def to_dict(self) -> dict:
        return {"family": self.family, "param": self.param, **self.values,
                **{f"check_{k}": v for k, v in self.checks.items()}}


@dataclass
class ExperimentTable:
    name: str
    rows: list
    summary: dict = field(default_factory=dict)
    summary_checks: dict = field(default_factory=dict)
    tolerances: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows) and all(v is not False for v in self.summary_checks.values())

    def failures(self) -> list[str]:
        out = [f"{r.family}[{r.param}]: {k}" for r in self.rows for k, v in r.checks.items() if v is False]
        out += [f"summary: {k}" for k, v in self.summary_checks.items() if v is False]
        return out

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "experiment": self.name,
            "tolerances": self.tolerances,
            "rows": [r.to_dict() for r in self.rows],
            "summary": self.summary,
            "summary_checks": self.summary_checks,
        }


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (np.floating, float)):
        x = float(x)
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return x
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.bool_):
        return bool(x)
    return x


def to_json(table: ExperimentTable) -> str:
    return json.dumps(_jsonable(table.to_dict()), indent=2, sort_keys=False) + "\n"


def _csv_cell(v) -> str:
    v = _jsonable(v)
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, list):
        return json.dumps(v)
    return str(v)


def to_csv(table: ExperimentTable) -> str:
    """One line per row. The header starts with ``family,param``, then the
    row's value columns in insertion order, then ``check_*`` columns; a
    leading comment line carries the schema version."""
    dicts = [r.to_dict() for r in table.rows]
    header: list[str] = []
    for d in dicts:
        header += [k for k in d if k not in header]
    buf = io.StringIO()
    buf.write(f"# schema_version={SCHEMA_VERSION} experiment={table.name}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for d in dicts:
        writer.writerow([_csv_cell(d.get(k)) for k in header])
    return buf.getvalue()


def write_report(table: ExperimentTable, path, fmt: str = "json") -> None:
    text = to_json(table) if fmt == "json" else to_csv(table)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _map(fn, items, workers: int):
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


# ---------------------------------------------------------------------------
# Euclidean reproductions
# ---------------------------------------------------------------------------


def reproduce_flower(j_list=(5, 10, 15, 20), eps: float = 0.1,
                     config: QuadratureConfig = DEFAULT_CONFIG) -> ExperimentTable:
    if not 0 < eps < 1 or not j_list:
        raise ValueError("need eps in (0, 1) and a nonempty j list")
    slack = config.inequality_slack
    upper_expected = 2.0 * math.sqrt(1.0 + 0.5 * eps * eps) / (1.0 - eps)
    rows = []
    for j in j_list:
        shape = flower(int(j), eps)
        area = shape.area()
        per = shape.perimeter(config.tol_quad)
        per_bound = 8.0 * j * eps / math.sqrt(1.0 + 0.5 * eps * eps)
        bounds = cheeger_bracket(shape)
        beta = oscillation_beta_sq(shape, config)
        zeta = riesz_zeta(shape, config)
        beta_floor = (per - 2.0 * math.pi) / (2.0 * math.pi)
        ratio = ((bounds.upper - 2.0) / 2.0) / beta.value
        rows.append(ExperimentRow("flower", int(j), {
            "eps": eps,
            "area": area,
            "perimeter": per,
            "perimeter_bound": per_bound,
            "h_lower": bounds.lower,
            "h_upper": bounds.upper,
            "h_upper_expected": upper_expected,
            "beta_sq": beta.value,
            "beta_sq_floor": beta_floor,
            "zeta": zeta.value,
            "failure_ratio": ratio,
        }, {
            "area_is_pi": abs(area - math.pi) <= 1e-9,
            "perimeter_bound": per >= per_bound - slack,
            "bracket_lower": abs(bounds.lower - 2.0) <= 1e-9,
            "bracket_upper": abs(bounds.upper - upper_expected) <= 1e-9,
            "beta_sq_identity": beta.value * 2.0 * math.pi >= per - 2.0 * math.pi - slack,
        }))
    js = [r.param for r in rows]
    betas = [r.values["beta_sq"] for r in rows]
    ratios = [r.values["failure_ratio"] for r in rows]
    summary = {"j": js, "beta_sq": betas, "failure_ratio": ratios}
    checks = {
        "beta_sq_increasing": all(b0 < b1 for b0, b1 in zip(betas, betas[1:])),
        "failure_ratio_decreasing": all(r0 > r1 for r0, r1 in zip(ratios, ratios[1:])),
    }
    if 5 in js and 20 in js:
        drop = ratios[js.index(5)] / ratios[js.index(20)]
        summary["failure_ratio_drop_5_to_20"] = drop
        checks["failure_ratio_halves"] = drop >= 2.0
    return ExperimentTable("flower", rows, summary, checks, config.table())


def reproduce_annulus(j_list=(4, 10, 50), config: QuadratureConfig = DEFAULT_CONFIG) -> ExperimentTable:
    rows = []
    for j in j_list:
        if int(j) < 2:
            raise ValueError("annulus family needs j >= 2")
        shape, eps_j = annulus_family(int(j))
        area = shape.area()
        bounds = cheeger_bracket(shape)
        beta = oscillation_beta_sq(shape, config)
        zeta = riesz_zeta(shape, config)
        deficit = (bounds.upper - 2.0) / 2.0
        rate = 1.2 / (j - 1)
        rows.append(ExperimentRow("annulus", int(j), {
            "eps_j": eps_j,
            "area": area,
            "h_lower": bounds.lower,
            "h_upper": bounds.upper,
            "beta_sq": beta.value,
            "zeta": zeta.value,
            "upper_deficit": deficit,
            "deficit_bound": rate,
        }, {
            "area_is_pi": abs(area - math.pi) <= 1e-12,
            "beta_sq_at_least_2": beta.value >= 2.0 - 1e-6,
            "deficit_rate": deficit <= rate,
        }))
    return ExperimentTable("annulus", rows, {}, {}, config.table())


# ---------------------------------------------------------------------------
# Gaussian sharpness
# ---------------------------------------------------------------------------


def ratio_slope_bound(lo: float = -1.0, hi: float = 0.0) -> float:
    """``max_{[lo, hi]} -d/ds halfline_cheeger_ratio`` (grid plus bounded refinement)."""
    grid = np.linspace(lo, hi, 201)
    vals = [-halfline_ratio_derivative(float(s)) for s in grid]
    k = int(np.argmax(vals))
    a, b = grid[max(k - 1, 0)], grid[min(k + 1, len(grid) - 1)]
    res = optimize.minimize_scalar(lambda s: halfline_ratio_derivative(s), bounds=(a, b),
                                   method="bounded", options={"xatol": 1e-12})
    return max(max(vals), -float(res.fun))


def reproduce_gauss_sharpness(T_list=(3, 4, 5, 6, 7, 8),
                              config: QuadratureConfig = DEFAULT_CONFIG) -> ExperimentTable:
    C = ratio_slope_bound()
    rows = []
    for T in T_list:
        T = float(T)
        if not T > 2:
            raise ValueError("sharpness family needs T > 2")
        E = omega_T(T)
        eps = epsilon_T(T, config)
        residual = epsilon_T_residual(T, eps)
        sol = cheeger_1d(E, config=config)
        (left, right), = sol.minimizer.intervals
        h_half = halfline_cheeger_ratio(-1.0 + eps)
        # h(Omega_T) is the ratio of (-inf, -1); the gap is integrated, not subtracted
        gap = ratio_drop(right, eps) if right == -1.0 and left == -INF else sol.h - h_half
        beta = beta_gamma(E).value
        beta_cf = beta_gamma_omega_T_closed_form(T, eps)
        alpha = alpha_gamma(E).value
        log_beta = math.sqrt(abs(math.log(beta)))
        phi_beta = log_asymmetry_Phi(beta)
        rows.append(ExperimentRow("gauss_sharpness", T, {
            "eps": eps,
            "eps_residual": residual,
            "h_omega": sol.h,
            "minimizer_left": left,
            "minimizer_right": right,
            "h_halfline": h_half,
            "gap": gap,
            "C": C,
            "gap_bound": C * eps,
            "beta_gamma": beta,
            "beta_gamma_closed_form": beta_cf,
            "exp_minus_T2": math.exp(-T * T),
            "sqrt_abs_log_beta": log_beta,
            "alpha_gamma": alpha,
            "c_ratio": beta / ((1.0 + T) * eps),
            "Phi_beta": phi_beta,
            "sharpness_ratio": gap / phi_beta,
        }, {
            "minimizer_is_halfline": left == -INF and abs(right + 1.0) <= 1e-6,
            "eps_residual": residual <= config.tol_root,
            "beta_closed_form": abs(beta - beta_cf) <= 1e-12,
            "gap_le_C_eps": gap <= C * eps * (1.0 + 1e-9),
            "beta_ge_exp_minus_T2": beta >= math.exp(-T * T),
            "sqrt_log_beta_le_T": (log_beta <= T) if T >= 5 else None,
        }))
    sharp = [r.values["sharpness_ratio"] for r in rows]
    c_vals = [r.values["c_ratio"] for r in rows]
    summary = {
        "C": C,
        "c_empirical": min(c_vals),
        "sharpness_min": min(sharp),
        "sharpness_max": max(sharp),
        "sharpness_spread": max(sharp) / min(sharp),
    }
    checks = {"c_positive": min(c_vals) > 0, "sharpness_within_decade": max(sharp) / min(sharp) <= 10.0}
    return ExperimentTable("gauss_sharpness", rows, summary, checks, config.table())


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------


def random_convex_polygon(rng: np.random.Generator) -> ConvexPolygon:
    """Hull of 5-12 points on a perturbed unit circle, rescaled to area pi and
    translated to its vertex mean."""
    k = int(rng.integers(5, 13))
    theta = 2.0 * np.pi * (np.arange(k) + rng.uniform(-0.4, 0.4, k)) / k
    rad = 1.0 + rng.uniform(-0.3, 0.3, k)
    pts = np.column_stack((rad * np.cos(theta), rad * np.sin(theta)))
    hull = ConvexHull(pts)
    poly = ConvexPolygon(pts[hull.vertices])
    poly = poly.translated(-poly.vertices.mean(axis=0))
    return poly.scaled(math.sqrt(math.pi / poly.area()))


def _zeta_sample(args):
    poly, config = args
    h = cheeger_convex_2d(poly, config=config).value
    z = riesz_zeta(poly, config)
    return len(poly.vertices), poly.area(), h, z.value, z.status


def _summary_stats(ratios: list[float], bins: int = 10) -> dict:
    if not ratios:
        return {"count": 0, "infimum": None, "histogram": [], "bin_edges": []}
    counts, edges = np.histogram(ratios, bins=bins)
    return {
        "count": len(ratios),
        "infimum": min(ratios),
        "median": float(np.median(ratios)),
        "maximum": max(ratios),
        "histogram": [int(c) for c in counts],
        "bin_edges": [float(e) for e in edges],
    }


def sweep_zeta_constant(n_samples: int = 200, seed: int = 7, workers: int = 1,
                        config: QuadratureConfig = DEFAULT_CONFIG) -> ExperimentTable:
    """Empirical infimum of ``[(h - h(B))/h(B)] / zeta`` over random convex polygons."""
    if n_samples < 50:
        raise ValueError("the sweep needs at least 50 samples")
    rng = np.random.default_rng(seed)
    polys = [random_convex_polygon(rng) for _ in range(n_samples)]
    results = _map(_zeta_sample, [(p, config) for p in polys], workers)
    thr = config.degenerate_index
    rows, ratios = [], []
    for i, (nv, area, h, z, status) in enumerate(results):
        hb = 2.0 * math.sqrt(math.pi / area)
        deficit = (h - hb) / hb
        kept = z > thr
        ratio = deficit / z if kept else None
        if kept:
            ratios.append(ratio)
        rows.append(ExperimentRow("zeta_sweep", i, {
            "vertices": nv, "area": area, "h": h, "h_ball": hb, "zeta": z,
            "zeta_status": status, "ratio": ratio, "filtered": not kept,
        }, {"ratio_positive": (ratio > 0) if kept else None}))
    stats = _summary_stats(ratios)
    summary = {"seed": seed, "samples": n_samples, "filter_threshold": thr,
               "filtered": n_samples - len(ratios), **stats}
    checks = {"infimum_positive": bool(ratios) and min(ratios) > 0}
    return ExperimentTable("zeta_sweep", rows, summary, checks, config.table())


def random_interval_set(rng: np.random.Generator, lo: float = -4.0, hi: float = 4.0,
                        min_gap: float = 0.05) -> IntervalSet:
    """1-3 components with endpoints in [lo, hi] at least ``min_gap`` apart;
    the outermost endpoints become infinite with probability 1/4 each."""
    k = int(rng.integers(1, 4))
    while True:
        pts = np.sort(rng.uniform(lo, hi, 2 * k))
        if np.all(np.diff(pts) >= min_gap):
            break
    pts = [float(p) for p in pts]
    if rng.uniform() < 0.25:
        pts[0] = -INF
    if rng.uniform() < 0.25:
        pts[-1] = INF
    if pts[0] == -INF and pts[-1] == INF and k == 1:
        pts[-1] = hi
    return IntervalSet(tuple(zip(pts[0::2], pts[1::2])))


def _gauss_sample(args):
    E, config = args
    m = gauss_measure(E)
    h = cheeger_1d(E, config=config).h
    h_half = halfline_cheeger_ratio(std_normal_quantile(m))
    return m, h, h_half, alpha_gamma(E).value, beta_gamma(E).value


def sweep_gauss_constants(n_samples: int = 300, seed: int = 11, bins=(0.3, 0.5, 0.7),
                          half_width: float = 0.02, workers: int = 1,
                          config: QuadratureConfig = DEFAULT_CONFIG,
                          max_draws: int = 10_000_000) -> ExperimentTable:
    """Per measure bin, empirical infima of ``gap / alpha^2`` and ``gap / Phi(beta)``.

    Sets are drawn sequentially from the seed and accepted into the first bin
    still short of samples whose window contains their measure.
    """
    for b in bins:
        if not (0 < b - half_width and b + half_width < 1):
            raise ValueError("measure bins must lie inside (0, 1)")
    rng = np.random.default_rng(seed)
    accepted: dict[float, list[IntervalSet]] = {float(b): [] for b in bins}
    draws = 0
    while any(len(v) < n_samples for v in accepted.values()):
        draws += 1
        if draws > max_draws:
            raise RuntimeError("rejection sampling did not fill the bins")
        E = random_interval_set(rng)
        m = gauss_measure(E)
        for b, sets in accepted.items():
            if len(sets) < n_samples and abs(m - b) <= half_width:
                sets.append(E)
                break
    jobs = [(E, config) for sets in accepted.values() for E in sets]
    results = _map(_gauss_sample, jobs, workers)
    thr = config.degenerate_index
    slack = config.inequality_slack
    rows = []
    per_bin: dict[float, dict[str, list[float]]] = {b: {"alpha": [], "beta": []} for b in accepted}
    it = iter(zip(jobs, results))
    for b, sets in accepted.items():
        for i in range(len(sets)):
            (E, _), (m, h, h_half, a, beta) = next(it)
            gap = h - h_half
            r31 = gap / (a * a) if a > thr and gap > thr else None
            r32 = gap / log_asymmetry_Phi(beta) if beta > thr and gap > thr else None
            if r31 is not None:
                per_bin[b]["alpha"].append(r31)
            if r32 is not None:
                per_bin[b]["beta"].append(r32)
            rows.append(ExperimentRow("gauss_sweep", f"{b}:{i}", {
                "bin": b, "set": E.to_json(), "measure": m, "h": h, "h_halfline": h_half,
                "gap": gap, "alpha_gamma": a, "beta_gamma": beta,
                "ratio_alpha": r31, "ratio_beta": r32,
                "filtered_alpha": r31 is None, "filtered_beta": r32 is None,
            }, {
                # a negative deficit would contradict the isoperimetric inequality
                "gap_nonnegative": gap >= -slack,
                "ratio_alpha_positive": (r31 > 0) if r31 is not None else None,
                "ratio_beta_positive": (r32 > 0) if r32 is not None else None,
            }))
    summary = {"seed": seed, "samples_per_bin": n_samples, "half_width": half_width,
               "draws": draws, "filter_threshold": thr, "bins": {}}
    checks = {}
    for b, d in per_bin.items():
        summary["bins"][repr(b)] = {"alpha": _summary_stats(d["alpha"]), "beta": _summary_stats(d["beta"])}
        checks[f"alpha_infimum_positive_{b}"] = bool(d["alpha"]) and min(d["alpha"]) > 0
        checks[f"beta_infimum_positive_{b}"] = bool(d["beta"]) and min(d["beta"]) > 0
    return ExperimentTable("gauss_sweep", rows, summary, checks, config.table())
