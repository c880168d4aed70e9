"""Lemma-level checks bundled as a report.

Each row is one check with its worst margin (positive means satisfied) and the
numbers needed to recompute it.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import integrate

from .config import DEFAULT_CONFIG, QuadratureConfig
from .euclid_indexes import beta_sq_boundary_at, zeta_at
from .experiments import ExperimentRow, ExperimentTable, random_interval_set
from .gauss1d import barycenter, gauss_measure, halfline_with_measure
from .scalar_kernels import (
    erfc_bracket,
    halfline_cheeger_ratio,
    log_asymmetry_Phi,
    ratio_derivative_identity_check,
    std_normal_cdf,
)
from .shapes2d import ConvexPolygon, annulus_family, flower


def _row(name: str, margin: float, ok: bool, **values) -> ExperimentRow:
    return ExperimentRow("lemma", name, {"margin": margin, **values}, {"holds": bool(ok)})


def halfline_grid_supremum(lo: float = -10.0, hi: float = 10.0, n: int = 2001) -> float:
    """``sup_s Phi(|b(H_s)|) / gamma(H_s)`` on a uniform grid."""
    best = 0.0
    for s in np.linspace(lo, hi, n):
        b = math.exp(-0.5 * s * s) / math.sqrt(2.0 * math.pi)
        best = max(best, log_asymmetry_Phi(b) / std_normal_cdf(float(s)))
    return best


def ratio_monotone_check() -> ExperimentRow:
    s = np.linspace(-8.0, 8.0, 1601)
    r = np.array([halfline_cheeger_ratio(float(x)) for x in s])
    steps = r[:-1] - r[1:]
    return _row("ratio_strictly_decreasing", float(steps.min()), bool(np.all(steps > 0)), points=len(s))


def ratio_divergence_check() -> ExperimentRow:
    s = np.linspace(-8.0, -2.0, 601)
    gap = np.array([halfline_cheeger_ratio(float(x)) - abs(x) for x in s])
    return _row("ratio_at_least_abs_s", float(gap.min()), bool(np.all(gap >= 0)), points=len(s))


def derivative_identity_check(config: QuadratureConfig) -> list[ExperimentRow]:
    rows = []
    h = config.fd_step
    for s in (-3.0, 0.0, 2.0):
        res = ratio_derivative_identity_check(s, h)
        res_half = ratio_derivative_identity_check(s, h / 2)
        rows.append(_row(f"f_prime_identity_s={s:g}", config.tol_fd_identity - res,
                         res < config.tol_fd_identity, residual=res, residual_half_step=res_half,
                         step=h, decay=res / res_half if res_half > 0 else float("inf")))
    return rows


def Phi_checks() -> list[ExperimentRow]:
    rho = np.linspace(0.0, 1.0, 1000)
    phi = np.array([log_asymmetry_Phi(float(x)) for x in rho])
    mono = np.diff(phi)
    below = rho - phi
    c4 = 4.0 * (1.0 + math.sqrt(math.log(4.0)))
    quarter = np.array([log_asymmetry_Phi(float(x) / 4.0) for x in rho]) - phi / c4
    return [
        _row("Phi_nondecreasing", float(mono.min()), bool(np.all(mono >= 0)), points=len(rho)),
        _row("Phi_below_identity", float(below.min()), bool(np.all(below >= 0)), points=len(rho)),
        _row("Phi_quarter_lower_bound", float(quarter.min()), bool(np.all(quarter >= -1e-15)), points=len(rho)),
    ]


def barycenter_lemma_check(n_sets: int = 500, seed: int = 3,
                           config: QuadratureConfig = DEFAULT_CONFIG) -> list[ExperimentRow]:
    c_emp = halfline_grid_supremum()
    rng = np.random.default_rng(seed)
    worst_phi = math.inf
    worst_bary = math.inf
    done = 0
    while done < n_sets:
        E = random_interval_set(rng)
        m = gauss_measure(E)
        if not 0.0 < m < 1.0:
            continue
        b = abs(barycenter(E))
        worst_phi = min(worst_phi, c_emp * m - log_asymmetry_Phi(b))
        worst_bary = min(worst_bary, abs(barycenter(halfline_with_measure(m))) - b)
        done += 1
    return [
        _row("Phi_of_barycenter_le_C_gamma", worst_phi, worst_phi >= -config.inequality_slack,
             C_emp=c_emp, sets=n_sets),
        _row("barycenter_maximized_by_halfline", worst_bary, worst_bary >= -1e-12, sets=n_sets),
    ]


def erfc_bracket_check() -> ExperimentRow:
    worst = math.inf
    xs = np.linspace(2.0, 6.0, 81)
    for x in xs:
        val, _ = integrate.quad(lambda t: 2.0 / math.sqrt(math.pi) * math.exp(-t * t), x, math.inf,
                                epsabs=0.0, epsrel=1e-13)
        lo, hi = erfc_bracket(float(x))
        worst = min(worst, (val - lo) / val, (hi - val) / val)
    return _row("erfc_bracket_contains_quadrature", worst, worst >= 0, points=len(xs))


def beta_zeta_identity_check(n_centers: int = 20, seed: int = 5) -> ExperimentRow:
    """``P(B) beta^2_y = P - P(B) + zeta_y`` at random centers, with ``beta^2_y``
    from the boundary integral and ``zeta_y`` from the area potential."""
    square = ConvexPolygon([(0, 0), (1, 0), (1, 1), (0, 1)]).translated((-0.5, -0.5))
    shapes = {"flower(5,0.1)": flower(5, 0.1), "square": square, "annulus_family(4)": annulus_family(4)[0]}
    rng = np.random.default_rng(seed)
    worst = 0.0
    for shape in shapes.values():
        r = math.sqrt(shape.area() / math.pi)
        PB = 2.0 * math.pi * r
        P = shape.perimeter()
        for y in rng.uniform(-0.6, 0.6, size=(n_centers, 2)):
            lhs = PB * beta_sq_boundary_at(shape, y)
            rhs = P - PB + zeta_at(shape, y)
            worst = max(worst, abs(lhs - rhs))
    return _row("beta_zeta_identity", 1e-8 - worst, worst <= 1e-8, max_error=worst,
                shapes=list(shapes), centers=n_centers)


def lemma_suite(config: QuadratureConfig = DEFAULT_CONFIG, n_sets: int = 500) -> ExperimentTable:
    rows = [ratio_monotone_check(), ratio_divergence_check()]
    rows += derivative_identity_check(config)
    rows += Phi_checks()
    rows += barycenter_lemma_check(n_sets, config=config)
    rows.append(erfc_bracket_check())
    rows.append(beta_zeta_identity_check())
    return ExperimentTable("verify", rows, {}, {}, config.table())
