"""Tolerance table shared by every numeric routine.

All defaults live in ``DEFAULT_TOLERANCES``; the CLI can override any entry by
name and echoes the effective table in its reports.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

DEFAULT_TOLERANCES: dict[str, float] = {
    # absolute tolerance for 1-D quadrature (perimeters, potentials, erfc oracle)
    "quad": 1e-10,
    # residual tolerance for scalar root finding (epsilon(T), quantiles)
    "root": 1e-14,
    # relative area residual for the convex Cheeger bisection
    "convex_area": 1e-10,
    # finite-difference step for derivative identities
    "fd_step": 1e-4,
    # residual allowed in the f' = 1 + s f identity at fd_step
    "fd_identity": 1e-6,
    # interval endpoints of a 1-D Cheeger minimizer
    "cheeger_1d": 1e-9,
    # filter for 0/0 ratios near the equality case
    "degenerate_index": 1e-8,
    # slack when checking inequalities that can hold with equality
    "inequality_slack": 1e-9,
}


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances, truncation radii and grid densities for the numerics."""

    tol_quad: float = DEFAULT_TOLERANCES["quad"]
    tol_root: float = DEFAULT_TOLERANCES["root"]
    tol_convex_area: float = DEFAULT_TOLERANCES["convex_area"]
    fd_step: float = DEFAULT_TOLERANCES["fd_step"]
    tol_fd_identity: float = DEFAULT_TOLERANCES["fd_identity"]
    tol_cheeger_1d: float = DEFAULT_TOLERANCES["cheeger_1d"]
    degenerate_index: float = DEFAULT_TOLERANCES["degenerate_index"]
    inequality_slack: float = DEFAULT_TOLERANCES["inequality_slack"]
    # Gaussian integrals are cut at |t| = gauss_truncation
    gauss_truncation: float = 40.0
    # coarse grid side for the center search of the Euclidean indexes
    center_grid: int = 41
    # Nelder-Mead restarts from the best grid points
    center_restarts: int = 3
    # stratified restarts of the nested golden-section search
    golden_restarts: int = 5

    def with_overrides(self, **overrides: float) -> "QuadratureConfig":
        names = {f.name for f in dataclasses.fields(self)}
        mapped = {}
        for key, value in overrides.items():
            target = _ALIASES.get(key, key)
            if target not in names:
                raise KeyError(f"unknown tolerance {key!r}")
            if not value > 0:
                raise ValueError(f"tolerance {key!r} must be positive, got {value!r}")
            mapped[target] = value
        return dataclasses.replace(self, **mapped)

    def table(self) -> dict[str, float]:
        return {
            "quad": self.tol_quad,
            "root": self.tol_root,
            "convex_area": self.tol_convex_area,
            "fd_step": self.fd_step,
            "fd_identity": self.tol_fd_identity,
            "cheeger_1d": self.tol_cheeger_1d,
            "degenerate_index": self.degenerate_index,
            "inequality_slack": self.inequality_slack,
        }


_ALIASES = {
    "quad": "tol_quad",
    "root": "tol_root",
    "convex_area": "tol_convex_area",
    "fd_identity": "tol_fd_identity",
    "cheeger_1d": "tol_cheeger_1d",
}

DEFAULT_CONFIG = QuadratureConfig()
