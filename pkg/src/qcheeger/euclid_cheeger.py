"""Euclidean Cheeger constants of planar sets.

Discs and convex polygons are solved exactly; for convex polygons the Cheeger
set is the inner parallel body at distance ``t`` rounded by a disc of radius
``t``, where ``t`` is the root of ``|inner body(t)| = pi t^2`` and ``h = 1/t``.
Other shapes get a certified bracket: the equal-area disc from below and the
best competitor of a small library from above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ._numerics import bisect
from .config import DEFAULT_CONFIG, QuadratureConfig
from .shapes2d import (
    ConvexPolygon,
    Disc,
    Shape2D,
    ShapeUnion,
    StarShape,
    _shoelace,
    equivalent_ball,
    inscribed_concentric_radius,
)

OMEGA_2 = math.pi  # area of the unit disc


@dataclass(frozen=True)
class CheegerBounds:
    lower: float
    upper: float
    exact: bool
    witness: str

    def __post_init__(self):
        if not 0 < self.lower <= self.upper:
            raise ValueError(f"inconsistent Cheeger bounds [{self.lower}, {self.upper}]")

    @property
    def value(self) -> float:
        return 0.5 * (self.lower + self.upper)

    def scaled(self, lam: float) -> "CheegerBounds":
        return CheegerBounds(self.lower / lam, self.upper / lam, self.exact, self.witness)

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "exact": self.exact, "witness": self.witness}


def ball_cheeger(n: int, r: float) -> float:
    """Cheeger constant ``n / r`` of an n-ball of radius r."""
    if n < 1 or not r > 0:
        raise ValueError("need n >= 1 and r > 0")
    return n / r


def cheeger_lower_bound_iso(shape: Shape2D) -> float:
    """``h(shape) >= h(B)`` for the disc ``B`` of equal area."""
    return ball_cheeger(2, equivalent_ball(shape).radius)


def _contained(shape: Shape2D, competitor: Shape2D, probes: int = 10_000) -> bool:
    pts = competitor.boundary_points(probes)
    scale = math.sqrt(shape.area())
    return bool(np.all(shape.contains(pts, tol=1e-9 * scale)))


def cheeger_upper_bound(shape: Shape2D, competitor: Shape2D) -> float:
    """``P(E)/|E|`` for a competitor ``E`` inside ``shape``."""
    if not _contained(shape, competitor):
        raise ValueError("competitor is not contained in the shape")
    return competitor.perimeter() / competitor.area()


@dataclass(frozen=True)
class ConvexCheeger:
    bounds: CheegerBounds
    t: float  # rounding radius, h = 1/t
    core: np.ndarray  # vertices of the inner parallel body at distance t

    @property
    def value(self) -> float:
        return 1.0 / self.t


def cheeger_convex_2d(polygon: ConvexPolygon, tol: float | None = None,
                      config: QuadratureConfig = DEFAULT_CONFIG) -> ConvexCheeger:
    """Exact Cheeger constant of a convex polygon by bisection on ``t``.

    ``g(t) = |inner body(t)| - pi t^2`` is strictly decreasing on
    ``(0, inradius]``, positive at 0 and negative at the inradius.
    """
    tol = config.tol_convex_area if tol is None else tol
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    area = polygon.area()
    r_in = polygon.inradius()
    if not r_in > 0:
        raise ValueError("degenerate polygon: empty interior")

    def g(t: float) -> float:
        return _shoelace(polygon.eroded_vertices(t)) - math.pi * t * t

    lo, hi = bisect(g, 0.0, r_in)
    t = 0.5 * (lo + hi)
    if abs(g(t)) > tol * area:
        raise RuntimeError(f"bisection stalled with residual {g(t)!r}")
    core = polygon.eroded_vertices(t)
    lower, upper = 1.0 / hi, 1.0 / lo if lo > 0 else 1.0 / t
    witness = f"inner parallel body at t={t!r} dilated by a disc of radius t"
    return ConvexCheeger(CheegerBounds(lower, max(upper, lower), True, witness), t, core)


# ---------------------------------------------------------------------------
# competitor library
# ---------------------------------------------------------------------------

Competitor = Callable[[Shape2D], "tuple[float, str] | None"]


def _self_competitor(shape):
    return shape.perimeter() / shape.area(), "the shape itself"


def _inscribed_disc(shape):
    if isinstance(shape, StarShape):
        r = inscribed_concentric_radius(shape)
        return ball_cheeger(2, r), f"inscribed concentric disc of radius {r!r}"
    return None


def _disc_components(shape):
    if isinstance(shape, ShapeUnion):
        best = None
        for comp in shape.components:
            if isinstance(comp, Disc):
                cand = (ball_cheeger(2, comp.radius), f"component disc of radius {comp.radius!r}")
                if best is None or cand[0] < best[0]:
                    best = cand
        return best
    return None


def _convex_rounding(shape):
    if isinstance(shape, ConvexPolygon):
        sol = cheeger_convex_2d(shape)
        return sol.bounds.upper, sol.bounds.witness
    return None


COMPETITORS: list[Competitor] = [_self_competitor, _inscribed_disc, _disc_components, _convex_rounding]


def register_competitor(fn: Competitor) -> Competitor:
    """Add a competitor ``fn(shape) -> (ratio, description) | None``.

    The ratio must be ``P(E)/|E|`` of some ``E`` inside ``shape``.
    """
    COMPETITORS.append(fn)
    return fn


def cheeger_bracket(shape: Shape2D) -> CheegerBounds:
    if isinstance(shape, Disc):
        h = ball_cheeger(2, shape.radius)
        return CheegerBounds(h, h, True, "the disc itself")
    if isinstance(shape, ConvexPolygon):
        return cheeger_convex_2d(shape).bounds
    lower = cheeger_lower_bound_iso(shape)
    best = None
    for comp in COMPETITORS:
        cand = comp(shape)
        if cand is not None and (best is None or cand[0] < best[0]):
            best = cand
    upper, witness = best
    return CheegerBounds(lower, max(upper, lower), False, witness)
