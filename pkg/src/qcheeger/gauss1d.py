"""Gaussian measure theory on the real line.

Sets are finite unions of open intervals (:class:`IntervalSet`) with endpoints
in the extended reals; ``math.inf`` marks an unbounded side. For a 1-D set the
Gaussian perimeter is ``sum exp(-x^2/2)`` over its finite endpoints (the
``(2 pi)^((n-1)/2)`` prefactor equals 1), the measure is the standard normal
mass and the barycenter is ``(2 pi)^(-1/2) int_E x exp(-x^2/2) dx``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._numerics import golden_section
from .config import DEFAULT_CONFIG, QuadratureConfig
from .euclid_indexes import IndexReport
from .scalar_kernels import (
    INV_SQRT2PI,
    halfline_cheeger_ratio,
    normal_mass,
    std_normal_quantile,
    std_normal_sf,
)

INF = math.inf


@dataclass(frozen=True)
class IntervalSet:
    """Sorted, pairwise separated open intervals ``(a_i, b_i)``."""

    intervals: tuple[tuple[float, float], ...]

    def __post_init__(self):
        ivs = tuple(sorted((float(a), float(b)) for a, b in self.intervals))
        for a, b in ivs:
            if math.isnan(a) or math.isnan(b) or not a < b:
                raise ValueError(f"invalid interval ({a}, {b})")
            if a == INF or b == -INF:
                raise ValueError(f"empty interval ({a}, {b})")
        for (_, b0), (a1, _) in zip(ivs, ivs[1:]):
            if not b0 < a1:
                raise ValueError("intervals must be separated by positive gaps; use IntervalSet.union")
        object.__setattr__(self, "intervals", ivs)

    @classmethod
    def of(cls, *pairs) -> "IntervalSet":
        return cls(tuple(pairs))

    @classmethod
    def union(cls, pairs) -> "IntervalSet":
        """Canonical form of an arbitrary list of intervals (merges overlaps
        and shared endpoints)."""
        merged: list[list[float]] = []
        for a, b in sorted((float(a), float(b)) for a, b in pairs if a < b):
            if merged and a <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], b)
            else:
                merged.append([a, b])
        return cls(tuple((a, b) for a, b in merged))

    @property
    def empty(self) -> bool:
        return not self.intervals

    def endpoints(self) -> list[float]:
        return [x for iv in self.intervals for x in iv if math.isfinite(x)]

    def complement(self) -> "IntervalSet":
        out = []
        left = -INF
        for a, b in self.intervals:
            if left < a:
                out.append((left, a))
            left = b
        if left < INF:
            out.append((left, INF))
        return IntervalSet(tuple(out))

    def intersection(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        i = j = 0
        A, B = self.intervals, other.intervals
        while i < len(A) and j < len(B):
            lo = max(A[i][0], B[j][0])
            hi = min(A[i][1], B[j][1])
            if lo < hi:
                out.append((lo, hi))
            if A[i][1] < B[j][1]:
                i += 1
            else:
                j += 1
        return IntervalSet.union(out)

    def difference(self, other: "IntervalSet") -> "IntervalSet":
        return self.intersection(other.complement())

    def symmetric_difference(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet.union(self.difference(other).intervals + other.difference(self).intervals)

    def to_json(self) -> list[list[str]]:
        return [[_fmt(a), _fmt(b)] for a, b in self.intervals]

    @classmethod
    def from_json(cls, data) -> "IntervalSet":
        return cls(tuple((_parse(a), _parse(b)) for a, b in data))


def _fmt(x: float) -> str:
    if x == INF:
        return "inf"
    if x == -INF:
        return "-inf"
    return repr(float(x))


def _parse(x) -> float:
    if isinstance(x, str):
        key = x.strip().lower()
        if key in ("inf", "+inf"):
            return INF
        if key == "-inf":
            return -INF
    value = float(x)
    if math.isinf(value):
        raise ValueError("infinite endpoints must use the 'inf'/'-inf' sentinels")
    return value


def _gauss_exp(x: float) -> float:
    return 0.0 if math.isinf(x) else math.exp(-0.5 * x * x)


# ---------------------------------------------------------------------------
# measures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GaussReport:
    measure: float
    perimeter: float
    barycenter: float


def gauss_measure(E: IntervalSet) -> float:
    return sum(normal_mass(a, b) for a, b in E.intervals)


def gauss_perimeter(E: IntervalSet) -> float:
    return sum(math.exp(-0.5 * x * x) for x in E.endpoints())


def barycenter(E: IntervalSet) -> float:
    """Closed form from the antiderivative ``-exp(-x^2/2)`` of ``x exp(-x^2/2)``."""
    return INV_SQRT2PI * sum(_gauss_exp(a) - _gauss_exp(b) for a, b in E.intervals)


def gauss_report(E: IntervalSet) -> GaussReport:
    return GaussReport(gauss_measure(E), gauss_perimeter(E), barycenter(E))


def halfline_with_measure(m: float, direction: int = 1) -> IntervalSet:
    """Halfline ``{x * direction < s}`` of Gaussian measure ``m``."""
    if not 0.0 < m < 1.0:
        raise ValueError(f"halfline measure must lie in (0, 1), got {m!r}")
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    s = std_normal_quantile(m)
    return IntervalSet.of((-INF, s)) if direction == 1 else IntervalSet.of((-s, INF))


def _check_nondegenerate(E: IntervalSet) -> float:
    m = gauss_measure(E)
    if not 0.0 < m < 1.0:
        raise ValueError(f"index needs 0 < gamma(E) < 1, got {m!r}")
    return m


def alpha_gamma(E: IntervalSet) -> IndexReport:
    """``min_w gamma(E sym. diff. H_{E,w})`` over both orientations."""
    m = _check_nondegenerate(E)
    best = None
    for w in (1, -1):
        val = gauss_measure(E.symmetric_difference(halfline_with_measure(m, w)))
        if best is None or val < best[0]:
            best = (val, w)
    return IndexReport("alpha_gamma", best[0], (float(best[1]), 0.0), "converged", 2)


def _interval_moment(a: float, b: float) -> float:
    """``int_a^b x exp(-x^2/2) dx`` written so short intervals keep relative precision."""
    if math.isinf(a) or math.isinf(b):
        return _gauss_exp(a) - _gauss_exp(b)
    if abs(a) <= abs(b):
        return -_gauss_exp(a) * math.expm1(-0.5 * (b - a) * (b + a))
    return _gauss_exp(b) * math.expm1(0.5 * (b - a) * (b + a))


def beta_gamma(E: IntervalSet) -> IndexReport:
    """``min_w |b(H_{E,w}) - b(E)|`` over both orientations.

    The difference is taken as ``b(H \\ E) - b(E \\ H)`` so that nearly
    coinciding sets do not cancel two O(1) barycenters.
    """
    _check_nondegenerate(E)
    m = gauss_measure(E)
    best = None
    for w in (1, -1):
        H = halfline_with_measure(m, w)
        diff = sum(_interval_moment(a, b) for a, b in H.difference(E).intervals)
        diff -= sum(_interval_moment(a, b) for a, b in E.difference(H).intervals)
        val = abs(diff) * INV_SQRT2PI
        if best is None or val < best[0]:
            best = (val, w)
    return IndexReport("beta_gamma", best[0], (float(best[1]), 0.0), "converged", 2)


# ---------------------------------------------------------------------------
# Cheeger problem
# ---------------------------------------------------------------------------


def cheeger_ratio(E: IntervalSet) -> float:
    return gauss_perimeter(E) / gauss_measure(E)


def _pair_ratio(s: float, t: float) -> float:
    mass = normal_mass(s, t)
    if mass <= 0.0:
        return INF
    return (_gauss_exp(s) + _gauss_exp(t)) / mass


def _fast_ratio(s: float, t: float, _erfc=math.erfc, _exp=math.exp, _k=1.0 / math.sqrt(2.0)) -> float:
    # tail-aware erfc differences, used only inside the searches
    if not s < t:
        return INF
    if s >= 0.0:
        mass = _erfc(s * _k) - _erfc(t * _k)
    elif t <= 0.0:
        mass = _erfc(-t * _k) - _erfc(-s * _k)
    else:
        mass = 2.0 - _erfc(-s * _k) - _erfc(t * _k)
    if mass <= 0.0:
        return INF
    return 2.0 * (_exp(-0.5 * s * s) + _exp(-0.5 * t * t)) / mass


@dataclass(frozen=True)
class Cheeger1D:
    h: float
    minimizer: IntervalSet
    evaluations: int


def _component_optimum(a: float, b: float, config: QuadratureConfig):
    """Best subinterval ``(s, t)`` of the component ``(a, b)``.

    Four regimes: both endpoints pinned, one pinned with the other searched by
    golden section, and a nested golden section over both with stratified
    restarts. Infinite endpoints are searched inside the truncation window and
    snap back to the true endpoint when the search ends on the window edge.
    """
    cut = config.gauss_truncation
    tol = config.tol_cheeger_1d
    lo = max(a, -cut)
    hi = min(b, cut)
    evals = 1
    best = (_pair_ratio(a, b), a, b)

    def snap(s: float, t: float) -> tuple[float, float]:
        return (a if s <= lo else s), (b if t >= hi else t)

    def consider(s: float, t: float):
        nonlocal best, evals
        s, t = snap(s, t)
        if not s < t:
            return
        val = _pair_ratio(s, t)
        evals += 1
        if val < best[0] or (val == best[0] and (s, t) < (best[1], best[2])):
            best = (val, s, t)

    if not lo < hi:
        return best, evals

    t_opt, _, n = golden_section(lambda t: _fast_ratio(a, t), lo, hi, tol)
    evals += n
    consider(a, t_opt)
    s_opt, _, n = golden_section(lambda s: _fast_ratio(s, b), lo, hi, tol)
    evals += n
    consider(s_opt, b)

    def inner(t: float) -> float:
        nonlocal evals
        _, v, n = golden_section(lambda s: _fast_ratio(s, t), lo, t, tol)
        evals += n
        return v

    k = config.golden_restarts
    width = (hi - lo) / k
    for i in range(k):
        t_opt, _, n = golden_section(inner, lo + i * width, lo + (i + 1) * width, tol)
        evals += n
        s_opt, _, n = golden_section(lambda s: _fast_ratio(s, t_opt), lo, t_opt, tol)
        evals += n
        consider(s_opt, t_opt)
    return best, evals


def cheeger_1d(E: IntervalSet, tol: float | None = None,
               config: QuadratureConfig = DEFAULT_CONFIG) -> Cheeger1D:
    """Gaussian Cheeger constant ``inf P_gamma(F)/gamma(F)`` over ``F`` in ``E``.

    The ratio of a disjoint union lies between the ratios of its parts, so it
    suffices to optimize single subintervals of each component; ties go to the
    leftmost minimizer.
    """
    if tol is not None:
        if not tol > 0:
            raise ValueError("tolerance must be positive")
        config = config.with_overrides(cheeger_1d=tol)
    if E.empty or gauss_measure(E) <= 0.0:
        raise ValueError("Cheeger problem needs a set of positive measure")
    best = None
    evals = 0
    for a, b in E.intervals:
        (val, s, t), n = _component_optimum(a, b, config)
        evals += n
        if best is None or val < best[0]:
            best = (val, s, t)
    return Cheeger1D(best[0], IntervalSet.of((best[1], best[2])), evals)


def halfline_cheeger(E: IntervalSet) -> float:
    """``h_gamma(H_E)``: the halfline of equal measure is its own Cheeger set."""
    return halfline_cheeger_ratio(std_normal_quantile(gauss_measure(E)))


# ---------------------------------------------------------------------------
# the two-sided family
# ---------------------------------------------------------------------------


def omega_T(T: float) -> IntervalSet:
    """``(-inf, -1) u (T, inf)``."""
    if not T > 1:
        raise ValueError("omega_T needs T > 1")
    return IntervalSet.of((-INF, -1.0), (T, INF))


def epsilon_T(T: float, config: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Root of ``int_T^inf e^{-t^2/2} = int_{-1}^{-1+eps} e^{-t^2/2}`` by bisection."""
    if not T > 1:
        raise ValueError("epsilon_T needs T > 1")
    tail = std_normal_sf(T)

    def g(e: float) -> float:
        return normal_mass(-1.0, -1.0 + e) - tail

    lo, hi = 0.0, 1.0
    if not (g(lo) < 0 < g(hi)):
        raise RuntimeError("epsilon(T) bracket failed")
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if g(mid) < 0:
            lo = mid
        else:
            hi = mid
    eps = lo if abs(g(lo)) <= abs(g(hi)) else hi
    assert abs(g(eps)) * math.sqrt(2 * math.pi) <= config.tol_root
    return eps


def epsilon_T_residual(T: float, eps: float) -> float:
    """``|int_T^inf e^{-t^2/2} - int_{-1}^{-1+eps} e^{-t^2/2}|``."""
    return abs(std_normal_sf(T) - normal_mass(-1.0, -1.0 + eps)) * math.sqrt(2 * math.pi)


def beta_gamma_omega_T_closed_form(T: float, eps: float) -> float:
    """``(2 pi)^(-1/2) (e^{-(eps-1)^2/2} - e^{-1/2} + e^{-T^2/2})``, with the
    first difference written through ``expm1`` to keep precision for small eps."""
    head = math.exp(-0.5) * math.expm1(eps - 0.5 * eps * eps)
    return INV_SQRT2PI * (head + math.exp(-0.5 * T * T))
