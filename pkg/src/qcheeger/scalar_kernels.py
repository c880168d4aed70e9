"""One-dimensional special functions used by the Gaussian analysis.

``halfline_cheeger_ratio`` is the Cheeger ratio of the halfline (-inf, s),
``P_gamma / gamma = exp(-s^2/2) / Phi_N(s)``, where the Gaussian perimeter of a
1-D set is the plain sum of ``exp(-x^2/2)`` over its finite endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from ._numerics import gauss_legendre

SQRT2 = math.sqrt(2.0)
SQRT2PI = math.sqrt(2.0 * math.pi)
INV_SQRT2PI = 1.0 / SQRT2PI


@dataclass(frozen=True)
class RatioSample:
    """Halfline Cheeger ratio and its derivative at level ``s``."""

    s: float
    value: float
    derivative: float


def std_normal_cdf(s: float) -> float:
    """Standard normal CDF through the complementary error function.

    ``math.erfc`` keeps subnormal tail values, so the result stays positive
    down to s ~ -38.
    """
    return 0.5 * math.erfc(-s / SQRT2)


def std_normal_sf(s: float) -> float:
    """Upper tail ``1 - std_normal_cdf(s)`` without cancellation."""
    return 0.5 * math.erfc(s / SQRT2)


def std_normal_pdf(s: float) -> float:
    return INV_SQRT2PI * math.exp(-0.5 * s * s)


def std_normal_quantile(p: float) -> float:
    """Inverse of :func:`std_normal_cdf` on (0, 1)."""
    if not 0.0 < p < 1.0:
        raise ValueError(f"quantile needs p in (0, 1), got {p!r}")
    s = float(special.ndtri(p))
    # one Newton step against our own CDF keeps the round trip tight
    dens = std_normal_pdf(s)
    if dens > 0.0:
        if p <= 0.5:
            s -= (std_normal_cdf(s) - p) / dens
        else:
            s += (std_normal_sf(s) - (1.0 - p)) / dens
    return s


def normal_mass(a: float, b: float) -> float:
    """Standard Gaussian measure of the interval (a, b), endpoints may be infinite.

    Short finite intervals are integrated directly so that tiny masses keep
    full relative precision.
    """
    if not a < b:
        return 0.0
    if math.isfinite(a) and math.isfinite(b) and b - a <= 1.0:
        x, w = gauss_legendre(24)
        t = a + (b - a) * x
        return float((b - a) * np.dot(w, np.exp(-0.5 * t * t))) * INV_SQRT2PI
    if a >= 0.0:
        return std_normal_sf(a) - std_normal_sf(b)
    if b <= 0.0:
        return std_normal_cdf(b) - std_normal_cdf(a)
    return 1.0 - std_normal_cdf(a) - std_normal_sf(b)


def erfc_bracket(x: float) -> tuple[float, float]:
    """Two-term asymptotic lower bound and one-term upper bound for erfc(x)."""
    if not x >= 1.0:
        raise ValueError(f"erfc_bracket is defined for x >= 1, got {x!r}")
    scale = math.exp(-x * x) / math.sqrt(math.pi)
    return scale * (1.0 / x - 1.0 / x**3), scale / x


def halfline_cheeger_ratio(s: float) -> float:
    """``exp(-s^2/2) / Phi_N(s)``, computed as ``2 / erfcx(-s/sqrt 2)``."""
    return 2.0 / float(special.erfcx(-s / SQRT2))


def halfline_ratio_derivative(s: float) -> float:
    """Derivative of the halfline ratio: ``-r(s) (s + r(s)/sqrt(2 pi))``."""
    r = halfline_cheeger_ratio(s)
    return -r * (s + r * INV_SQRT2PI)


def ratio_sample(s: float) -> RatioSample:
    return RatioSample(s, halfline_cheeger_ratio(s), halfline_ratio_derivative(s))


def ratio_drop(s: float, delta: float) -> float:
    """``halfline_cheeger_ratio(s) - halfline_cheeger_ratio(s + delta)``.

    For short steps the difference is integrated from the derivative over the
    exact length ``delta``, which avoids cancelling two O(1) numbers and the
    rounding of ``s + delta``.
    """
    if abs(delta) > 0.5:
        return halfline_cheeger_ratio(s) - halfline_cheeger_ratio(s + delta)
    x, w = gauss_legendre(20)
    deriv = np.array([halfline_ratio_derivative(s + delta * float(t)) for t in x])
    return -float(delta * np.dot(w, deriv))


def ratio_gap(s1: float, s2: float) -> float:
    """``halfline_cheeger_ratio(s1) - halfline_cheeger_ratio(s2)``."""
    return ratio_drop(s1, s2 - s1)


def mills_f(s: float) -> float:
    """``f(s) = sqrt(2 pi) exp(s^2/2) Phi_N(s)``, the reciprocal of the ratio up to sqrt(2 pi)."""
    return math.sqrt(math.pi / 2.0) * float(special.erfcx(-s / SQRT2))


def ratio_derivative_identity_check(s: float, step: float = 1e-4, richardson: bool = False) -> float:
    """Residual ``|f'_fd(s) - (1 + s f(s))|`` of a central difference.

    Without Richardson extrapolation the residual is the O(step^2) truncation
    error of the central difference.
    """

    def central(h: float) -> float:
        return (mills_f(s + h) - mills_f(s - h)) / (2.0 * h)

    deriv = central(step)
    if richardson:
        deriv = (4.0 * central(step / 2.0) - deriv) / 3.0
    return abs(deriv - (1.0 + s * mills_f(s)))


def log_asymmetry_Phi(rho: float) -> float:
    """``rho / (1 + sqrt|log rho|)`` on [0, 1], extended by 0 at the origin."""
    if not 0.0 <= rho <= 1.0:
        raise ValueError(f"Phi is defined on [0, 1], got {rho!r}")
    if rho == 0.0:
        return 0.0
    return rho / (1.0 + math.sqrt(abs(math.log(rho))))
