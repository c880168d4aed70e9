"""Cheeger constants, isoperimetric deficits and asymmetry indexes of explicit
planar sets and of unions of intervals under the Gaussian measure."""

from .config import DEFAULT_CONFIG, DEFAULT_TOLERANCES, QuadratureConfig
from .euclid_cheeger import (
    CheegerBounds,
    ball_cheeger,
    cheeger_bracket,
    cheeger_convex_2d,
    cheeger_lower_bound_iso,
    cheeger_upper_bound,
    register_competitor,
)
from .euclid_indexes import IndexReport, fraenkel_alpha, oscillation_beta_sq, potential_integral, riesz_zeta
from .gauss1d import (
    GaussReport,
    IntervalSet,
    alpha_gamma,
    barycenter,
    beta_gamma,
    cheeger_1d,
    epsilon_T,
    gauss_measure,
    gauss_perimeter,
    halfline_with_measure,
    omega_T,
)
from .scalar_kernels import (
    erfc_bracket,
    halfline_cheeger_ratio,
    log_asymmetry_Phi,
    ratio_derivative_identity_check,
    std_normal_cdf,
    std_normal_quantile,
)
from .shapes2d import (
    Annulus,
    ConvexPolygon,
    Disc,
    ShapeUnion,
    StarShape,
    annulus_family,
    area,
    equivalent_ball,
    erode_convex,
    flower,
    inscribed_concentric_radius,
    perimeter,
)

__version__ = "0.1.0"
