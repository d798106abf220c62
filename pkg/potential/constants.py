"""
Potential Enums

Type definitions for the potential module, plus re-exports of the numeric
defaults it reads from config/settings.py.
"""

from enum import Enum

from config.settings import (
    GAUSSIAN_NORMALIZATION_MIN_BETA,
    PEAK_GRADIENT_TOLERANCE,
    PEAK_MAX_HALVINGS,
    PEAK_MAX_ITER,
    PEAK_ORBIT_TOLERANCE,
    PEAK_RESIDUAL_LIMIT,
    QUAD_EPSABS,
    QUAD_EPSREL,
    QUAD_LIMIT,
    QUAD_TAIL_EXPONENT,
    QUAD_TAIL_PAD,
    SURROGATE_SAMPLES,
    SURROGATE_SEED,
    TOLERANCE_BISECTION_XTOL,
    TOLERANCE_DELTA,
    VALIDITY_MARGIN,
    WALL_TOLERANCE,
)


class NormalizationMethod(Enum):
    """How z_beta is computed"""

    AUTO = "auto"  # Closed form if known, else quadrature or Gaussian
    CLOSED_FORM = "closed_form"  # Rank-one Gamma reduction or Mehta integral
    QUADRATURE = "quadrature"  # Adaptive quadrature, N <= 2
    GAUSSIAN = "gaussian"  # Laplace approximation around the peak set


class RadiusMethod(Enum):
    """How the tolerance radius r(delta) is located"""

    AUTO = "auto"  # Quadrature for N <= 2, radial law otherwise
    QUADRATURE = "quadrature"  # Bisection on a quadrature CDF, N <= 2
    RADIAL = "radial"  # beta |Y|^2 / 2 is Gamma((beta gamma + N)/2) distributed
    SURROGATE = "surrogate"  # Quantile of fixed-seed draws from G_beta


class TildeShape(Enum):
    """Form of the finite-time Gaussian mixture"""

    FIRST_ORDER = "first_order"  # Shifts linear in x0^2 / (gamma beta t)
    EXACT = "exact"  # Shifts resummed as 1 / sqrt(1 - x0^2 / (gamma beta t))


__all__ = [
    "GAUSSIAN_NORMALIZATION_MIN_BETA",
    "PEAK_GRADIENT_TOLERANCE",
    "PEAK_MAX_HALVINGS",
    "PEAK_MAX_ITER",
    "PEAK_ORBIT_TOLERANCE",
    "PEAK_RESIDUAL_LIMIT",
    "QUAD_EPSABS",
    "QUAD_EPSREL",
    "QUAD_LIMIT",
    "QUAD_TAIL_EXPONENT",
    "QUAD_TAIL_PAD",
    "SURROGATE_SAMPLES",
    "SURROGATE_SEED",
    "TOLERANCE_BISECTION_XTOL",
    "TOLERANCE_DELTA",
    "VALIDITY_MARGIN",
    "WALL_TOLERANCE",
    "NormalizationMethod",
    "RadiusMethod",
    "TildeShape",
]
