"""
Exact 1-D Enums

Type definitions for the exact B_1 machinery, plus re-exports of the numeric
defaults it reads from config/settings.py.
"""

from enum import Enum

from config.settings import (
    BESSEL_SERIES_MAX_TERMS,
    BESSEL_SERIES_OFFSET,
    DEBYE_MIN_ORDER,
    KERNEL_SERIES_RADIUS,
    QUAD_EPSABS,
    QUAD_EPSREL,
    QUAD_LIMIT,
    QUAD_TAIL_EXPONENT,
    QUAD_TAIL_PAD,
)

# Integrand values below this fraction of the peak are treated as zero
TAIL_TRUNCATION = 1e-14

# Accepted quadrature error estimate, relative to max(1, |value|)
QUAD_ACCEPT_ERROR = 1e-7

# Mass tolerance for a normalized Density1D
MASS_TOLERANCE = 1e-6


class DensityCurve(Enum):
    """Curves that can be tabulated on a grid of scaled coordinates Y"""

    SCALED = "scaled"  # Exact f(t, Y) from the B_1 TPD
    STEADY = "steady"  # e^{-beta Y^2/2} |Y|^beta / z_beta
    GTILDE = "gtilde"  # Finite-time Gaussian mixture
    FIRST_ORDER = "first_order"  # Steady state plus the 1/sqrt(t) correction


__all__ = [
    "BESSEL_SERIES_MAX_TERMS",
    "BESSEL_SERIES_OFFSET",
    "DEBYE_MIN_ORDER",
    "DensityCurve",
    "KERNEL_SERIES_RADIUS",
    "MASS_TOLERANCE",
    "QUAD_ACCEPT_ERROR",
    "QUAD_EPSABS",
    "QUAD_EPSREL",
    "QUAD_LIMIT",
    "QUAD_TAIL_EXPONENT",
    "QUAD_TAIL_PAD",
    "TAIL_TRUNCATION",
]
