"""
Exact One-Dimensional Package

Ground truth for the B_1 Dunkl process: modified Bessel functions, the
explicit transition density, the scaled and steady-state densities,
the finite-time Gaussian mixture and quadrature expectations.

Usage:
    from exact1d import expectation_1d, scaled_density_1d

    f = scaled_density_1d(t=2.0, Y=[0.5, 1.0], x0=2.0, beta=1.0)
    expectation_1d(lambda y: y + 1.0, t=20.0, x0=2.0, beta=1.0)  # 1 + 2/sqrt(20)
"""

# ============================================================================
# exact1d/__init__.py - Main Package Exports
# ============================================================================

from exact1d.bessel import Exact1DError, bessel_i, log_bessel_i, log_bessel_i_sum
from exact1d.constants import DensityCurve
from exact1d.densities import (
    gaussian_tilde_1d,
    log_c_beta,
    log_scaled_density_1d,
    log_tpd_b1,
    log_tpd_template_b1,
    log_z_beta_1d,
    mixture_components,
    scaled_density_1d,
    scaled_density_mixture_1d,
    steady_cdf_1d,
    steady_density_1d,
    tpd_b1,
    tpd_template_b1,
)
from exact1d.expectations import (
    cdf_table_1d,
    density_grid,
    domain_half_width,
    expectation_1d,
    expectation_mixture_1d,
    first_order_expectation_1d,
    integrate_density,
    steady_expectation_1d,
)
from exact1d.models.density_1d import Density1D

# Public API (sorted alphabetically)
__all__ = [
    "Density1D",
    "DensityCurve",
    "Exact1DError",
    "bessel_i",
    "cdf_table_1d",
    "density_grid",
    "domain_half_width",
    "expectation_1d",
    "expectation_mixture_1d",
    "first_order_expectation_1d",
    "gaussian_tilde_1d",
    "integrate_density",
    "log_bessel_i",
    "log_bessel_i_sum",
    "log_c_beta",
    "log_scaled_density_1d",
    "log_tpd_b1",
    "log_tpd_template_b1",
    "log_z_beta_1d",
    "mixture_components",
    "scaled_density_1d",
    "scaled_density_mixture_1d",
    "steady_cdf_1d",
    "steady_density_1d",
    "steady_expectation_1d",
    "tpd_b1",
    "tpd_template_b1",
]
