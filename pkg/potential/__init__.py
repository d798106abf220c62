"""
Potential Module

The free energy F_R, its peak set, the steady-state density and its
normalization, the tolerance radius, and the Gaussian mixture
approximations G_beta and G~_beta.

Layout:
- free_energy.py: F_R, gradient, Hessian
- peak_solver.py: damped Newton + Weyl orbit
- steady_state.py: z_beta, steady density, r(delta)
- mixtures.py: G_beta, G~_beta, delta-function limit
- oracles.py: Hermite / Laguerre peak predictions
- models/: PeakSet, GaussianMixture
"""

# ============================================================================
# potential/__init__.py - Main Package Exports
# ============================================================================

from potential.constants import NormalizationMethod, RadiusMethod, TildeShape
from potential.free_energy import (
    active_roots,
    PotentialError,
    WallContactError,
    f_r,
    grad_f_r,
    hessian_f_r,
    log_weight,
)
from potential.mixtures import (
    delta_limit_mass,
    freeze_window_ratios,
    gaussian_approx,
    gaussian_tilde,
    gaussian_tilde_general,
)
from potential.models.gaussian_mixture import GaussianMixture
from potential.models.peak_set import PeakSet
from potential.oracles import hermite_peak_oracle, laguerre_peak_oracle
from potential.peak_solver import PeakConvergenceError, chamber_start, peak_set
from potential.steady_state import (
    NormalizationError,
    log_steady_density,
    log_z_beta,
    mehta_log_z_beta,
    steady_density,
    steady_mass_within,
    tolerance_radius,
    z_beta,
)

# Public API (sorted alphabetically)
__all__ = [
    "GaussianMixture",
    "NormalizationError",
    "NormalizationMethod",
    "PeakConvergenceError",
    "PeakSet",
    "PotentialError",
    "RadiusMethod",
    "TildeShape",
    "WallContactError",
    "active_roots",
    "chamber_start",
    "delta_limit_mass",
    "f_r",
    "freeze_window_ratios",
    "gaussian_approx",
    "gaussian_tilde",
    "gaussian_tilde_general",
    "grad_f_r",
    "hermite_peak_oracle",
    "hessian_f_r",
    "laguerre_peak_oracle",
    "log_steady_density",
    "log_weight",
    "log_z_beta",
    "mehta_log_z_beta",
    "peak_set",
    "steady_density",
    "steady_mass_within",
    "tolerance_radius",
    "z_beta",
]
