"""
Asymptotics Fitting Module

Quantitative checks of the two asymptotic regimes of Dunkl processes:
power-law fits of the approach to the steady state as t grows, and
per-peak Gaussian fits of the strong-coupling regime as beta grows.

Architecture:
- interfaces/: ExpectationSourceInterface and the fitting exceptions
- implementations/: exact 1-d quadrature and Monte Carlo expectation sources
- decay.py: power-law and steady-state decay fits, path bootstrap
- freeze.py: per-peak mixture fits and the mechanism split
- tails.py: tail integrals, cutoffs and validity windows
- models/: DecayFit, PowerLawFit, MixtureFit, MechanismReport
"""

# ============================================================================
# asymfit/__init__.py - Main Package Exports
# ============================================================================

from asymfit.constants import SourceKind, TailFamily
from asymfit.decay import bootstrap_slope, fit_power_law, steady_decay_fit
from asymfit.factory import SourceFactory, create_source
from asymfit.freeze import freeze_fit, mechanism_split
from asymfit.implementations.exact_source import ExactSource
from asymfit.implementations.monte_carlo_source import MonteCarloSource
from asymfit.interfaces.expectation_source import (
    ExpectationSourceInterface,
    FitError,
    InsufficientGridError,
    PeaksUnresolvedError,
    SignalLostError,
    TestFunction,
)
from asymfit.models.decay_fit import DecayFit, PowerLawFit
from asymfit.models.mechanism_report import MechanismReport
from asymfit.models.mixture_fit import MixtureFit
from asymfit.tails import (
    freeze_validity,
    steady_correction_bound,
    steady_validity_window,
    tail_cutoff,
    tail_integral,
)

# Public API (sorted alphabetically)
__all__ = [
    "DecayFit",
    "ExactSource",
    "ExpectationSourceInterface",
    "FitError",
    "InsufficientGridError",
    "MechanismReport",
    "MixtureFit",
    "MonteCarloSource",
    "PeaksUnresolvedError",
    "PowerLawFit",
    "SignalLostError",
    "SourceFactory",
    "SourceKind",
    "TailFamily",
    "TestFunction",
    "bootstrap_slope",
    "create_source",
    "fit_power_law",
    "freeze_fit",
    "freeze_validity",
    "mechanism_split",
    "steady_correction_bound",
    "steady_decay_fit",
    "steady_validity_window",
    "tail_cutoff",
    "tail_integral",
]
