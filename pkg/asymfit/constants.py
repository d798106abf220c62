"""
Asymptotics Fitting Enums

Type definitions for the asymfit module, plus re-exports of the numeric
defaults it reads from config/settings.py.
"""

from enum import Enum

from config.settings import (
    BOOTSTRAP_RESAMPLES,
    BOOTSTRAP_SEED,
    FIT_GRID_POINTS,
    FIT_MIN_DECADES,
    FIT_MIN_TIMES,
    FIT_SIGNAL_FLOOR,
    FIT_WINDOW_SIGMAS,
    TOLERANCE_DELTA,
    VALIDITY_MARGIN,
)

# Below this |<phi>| the deviation is measured in absolute terms
STEADY_VALUE_FLOOR = 1e-9

# Grid fits need at least this many (beta, t) values per axis
MECHANISM_MIN_VALUES = 3

# Coefficient asymmetries below this count as a symmetric start
ASYMMETRY_FLOOR = 1e-8

# Samples drawn when a multi-dimensional mixture is fitted by window moments
MIXTURE_FIT_SAMPLES = 200_000


class TailFamily(Enum):
    """Shapes of the initial-distribution tail"""

    CUTOFF = "cutoff"  # Compact support: T(C) = 0 beyond the cutoff
    STRETCHED_EXP = "stretched_exp"  # Density ~ exp(-(x/l)^xi)
    POWER = "power"  # Density ~ x^{-zeta - 1}


class SourceKind(Enum):
    """Where expectations <phi>_t come from"""

    EXACT = "exact"  # exact1d quadrature (B_1)
    MONTE_CARLO = "monte_carlo"  # simulate ensembles (any system)


__all__ = [
    "ASYMMETRY_FLOOR",
    "BOOTSTRAP_RESAMPLES",
    "BOOTSTRAP_SEED",
    "FIT_GRID_POINTS",
    "FIT_MIN_DECADES",
    "FIT_MIN_TIMES",
    "FIT_SIGNAL_FLOOR",
    "FIT_WINDOW_SIGMAS",
    "MECHANISM_MIN_VALUES",
    "MIXTURE_FIT_SAMPLES",
    "STEADY_VALUE_FLOOR",
    "TOLERANCE_DELTA",
    "VALIDITY_MARGIN",
    "SourceKind",
    "TailFamily",
]
