"""
Simulation Enums

Type definitions for the simulate module, plus re-exports of the numeric
defaults it reads from config/settings.py.
"""

from enum import Enum

from config.settings import (
    EXACT_SAMPLER_GRID,
    SIM_BASE_DT,
    SIM_CHUNK_SIZE,
    SIM_DT_SAFETY,
    SIM_HISTOGRAM_BINS,
    SIM_HISTOGRAM_HALF_WIDTH,
    SIM_MAX_HALVINGS,
    SIM_MAX_STEPS,
    SIM_MAX_WORKERS,
    SIM_MIN_DT_FRACTION,
    SIM_STUCK_FRACTION,
)

# Initial points farther than this from Span(R) are rejected
SPAN_RESIDUAL_LIMIT = 1e-9


class InitialKind(Enum):
    """Shape of the initial distribution"""

    POINT = "point"  # delta at x0
    MIXTURE = "mixture"  # Finite weighted mixture of point masses


class ConfigStatus(Enum):
    """Simulation config validation results"""

    VALID = "valid"
    BAD_PARAMETER = "bad_parameter"  # beta, horizon, dt or path count out of range
    BAD_SCHEDULE = "bad_schedule"  # Record times unsorted or outside (0, horizon]
    OUT_OF_SPAN = "out_of_span"  # Initial point not in Span(R)
    ON_WALL = "on_wall"  # Initial point on a chamber wall
    DIMENSION_MISMATCH = "dimension_mismatch"


__all__ = [
    "EXACT_SAMPLER_GRID",
    "SIM_BASE_DT",
    "SIM_CHUNK_SIZE",
    "SIM_DT_SAFETY",
    "SIM_HISTOGRAM_BINS",
    "SIM_HISTOGRAM_HALF_WIDTH",
    "SIM_MAX_HALVINGS",
    "SIM_MAX_STEPS",
    "SIM_MAX_WORKERS",
    "SIM_MIN_DT_FRACTION",
    "SIM_STUCK_FRACTION",
    "SPAN_RESIDUAL_LIMIT",
    "ConfigStatus",
    "InitialKind",
]
