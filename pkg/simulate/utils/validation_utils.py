"""
Simulation Config Validation

Checks a SimConfig against the root system it will run on.
"""

from typing import Optional, Tuple

import numpy as np

from rootsys import RootSystem
from simulate.constants import SPAN_RESIDUAL_LIMIT, ConfigStatus
from simulate.models.sim_config import SimConfig


def validate_config(
    system: RootSystem, config: SimConfig
) -> Tuple[ConfigStatus, Optional[str]]:
    """
    Validate a simulation config.

    Args:
        system: Root system
        config: Config to check

    Returns:
        Tuple of (status, error_message)
        - (ConfigStatus.VALID, None) if the config can run
        - (other status, "description") otherwise

    Example:
        status, error = validate_config(system, config)
        if status != ConfigStatus.VALID:
            print(f"Bad config: {error}")
    """
    bad = ConfigStatus.BAD_PARAMETER
    if not config.beta > 0.0:
        return bad, f"beta must be positive, got {config.beta}"
    if not config.horizon > 0.0:
        return bad, f"horizon must be positive, got {config.horizon}"
    if min(config.n_paths, config.chunk_size, config.max_steps) < 1:
        return bad, "n_paths, chunk_size and max_steps must be at least 1"
    if not config.base_dt > 0.0:
        return bad, f"base_dt must be positive, got {config.base_dt}"
    if not 0.0 < config.dt_safety <= 1.0:
        return bad, f"dt_safety must lie in (0, 1], got {config.dt_safety}"

    times = np.asarray(config.record_schedule)
    if times.size == 0 or np.any(np.diff(times) <= 0.0):
        return ConfigStatus.BAD_SCHEDULE, "record times must be strictly increasing"
    if times[0] <= 0.0 or times[-1] > config.horizon:
        return (
            ConfigStatus.BAD_SCHEDULE,
            f"record times must lie in (0, {config.horizon:g}]",
        )

    points = config.initial.points
    if points.shape[1] != system.ambient_dim:
        return (
            ConfigStatus.DIMENSION_MISMATCH,
            f"initial points have dimension {points.shape[1]}, "
            f"{system.name} lives in R^{system.ambient_dim}",
        )

    residual = float(np.max(np.linalg.norm(system.perpendicular(points), axis=1)))
    if residual > SPAN_RESIDUAL_LIMIT:
        return (
            ConfigStatus.OUT_OF_SPAN,
            f"initial point outside Span(R) (residual {residual:.2e})",
        )

    dots = points @ system.positive_roots.T
    active = system.positive_kappa > 0.0
    if np.any(dots[:, active] == 0.0):
        return ConfigStatus.ON_WALL, "initial point lies on a chamber wall"

    return ConfigStatus.VALID, None
