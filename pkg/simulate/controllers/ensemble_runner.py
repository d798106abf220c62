"""
Ensemble Runner

Runs a sampler over a SimConfig and turns the raw snapshots into
DensityEstimates of the scaled variable Y = X / sqrt(beta t).
"""

import logging
from typing import Optional

import numpy as np

from rootsys import RootSystem
from simulate.constants import (
    SIM_HISTOGRAM_HALF_WIDTH,
    SIM_STUCK_FRACTION,
    ConfigStatus,
)
from simulate.factory import SamplerFactory, SamplerMode
from simulate.interfaces.sampler_interface import (
    SamplerInterface,
    SimulationError,
    StuckAtWallError,
)
from simulate.models.density_estimate import DensityEstimate
from simulate.models.ensemble_result import EnsembleResult
from simulate.models.sim_config import SimConfig
from simulate.utils.validation_utils import validate_config

logger = logging.getLogger(__name__)


def histogram_edges(system: RootSystem, bins: int) -> np.ndarray:
    """bins + 1 edges over [-3 sqrt(gamma), 3 sqrt(gamma)]"""
    half_width = SIM_HISTOGRAM_HALF_WIDTH * np.sqrt(system.gamma)
    return np.linspace(-half_width, half_width, bins + 1)


def run_ensemble(
    system: RootSystem,
    config: SimConfig,
    mode: SamplerMode = "auto",
    sampler: Optional[SamplerInterface] = None,
) -> EnsembleResult:
    """
    Sample an ensemble and estimate the scaled density at each recorded time.

    Args:
        system: Root system
        config: Simulation config
        mode: Sampler choice when `sampler` is not given
        sampler: Explicit sampler

    Returns:
        EnsembleResult with one DensityEstimate per recorded time

    Raises:
        SimulationError: If the config is invalid
        StuckAtWallError: If more than 0.1% of paths got stuck at a wall
    """
    status, error = validate_config(system, config)
    if status != ConfigStatus.VALID:
        raise SimulationError(f"Invalid simulation config ({status.value}): {error}")

    if sampler is None:
        sampler = SamplerFactory.create_sampler(system, mode)
    logger.info(f"Running {config!r} on {system.name} with {sampler.name}")

    snapshots = sampler.sample(system, config)
    edges = histogram_edges(system, config.histogram_bins)

    estimates = []
    for snapshot in snapshots:
        fraction = snapshot.n_stuck / snapshot.n_paths
        if fraction > SIM_STUCK_FRACTION:
            raise StuckAtWallError(
                f"stuck at wall: {snapshot.n_stuck} of {snapshot.n_paths} paths "
                f"({fraction:.2%}) by t={snapshot.time:g}"
            )
        if snapshot.n_stuck:
            logger.warning(
                f"{snapshot.n_stuck} path(s) stuck at a wall by t={snapshot.time:g}; "
                f"excluded from the estimate"
            )

        healthy = ~snapshot.stuck if snapshot.stuck is not None else slice(None)
        scaled = snapshot.healthy / np.sqrt(config.beta * snapshot.time)
        jumps = None if snapshot.jump_counts is None else snapshot.jump_counts[healthy]
        estimate = DensityEstimate.from_samples(
            snapshot.time,
            scaled,
            edges,
            jump_counts=jumps,
            keep_samples=config.keep_samples,
            n_stuck=snapshot.n_stuck,
        )
        logger.debug(f"{estimate!r}")
        estimates.append(estimate)

    return EnsembleResult(
        config=config,
        estimates=estimates,
        sampler=sampler.name,
        system_name=system.name,
    )
