"""
Simulation Module

Monte Carlo ensembles of Dunkl processes on any root system.

Architecture mirrors the other packages:
- interfaces/: SamplerInterface and the simulation exceptions
- implementations/: jump-diffusion simulator and exact B_1 sampler
- controllers/: ensemble runner (snapshots -> density estimates)
- models/: SimConfig, InitialCondition, Snapshot, DensityEstimate, EnsembleResult
- utils/: stepping kernel, random streams, config validation, beta-Hermite ensemble
"""

# ============================================================================
# simulate/__init__.py - Main Package Exports
# ============================================================================

from simulate.constants import ConfigStatus, InitialKind
from simulate.controllers.ensemble_runner import histogram_edges, run_ensemble
from simulate.factory import SamplerFactory, create_sampler
from simulate.implementations.exact_b1 import (
    ExactB1Sampler,
    inverse_cdf,
    sample_exact_1d,
)
from simulate.implementations.jump_diffusion import JumpDiffusionSampler
from simulate.interfaces.sampler_interface import (
    SamplerInterface,
    SimulationError,
    StuckAtWallError,
)
from simulate.models.density_estimate import DensityEstimate
from simulate.models.ensemble_result import EnsembleResult
from simulate.models.sim_config import InitialCondition, SimConfig
from simulate.models.snapshot import Snapshot
from simulate.utils.ensembles import sample_hermite_ensemble
from simulate.utils.rng_utils import chunk_rng, chunk_sizes
from simulate.utils.stepping import StepKernel, step
from simulate.utils.validation_utils import validate_config

# Public API (sorted alphabetically)
__all__ = [
    "ConfigStatus",
    "DensityEstimate",
    "EnsembleResult",
    "ExactB1Sampler",
    "InitialCondition",
    "InitialKind",
    "JumpDiffusionSampler",
    "SamplerFactory",
    "SamplerInterface",
    "SimConfig",
    "SimulationError",
    "Snapshot",
    "StepKernel",
    "StuckAtWallError",
    "chunk_rng",
    "chunk_sizes",
    "create_sampler",
    "histogram_edges",
    "inverse_cdf",
    "run_ensemble",
    "sample_exact_1d",
    "sample_hermite_ensemble",
    "step",
    "validate_config",
]
