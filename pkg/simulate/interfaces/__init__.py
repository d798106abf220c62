"""
Simulation Interfaces Package

Exposes abstract interfaces for simulation components.
"""

from simulate.interfaces.sampler_interface import (
    SamplerInterface,
    SimulationError,
    StuckAtWallError,
)

# Public API
__all__ = [
    # Interface
    "SamplerInterface",
    # Exceptions
    "SimulationError",
    "StuckAtWallError",
]
