"""
Simulation Factory

Factory pattern for choosing a sampler. B_1 gets the exact inverse-CDF
sampler in auto mode; every other system gets the jump-diffusion simulator.
"""

import logging
from typing import Literal

from rootsys import RootSystem
from simulate.implementations.exact_b1 import ExactB1Sampler
from simulate.implementations.jump_diffusion import JumpDiffusionSampler
from simulate.interfaces.sampler_interface import SamplerInterface, SimulationError

# Type alias for better type hints
SamplerMode = Literal["auto", "jump_diffusion", "exact"]


class SamplerFactory:
    """
    Factory for creating samplers.

    Usage:
        # Exact for B_1, jump-diffusion otherwise
        sampler = SamplerFactory.create_sampler(system)

        # Force the simulator (e.g. to check it against the exact law)
        sampler = SamplerFactory.create_sampler(system, mode="jump_diffusion")
    """

    _logger = logging.getLogger(__name__)

    @classmethod
    def create_sampler(
        cls,
        system: RootSystem,
        mode: SamplerMode = "auto",
    ) -> SamplerInterface:
        """
        Create a sampler for a root system.

        Args:
            system: Root system to sample
            mode: "auto", "jump_diffusion" or "exact"

        Returns:
            SamplerInterface implementation

        Raises:
            SimulationError: If mode="exact" but the system is not B_1, or
                             the mode is unknown
        """
        if mode == "jump_diffusion":
            cls._logger.info(
                f"Creating jump-diffusion sampler for {system.name} (forced)"
            )
            return JumpDiffusionSampler()

        if mode == "exact":
            sampler = ExactB1Sampler()
            if not sampler.supports(system):
                raise SimulationError(
                    f"Exact sampler requested but {system.name} is not B_1"
                )
            cls._logger.info("Creating exact B_1 sampler (forced)")
            return sampler

        if mode != "auto":
            raise SimulationError(f"Unknown sampler mode: {mode}")

        exact = ExactB1Sampler()
        if exact.supports(system):
            cls._logger.info("Creating exact B_1 sampler (auto-detected)")
            return exact
        cls._logger.info(
            f"Creating jump-diffusion sampler for {system.name} (auto-detected)"
        )
        return JumpDiffusionSampler()


# Convenience functions for quick creation


def create_sampler(
    system: RootSystem, force_simulation: bool = False
) -> SamplerInterface:
    """
    Quick sampler creation.

    Args:
        system: Root system
        force_simulation: If True, always use the jump-diffusion simulator

    Returns:
        Sampler interface
    """
    mode = "jump_diffusion" if force_simulation else "auto"
    return SamplerFactory.create_sampler(system, mode=mode)
