"""
Sampler Interface

Abstract interface for the ways of drawing ensembles of a Dunkl process.
The ensemble runner depends on this abstraction, so the exact B_1 sampler
and the general jump-diffusion simulator are interchangeable.
"""

from abc import ABC, abstractmethod
from typing import List

from rootsys import RootSystem
from simulate.models.sim_config import SimConfig
from simulate.models.snapshot import Snapshot


class SamplerInterface(ABC):
    """
    Abstract base class for ensemble samplers.

    Implementations must be deterministic given config.seed.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Short identifier recorded in results"""

    @abstractmethod
    def supports(self, system: RootSystem) -> bool:
        """
        Check whether this sampler can handle a root system.

        Returns:
            True if sample() may be called with this system
        """

    @abstractmethod
    def sample(self, system: RootSystem, config: SimConfig) -> List[Snapshot]:
        """
        Draw config.n_paths positions at every time in config.record_schedule.

        Args:
            system: Root system the process lives on
            config: Validated simulation config

        Returns:
            One Snapshot per recorded time, in schedule order

        Raises:
            SimulationError: If the system is unsupported or sampling fails
        """


class SimulationError(Exception):
    """
    Exception raised for simulation errors.

    Examples:
    - Invalid SimConfig
    - Sampler does not support the root system
    - Too many paths stuck at walls
    """


class StuckAtWallError(SimulationError):
    """A path kept colliding with a chamber wall after every dt halving"""
