"""
Expectation Source Interface

Abstract interface for anything that can report <phi>_t and the
steady-state <phi>. Decay fits depend on this abstraction, so exact
quadrature and Monte Carlo ensembles are interchangeable.

Test functions take scaled coordinates Y with shape (..., N) and return
an array of shape (...).
"""

from abc import ABC, abstractmethod
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

TestFunction = Callable[[np.ndarray], np.ndarray]


class ExpectationSourceInterface(ABC):
    """Abstract base class for expectation sources"""

    @property
    @abstractmethod
    def name(self) -> str:
        """Short identifier recorded in fits"""

    @property
    @abstractmethod
    def beta(self) -> float:
        """beta of the process"""

    @abstractmethod
    def expectation(self, phi: TestFunction, t: float) -> Tuple[float, float]:
        """
        <phi>_t for the configured initial condition.

        Returns:
            (value, standard error); the error is 0 for exact sources
        """

    @abstractmethod
    def steady_expectation(self, phi: TestFunction) -> float:
        """<phi> under the steady state"""

    def path_values(self, phi: TestFunction, t: float) -> Optional[np.ndarray]:
        """
        Per-path values phi(Y_t) for bootstrap resampling.

        Returns:
            (n_paths,) array, or None for sources without paths
        """
        return None

    def prepare(self, times: Sequence[float]) -> None:
        """Hook called with every time a fit will ask for (optional)"""


class FitError(Exception):
    """
    Exception raised for fitting errors.

    Examples:
    - Too few time points
    - Deviations lost in numerical noise
    - Peak windows overlapping
    """


class SignalLostError(FitError):
    """Deviations fell below the numerical floor"""


class PeaksUnresolvedError(FitError):
    """Peak windows overlap at this beta"""


class InsufficientGridError(FitError):
    """Not enough times, decades or (beta, t) grid values"""
