"""
Exact Expectation Source

<phi>_t for the B_1 process by quadrature against the exact scaled density.
"""

import logging
from typing import Tuple, Union

import numpy as np

from asymfit.interfaces.expectation_source import (
    ExpectationSourceInterface,
    TestFunction,
)
from exact1d import expectation_1d, expectation_mixture_1d, steady_expectation_1d


def _scalar(phi: TestFunction):
    """Adapt a test function of Y (..., 1) to a function of a float"""
    return lambda y: float(phi(np.array([y])))


class ExactSource(ExpectationSourceInterface):
    """
    Exact B_1 expectations.

    Usage:
        source = ExactSource(beta=1.0, initial=2.0)
        value, _ = source.expectation(lambda Y: Y[..., 0] + 1.0, t=20.0)
    """

    def __init__(self, beta: float, initial: Union[float, object]):
        """
        Args:
            beta: beta > 0
            initial: Starting point x0, or a mixture (InitialCondition or
                     (x0, weight) pairs)
        """
        self._beta = float(beta)
        self.initial = initial
        self.logger = logging.getLogger(__name__)

    @property
    def name(self) -> str:
        return "exact"

    @property
    def beta(self) -> float:
        return self._beta

    def expectation(self, phi: TestFunction, t: float) -> Tuple[float, float]:
        if isinstance(self.initial, (int, float)):
            value = expectation_1d(_scalar(phi), t, float(self.initial), self._beta)
        else:
            value = expectation_mixture_1d(_scalar(phi), t, self.initial, self._beta)
        self.logger.debug(f"Exact <phi>_t at t={t:g}: {value:.12g}")
        return value, 0.0

    def steady_expectation(self, phi: TestFunction) -> float:
        return steady_expectation_1d(_scalar(phi), self._beta)
