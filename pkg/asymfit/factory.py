"""
Expectation Source Factory

Factory pattern for creating expectation sources: exact quadrature for
B_1, Monte Carlo ensembles for everything else.
"""

import logging
from typing import Any, Literal

from asymfit.implementations.exact_source import ExactSource
from asymfit.implementations.monte_carlo_source import MonteCarloSource
from asymfit.interfaces.expectation_source import ExpectationSourceInterface, FitError

# Type alias for better type hints
SourceMode = Literal["exact", "monte_carlo"]


class SourceFactory:
    """
    Factory for creating expectation sources.

    Usage:
        # Exact B_1 quadrature
        source = SourceFactory.create_source("exact", beta=1.0, initial=2.0)

        # Monte Carlo ensembles
        source = SourceFactory.create_source(
            "monte_carlo", system=a2, beta=1.0, initial=ic, n_paths=10_000, seed=3
        )
    """

    _logger = logging.getLogger(__name__)

    @classmethod
    def create_source(
        cls, kind: SourceMode = "exact", **kwargs: Any
    ) -> ExpectationSourceInterface:
        """
        Create an expectation source.

        Args:
            kind: "exact" or "monte_carlo"
            **kwargs: Constructor arguments of the chosen source

        Returns:
            ExpectationSourceInterface implementation

        Raises:
            FitError: If the kind is unknown or the arguments do not fit it
        """
        try:
            if kind == "exact":
                source: ExpectationSourceInterface = ExactSource(**kwargs)
            elif kind == "monte_carlo":
                source = MonteCarloSource(**kwargs)
            else:
                raise FitError(f"Unknown expectation source: {kind}")
        except TypeError as e:
            raise FitError(f"Bad arguments for {kind} source: {e}") from e

        cls._logger.info(
            f"Creating {source.name} expectation source (beta={source.beta:g})"
        )
        return source


# Convenience functions for quick creation


def create_source(
    kind: SourceMode = "exact", **kwargs: Any
) -> ExpectationSourceInterface:
    """Quick source creation (see SourceFactory.create_source)"""
    return SourceFactory.create_source(kind, **kwargs)
