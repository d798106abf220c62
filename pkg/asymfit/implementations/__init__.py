"""
Asymptotics Fitting Implementations Package

Exposes concrete expectation sources.
"""

from asymfit.implementations.exact_source import ExactSource
from asymfit.implementations.monte_carlo_source import MonteCarloSource

# Public API
__all__ = [
    "ExactSource",
    "MonteCarloSource",
]
