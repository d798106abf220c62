"""
Asymptotics Fitting Interfaces Package

Exposes abstract interfaces for asymfit components.
"""

from asymfit.interfaces.expectation_source import (
    ExpectationSourceInterface,
    FitError,
    InsufficientGridError,
    PeaksUnresolvedError,
    SignalLostError,
    TestFunction,
)

# Public API
__all__ = [
    # Interface
    "ExpectationSourceInterface",
    # Exceptions
    "FitError",
    "InsufficientGridError",
    "PeaksUnresolvedError",
    "SignalLostError",
    "TestFunction",
]
