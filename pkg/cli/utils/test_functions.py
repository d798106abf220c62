"""
Named Test Functions

Test functions phi(Y) for the steady-state decay experiments. Y has shape
(..., N).
"""

from typing import Callable, Dict

import numpy as np


def _linear(y: np.ndarray) -> np.ndarray:
    """1 + Y_1: not W-invariant, relaxes as t^{-1/2}"""
    return 1.0 + y[..., 0]


def _square(y: np.ndarray) -> np.ndarray:
    """|Y|^2: W-invariant"""
    return np.sum(y**2, axis=-1)


TEST_FUNCTIONS: Dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "linear": _linear,
    "square": _square,
}


def get_test_function(name: str) -> Callable[[np.ndarray], np.ndarray]:
    """
    Look up a test function by name.

    Raises:
        ValueError: If the name is unknown
    """
    try:
        return TEST_FUNCTIONS[name]
    except KeyError:
        raise ValueError(
            f"Unknown test function '{name}' (expected one of {sorted(TEST_FUNCTIONS)})"
        ) from None
