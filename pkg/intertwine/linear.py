"""
Intertwining Operator on Linear Functions

V_beta[x . y] = x . M_beta y with

    M_beta = (I + beta sum_{alpha in R_+} kappa(alpha) alpha alpha^T / |alpha|^2)^{-1}

When the Schur sum is (gamma/d_R) I on Span(R) the inverse has the closed
form I_perp + I_R / (1 + beta gamma / d_R). Reducible systems whose
components have different gamma_i / d_i ratios do not have that form, and
the direct inverse is used instead.
"""

import logging
from typing import Callable

import numpy as np

from intertwine.models.linear_action import LinearAction
from rootsys import RootSystem, reflect, schur_is_scalar, schur_sum

logger = logging.getLogger(__name__)

# Central-difference step relative to max(1, |x|)
DIFFERENCE_STEP = 1e-5


def m_beta_direct(system: RootSystem, beta: float) -> np.ndarray:
    """M_beta by direct matrix inversion"""
    return np.linalg.inv(np.eye(system.ambient_dim) + beta * schur_sum(system))


def m_beta_closed_form(system: RootSystem, beta: float) -> np.ndarray:
    """M_beta from the Schur-sum identity (valid when schur_is_scalar holds)"""
    return LinearAction(system, beta).matrix()


def m_beta_matrix(system: RootSystem, beta: float) -> np.ndarray:
    """
    M_beta, closed form when available, direct inverse otherwise.

    Args:
        system: Root system
        beta: beta >= 0
    """
    if schur_is_scalar(system):
        return m_beta_closed_form(system, beta)
    logger.warning(
        f"Schur sum of {system.name} is not scalar on Span(R); "
        f"using the direct inverse of M_beta"
    )
    return m_beta_direct(system, beta)


def v_beta_linear(
    system: RootSystem, beta: float, x: np.ndarray, y: np.ndarray
) -> np.ndarray:
    """
    V_beta applied to the linear function x -> x . y, evaluated at x.

    Returns x_par . y_par / (1 + beta gamma / d_R) + x_perp . y_perp
    (vectorized over leading axes).
    """
    if schur_is_scalar(system):
        return LinearAction(system, beta).apply(x, y)
    matrix = m_beta_matrix(system, beta)
    return np.sum(np.asarray(x) @ matrix * np.asarray(y), axis=-1)


def dunkl_operator(
    system: RootSystem,
    f: Callable[[np.ndarray], float],
    x: np.ndarray,
    index: int,
    beta: float,
) -> float:
    """
    Numerical Dunkl operator T_i f at x.

    T_i f = d f / d x_i + (beta/2) sum_{alpha in R_+} kappa(alpha) alpha_i
            (f(x) - f(sigma_alpha x)) / (alpha . x)

    The derivative is a central difference with step 1e-5 * max(1, |x|).
    """
    x = np.asarray(x, dtype=np.float64)
    h = DIFFERENCE_STEP * max(1.0, float(np.linalg.norm(x)))
    step = np.zeros_like(x)
    step[index] = h
    derivative = (f(x + step) - f(x - step)) / (2.0 * h)

    fx = f(x)
    exchange = 0.0
    for alpha, kappa in zip(system.positive_roots, system.positive_kappa):
        if kappa == 0.0 or alpha[index] == 0.0:
            continue
        difference = fx - f(reflect(alpha, x))
        exchange += kappa * alpha[index] * difference / float(alpha @ x)
    return float(derivative + 0.5 * beta * exchange)


def dunkl_operator_b1(f: Callable[[float], float], x: float, beta: float) -> float:
    """
    B_1 Dunkl operator: f'(x) + (beta/2) (f(x) - f(-x)) / x.

    Args:
        f: Scalar function of one variable
        x: Nonzero evaluation point
        beta: beta > 0
    """
    h = DIFFERENCE_STEP * max(1.0, abs(x))
    derivative = (f(x + h) - f(x - h)) / (2.0 * h)
    return float(derivative + 0.5 * beta * (f(x) - f(-x)) / x)
