"""
Free Energy

F_R(Y) = |Y|^2 / 2 - sum_{alpha in R_+} kappa(alpha) log|alpha . Y|

with its gradient and Hessian. All functions accept a single point (N,)
or a batch of points (P, N). Roots with kappa = 0 carry no log term and
never count as walls.
"""

import numpy as np

from potential.constants import WALL_TOLERANCE
from rootsys import RootSystem


class PotentialError(Exception):
    """
    Exception raised by the potential module.

    Examples:
    - Evaluating F_R on a chamber wall
    - Peak solver not converging
    - z_beta quadrature failing
    """


class WallContactError(PotentialError):
    """alpha . Y vanished for a root with nonzero multiplicity"""


def active_roots(system: RootSystem):
    """Positive roots with kappa > 0, and their multiplicities"""
    mask = system.positive_kappa > 0.0
    return system.positive_roots[mask], system.positive_kappa[mask]


def root_dots(
    system: RootSystem, y: np.ndarray, check_walls: bool = True
) -> np.ndarray:
    """
    alpha . Y for every active positive root.

    Raises:
        WallContactError: If check_walls and some |alpha . Y| < 1e-300
    """
    alphas, _ = active_roots(system)
    dots = np.asarray(y, dtype=np.float64) @ alphas.T
    if check_walls and np.any(np.abs(dots) < WALL_TOLERANCE):
        raise WallContactError(f"Point is on chamber wall of {system.name}")
    return dots


def f_r(system: RootSystem, y: np.ndarray) -> np.ndarray:
    """
    F_R(Y).

    Raises:
        WallContactError: If Y is on a chamber wall
    """
    y = np.asarray(y, dtype=np.float64)
    _, kappa = active_roots(system)
    dots = root_dots(system, y)
    return 0.5 * np.sum(y * y, axis=-1) - np.log(np.abs(dots)) @ kappa


def log_weight(system: RootSystem, beta: float, y: np.ndarray) -> np.ndarray:
    """
    -beta F_R(Y), with -inf on walls instead of an error.

    Vectorized over rows of y; this is the log of the unnormalized
    steady-state density.
    """
    y = np.asarray(y, dtype=np.float64)
    _, kappa = active_roots(system)
    dots = root_dots(system, y, check_walls=False)
    with np.errstate(divide="ignore"):
        logs = np.log(np.abs(dots))
    return -beta * (0.5 * np.sum(y * y, axis=-1) - logs @ kappa)


def grad_f_r(system: RootSystem, y: np.ndarray) -> np.ndarray:
    """
    grad_i F_R = Y_i - sum kappa(alpha) alpha_i / (alpha . Y).

    Raises:
        WallContactError: If Y is on a chamber wall
    """
    y = np.asarray(y, dtype=np.float64)
    alphas, kappa = active_roots(system)
    dots = root_dots(system, y)
    return y - (kappa / dots) @ alphas


def hessian_f_r(system: RootSystem, y: np.ndarray) -> np.ndarray:
    """
    H_ij = delta_ij + sum kappa(alpha) alpha_i alpha_j / (alpha . Y)^2.

    Returns (N, N) for a single point or (P, N, N) for a batch.

    Raises:
        WallContactError: If Y is on a chamber wall
    """
    y = np.asarray(y, dtype=np.float64)
    alphas, kappa = active_roots(system)
    dots = root_dots(system, y)
    weights = kappa / dots**2
    curvature = np.einsum("...m,mi,mj->...ij", weights, alphas, alphas)
    return np.eye(system.ambient_dim) + curvature
