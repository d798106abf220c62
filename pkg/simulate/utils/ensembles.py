"""
Beta-Hermite Ensemble

Exact samples of the A_{N-1} steady state from the tridiagonal model:
the eigenvalues lambda of

    H = (1/sqrt 2) tridiag(chi_{beta (N-1)}, ..., chi_beta; N(0, 2) diagonal)

have density proportional to prod |lambda_i - lambda_j|^beta e^{-|lambda|^2/2},
so Y = lambda / sqrt(beta) follows e^{-beta F_R(Y)} / z_beta with kappa = 1.
"""

import logging

import numpy as np

from simulate.interfaces.sampler_interface import SimulationError

logger = logging.getLogger(__name__)


def sample_hermite_ensemble(n: int, beta: float, size: int, seed: int) -> np.ndarray:
    """
    Draw `size` steady-state configurations of A_{n-1}.

    Args:
        n: Number of particles (n >= 1)
        beta: beta > 0
        size: Number of configurations
        seed: Seed for the generator

    Returns:
        (size, n) array of scaled coordinates Y, each row sorted decreasing
        (the positive chamber of build_a)
    """
    if n < 1 or not beta > 0.0 or size < 1:
        raise SimulationError(
            f"bad ensemble parameters n={n}, beta={beta}, size={size}"
        )
    rng = np.random.default_rng(seed)

    diagonal = rng.normal(0.0, np.sqrt(2.0), size=(size, n))
    degrees = beta * np.arange(n - 1, 0, -1)
    off = np.zeros((size, 0))
    if n > 1:
        off = np.sqrt(rng.chisquare(degrees, size=(size, n - 1)))

    matrices = np.zeros((size, n, n))
    index = np.arange(n)
    matrices[:, index, index] = diagonal
    matrices[:, index[:-1], index[1:]] = off
    matrices[:, index[1:], index[:-1]] = off
    eigenvalues = np.linalg.eigvalsh(matrices / np.sqrt(2.0))

    logger.debug(f"Drew {size} beta-Hermite configurations (n={n}, beta={beta:g})")
    return eigenvalues[:, ::-1] / np.sqrt(beta)
