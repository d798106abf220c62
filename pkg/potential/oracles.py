"""
Peak Set Oracles

Independent predictions of the peak sets of the classical families,
computed from orthogonal polynomial zeros rather than by minimizing F_R:

- A_{N-1}, kappa = 1: the peaks are the zeros of the probabilists'
  Hermite polynomial He_N, scaled so that |s|^2 = gamma
- B_N with kappa(e_i) = (2 nu + 1)/2: the squared coordinates s_i^2 are
  the zeros of the generalized Laguerre polynomial L_N^(nu - 1/2)

Both are returned as the positive-chamber peak (coordinates decreasing),
matching the choice vector used by build_a / build_b.
"""

import numpy as np
from numpy.polynomial import hermite_e
from scipy import special


def hermite_peak_oracle(n_particles: int) -> np.ndarray:
    """
    Positive-chamber A_{N-1} peak from the zeros of He_N.

    The zeros come from the companion matrix; they satisfy
    x_i = 2 sum_{j != i} 1/(x_i - x_j), so s = x / sqrt(2) solves the peak
    equations. The scale is fixed by matching |s|^2 = N(N-1)/2.
    """
    coefficients = np.zeros(n_particles + 1)
    coefficients[-1] = 1.0
    zeros = np.sort(hermite_e.hermeroots(coefficients))[::-1]
    gamma = n_particles * (n_particles - 1) / 2.0
    return zeros * np.sqrt(gamma / np.sum(zeros**2))


def laguerre_peak_oracle(n: int, nu: float) -> np.ndarray:
    """
    Positive-chamber B_N peak from the zeros of L_N^(nu - 1/2).

    Requires nu > -1/2 (Laguerre parameter above -1).
    """
    if nu <= -0.5:
        raise ValueError(f"Laguerre oracle needs nu > -1/2, got {nu}")
    zeros, _ = special.roots_genlaguerre(n, nu - 0.5)
    return np.sqrt(np.sort(zeros)[::-1])
