"""
Dunkl Kernel Approximations

- kernel_large_beta: the strong-coupling form of V_beta e^{sqrt(beta) x.y}
- kernel_exact_b1: the exact B_1 kernel
      E(z) = Gamma(nu+1) (|z|/2)^{-nu} [I_nu(|z|) + sgn(z) I_{nu+1}(|z|)]
  with nu = (beta - 1)/2, normalized so that E(0) = 1
- kernel_rank_deficient_limit: the beta -> infinity limit exp(x_perp . y_perp)
- kernel_bounds_check: e^{-|x||y|} <= E <= e^{|x||y|}
"""

import logging
from typing import Union

import numpy as np
from scipy import special

from config.settings import KERNEL_SERIES_RADIUS, VALIDITY_MARGIN
from exact1d.bessel import Exact1DError, log_bessel_i_sum
from rootsys import RootSystem

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

# Taylor terms used below KERNEL_SERIES_RADIUS (|z|^{2m} / (4^m m!) is
# below 1e-40 by then)
_KERNEL_SERIES_TERMS = 30


def _check_beta(beta: float) -> None:
    if not beta > 0.0:
        raise Exact1DError(f"beta must be positive, got {beta}")


def kernel_large_beta(
    system: RootSystem,
    beta: float,
    x: np.ndarray,
    y: np.ndarray,
) -> np.ndarray:
    """
    Large-beta approximation of V_beta e^{sqrt(beta) x . y}:

        (1 + d_R x_par . y_par / (gamma sqrt(beta)))
            * exp(sqrt(beta) x_perp . y_perp + |x_par|^2 |y_par|^2 / (2 gamma))

    Valid for beta >> d_R / gamma and d_R^2 |x_par|^2 |y_par|^2 / (beta gamma^2) << 1.
    Outside that window a warning is logged and the value is still returned.

    Args:
        system: Root system
        beta: beta > 0
        x, y: Points (vectorized over leading axes)
    """
    _check_beta(beta)
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    d, gamma = system.rank, system.gamma

    x_par, y_par = system.parallel(x), system.parallel(y)
    par_dot = np.sum(x_par * y_par, axis=-1)
    par_sq = np.sum(x_par**2, axis=-1) * np.sum(y_par**2, axis=-1)
    perp_dot = np.sum(system.perpendicular(x) * system.perpendicular(y), axis=-1)

    coupling = beta * gamma / d
    if coupling < VALIDITY_MARGIN:
        logger.warning(
            f"beta gamma / d_R = {coupling:.3g} for {system.name}; "
            f"large-beta kernel outside its validity window"
        )
    worst = float(np.max(d**2 * par_sq / (beta * gamma**2)))
    if worst * VALIDITY_MARGIN > 1.0:
        logger.warning(
            f"d_R^2 x^2 y^2 / (beta gamma^2) reaches {worst:.3g} for {system.name}; "
            f"large-beta kernel outside its validity window"
        )

    prefactor = 1.0 + d * par_dot / (gamma * np.sqrt(beta))
    return prefactor * np.exp(np.sqrt(beta) * perp_dot + par_sq / (2.0 * gamma))


def kernel_even_coefficient_b1(beta: float, m: int) -> float:
    """
    Taylor coefficient of z^{2m} in the B_1 kernel:
    Gamma(nu+1) / (4^m m! Gamma(nu+m+1))
    """
    _check_beta(beta)
    nu = (beta - 1.0) / 2.0
    return float(
        np.exp(
            special.gammaln(nu + 1.0)
            - m * np.log(4.0)
            - special.gammaln(m + 1.0)
            - special.gammaln(nu + m + 1.0)
        )
    )


def kernel_odd_coefficient_b1(beta: float, m: int) -> float:
    """Taylor coefficient of z^{2m+1}: Gamma(nu+1) / (2^{2m+1} m! Gamma(nu+m+2))"""
    _check_beta(beta)
    nu = (beta - 1.0) / 2.0
    return float(
        np.exp(
            special.gammaln(nu + 1.0)
            - (2 * m + 1) * np.log(2.0)
            - special.gammaln(m + 1.0)
            - special.gammaln(nu + m + 2.0)
        )
    )


def _log_kernel_series(beta: float, z: np.ndarray) -> np.ndarray:
    """log of the Taylor series of the B_1 kernel (E > 0 everywhere)"""
    m = np.arange(_KERNEL_SERIES_TERMS)
    even = np.array([kernel_even_coefficient_b1(beta, k) for k in m])
    odd = np.array([kernel_odd_coefficient_b1(beta, k) for k in m])
    z2 = z[:, None] ** (2 * m)[None, :]
    return np.log(z2 @ even + z * (z2 @ odd))


def log_kernel_exact_b1(beta: float, z: ArrayLike) -> np.ndarray:
    """
    log of the exact B_1 kernel V_beta e^{z}.

    The Taylor series is used for |z| < KERNEL_SERIES_RADIUS and the
    log-space Bessel form elsewhere, so beta in the thousands and large |z|
    stay finite.

    Raises:
        Exact1DError: If beta <= 0
    """
    _check_beta(beta)
    nu = (beta - 1.0) / 2.0
    z = np.asarray(z, dtype=np.float64)
    flat = z.reshape(-1)
    out = np.empty_like(flat)

    small = np.abs(flat) < KERNEL_SERIES_RADIUS
    if np.any(small):
        out[small] = _log_kernel_series(beta, flat[small])

    large = ~small
    if np.any(large):
        magnitude = np.abs(flat[large])
        out[large] = (
            special.gammaln(nu + 1.0)
            - nu * np.log(magnitude / 2.0)
            + log_bessel_i_sum(nu, magnitude, np.sign(flat[large]))
        )
    return out.reshape(z.shape)


def kernel_exact_b1(beta: float, z: ArrayLike) -> np.ndarray:
    """Exact B_1 kernel V_beta e^{z}; E(0) = 1 and e^{-|z|} <= E(z) <= e^{|z|}"""
    with np.errstate(over="ignore"):
        return np.exp(log_kernel_exact_b1(beta, z))


def kernel_rank_deficient_limit(
    system: RootSystem, x: np.ndarray, y: np.ndarray
) -> np.ndarray:
    """beta -> infinity limit of V_beta e^{x . y}: exp(x_perp . y_perp)"""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    return np.exp(np.sum(system.perpendicular(x) * system.perpendicular(y), axis=-1))


def kernel_bounds_check(
    system: RootSystem,
    beta: float,
    x: ArrayLike,
    y: ArrayLike,
    value: float,
) -> bool:
    """
    Check e^{-|x||y|} <= value <= e^{|x||y|}.

    x and y may be scalars (B_1 coordinates) or vectors. At x = 0 the
    bounds collapse and value must be 1.
    """
    xy = float(np.linalg.norm(np.atleast_1d(x)) * np.linalg.norm(np.atleast_1d(y)))
    slack = 1e-12
    lower = np.exp(-xy) * (1.0 - slack)
    upper = np.exp(xy) * (1.0 + slack)
    passed = bool(lower <= value <= upper)
    if not passed:
        logger.debug(
            f"Kernel value {value:.6g} outside [{lower:.6g}, {upper:.6g}] "
            f"for {system.name}, beta={beta:g}"
        )
    return passed
