"""
Modified Bessel Functions

I_nu(z) for real nu >= -1/2 and z >= 0, evaluated in log space so that the
large orders needed at beta in the thousands (nu = (beta - 1)/2) neither
overflow nor underflow.

Regimes:
- nu >= 1000: Debye uniform expansion with U_k up to k = 4, which is at
  machine precision for such orders
- z < 20 + nu: power series, summed with logsumexp
- otherwise: exponentially scaled scipy.special.ive
"""

import logging

import numpy as np
from scipy import special

from exact1d.constants import (
    BESSEL_SERIES_MAX_TERMS,
    BESSEL_SERIES_OFFSET,
    DEBYE_MIN_ORDER,
)

logger = logging.getLogger(__name__)


class Exact1DError(Exception):
    """
    Exception raised by the exact one-dimensional machinery.

    Examples:
    - Bessel order below -1/2
    - Non-positive t or beta
    - Quadrature not converging
    """


def _debye_u(k: int, p: np.ndarray) -> np.ndarray:
    """Debye polynomials U_k(p), k <= 4"""
    if k == 1:
        return (p - 5.0 * p**3 / 3.0) / 8.0
    if k == 2:
        return p**2 * (81.0 - 462.0 * p**2 + 385.0 * p**4) / 1152.0
    if k == 3:
        return (
            30375.0 * p**3 - 369603.0 * p**5 + 765765.0 * p**7 - 425425.0 * p**9
        ) / 414720.0
    if k == 4:
        return (
            p**4
            * (
                4465125.0
                - 94121676.0 * p**2
                + 349922430.0 * p**4
                - 446185740.0 * p**6
                + 185910725.0 * p**8
            )
            / 3.981312e7
        )
    return np.ones_like(p)


def _log_bessel_debye(nu: float, z: np.ndarray) -> np.ndarray:
    """Debye uniform expansion of log I_nu(z), z > 0"""
    x = z / nu
    root = np.sqrt(1.0 + x * x)
    eta = root + np.log(x / (1.0 + root))
    p = 1.0 / root
    correction = 1.0 + sum(_debye_u(k, p) / nu**k for k in range(1, 5))
    prefactor = 0.5 * np.log(2.0 * np.pi * nu) + 0.5 * np.log(root)
    return nu * eta - prefactor + np.log(correction)


def _log_bessel_series(nu: float, z: np.ndarray) -> np.ndarray:
    """Power series sum_k (z/2)^{2k+nu} / (k! Gamma(k+nu+1)) in log space, z > 0"""
    half_log = np.log(z / 2.0)
    # Terms peak where (z/2)^2 = k (k + nu)
    k_peak = 0.5 * (np.sqrt(nu * nu + z * z) - nu)
    needed = np.max(k_peak + 12.0 * np.sqrt(k_peak + 1.0)) + 40
    n_terms = int(min(BESSEL_SERIES_MAX_TERMS, needed))
    k = np.arange(n_terms)
    log_terms = (
        2.0 * np.outer(half_log, k)
        - special.gammaln(k + 1.0)[None, :]
        - special.gammaln(k + nu + 1.0)[None, :]
    )
    return nu * half_log + special.logsumexp(log_terms, axis=1)


def log_bessel_i(nu: float, z) -> np.ndarray:
    """
    log I_nu(z).

    Args:
        nu: Order, nu >= -1/2
        z: Argument(s), z >= 0

    Returns:
        Array shaped like z (scalar input gives a 0-d array); -inf where
        I_nu(z) = 0 and +inf where it diverges (z = 0, nu < 0)

    Raises:
        Exact1DError: If nu < -1/2 or any z < 0
    """
    if nu < -0.5:
        raise Exact1DError(f"Bessel order nu = {nu} < -1/2 is unsupported")
    z = np.asarray(z, dtype=np.float64)
    if np.any(z < 0.0):
        raise Exact1DError("Bessel argument must be nonnegative")

    flat = z.reshape(-1)
    out = np.empty_like(flat)

    zero = flat == 0.0
    out[zero] = 0.0 if nu == 0.0 else (-np.inf if nu > 0.0 else np.inf)

    positive = ~zero
    if nu >= DEBYE_MIN_ORDER:
        out[positive] = _log_bessel_debye(nu, flat[positive])
        return out.reshape(z.shape)

    series = positive & (flat < BESSEL_SERIES_OFFSET + nu)
    if np.any(series):
        out[series] = _log_bessel_series(nu, flat[series])

    large = positive & ~series
    if np.any(large):
        with np.errstate(divide="ignore"):
            out[large] = flat[large] + np.log(special.ive(nu, flat[large]))

    return out.reshape(z.shape)


def bessel_i(nu: float, z) -> np.ndarray:
    """
    Modified Bessel function of the first kind I_nu(z).

    Overflows to inf for large z; use log_bessel_i there.
    """
    with np.errstate(over="ignore"):
        return np.exp(log_bessel_i(nu, z))


def log_bessel_i_sum(nu: float, z, sign) -> np.ndarray:
    """
    log(I_nu(z) + sign * I_{nu+1}(z)) for sign in {+1, -1}.

    The difference is positive for nu >= -1/2, so the log is real.
    """
    log_a = log_bessel_i(nu, z)
    log_b = log_bessel_i(nu + 1.0, z)
    with np.errstate(invalid="ignore", divide="ignore"):
        ratio = np.exp(log_b - log_a)
        result = log_a + np.log1p(np.asarray(sign) * ratio)
    return result
