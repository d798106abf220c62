"""
B_1 Densities

The transition probability density of the one-dimensional (B_1) Dunkl
process,

    p(t, y | x) = e^{-(x^2 + y^2)/2t} / (2t) |y|^beta |xy|^{-nu}
                  [I_nu(|xy|/t) + sgn(xy) I_{nu+1}(|xy|/t)],   nu = (beta - 1)/2,

the scaled density f(t, Y) = sqrt(beta t) p(t, sqrt(beta t) Y | x0), its
t -> infinity limit e^{-beta Y^2/2} |Y|^beta / z_beta and the finite-time
Gaussian mixture. Everything is evaluated in log space so beta in the
thousands does not overflow.

At x = 0 the Bessel form is replaced by its limit
|y|^beta e^{-y^2/2t} / (c_beta t^{(beta+1)/2}) with
c_beta = 2^{(beta+1)/2} Gamma((beta+1)/2).
"""

import logging
from typing import Sequence, Tuple, Union

import numpy as np
from scipy import special

from exact1d.bessel import Exact1DError, log_bessel_i_sum

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]
# Either an object with .points/.weights or a sequence of (x0, weight) pairs
Initial = Union[object, Sequence[Tuple[float, float]]]


def _check_positive(**values: float) -> None:
    for name, value in values.items():
        if not value > 0.0:
            raise Exact1DError(f"{name} must be positive, got {value}")


def log_c_beta(beta: float) -> float:
    """log c_beta = ((beta+1)/2) log 2 + log Gamma((beta+1)/2)"""
    half = (beta + 1.0) / 2.0
    return float(half * np.log(2.0) + special.gammaln(half))


def log_z_beta_1d(beta: float) -> float:
    """log z_beta for B_1: integral of e^{-beta Y^2/2} |Y|^beta over R"""
    _check_positive(beta=beta)
    half = (beta + 1.0) / 2.0
    return float(half * np.log(2.0 / beta) + special.gammaln(half))


# =============================================================================
# TRANSITION PROBABILITY DENSITY
# =============================================================================


def log_tpd_b1(t: float, y: ArrayLike, x: float, beta: float) -> np.ndarray:
    """
    log p(t, y | x) for B_1, vectorized over y; -inf at y = 0.

    Negative x uses p(t, y | -x) = p(t, -y | x).

    Raises:
        Exact1DError: If t <= 0 or beta <= 0
    """
    _check_positive(t=t, beta=beta)
    y = np.asarray(y, dtype=np.float64)
    if x < 0.0:
        x, y = -x, -y
    nu = (beta - 1.0) / 2.0
    flat = y.reshape(-1)
    out = np.full_like(flat, -np.inf)

    nonzero = flat != 0.0
    yn = flat[nonzero]
    log_abs_y = np.log(np.abs(yn))
    gauss = -(x * x + yn * yn) / (2.0 * t)

    if x == 0.0:
        log_norm = log_c_beta(beta) + (nu + 1.0) * np.log(t)
        out[nonzero] = gauss + beta * log_abs_y - log_norm
        return out.reshape(y.shape)

    xy = x * yn
    magnitude = np.abs(xy)
    out[nonzero] = (
        gauss
        - np.log(2.0 * t)
        + beta * log_abs_y
        - nu * np.log(magnitude)
        + log_bessel_i_sum(nu, magnitude / t, np.sign(xy))
    )
    return out.reshape(y.shape)


def tpd_b1(t: float, y: ArrayLike, x: float, beta: float) -> np.ndarray:
    """p(t, y | x) for B_1 (see log_tpd_b1)"""
    return np.exp(log_tpd_b1(t, y, x, beta))


def log_tpd_template_b1(t: float, y: ArrayLike, x: float, beta: float) -> np.ndarray:
    """
    log p(t, y | x) from the general form

        p = e^{-(x^2 + y^2)/2t} w(y) E(x y / t) / (c_beta t^{(beta+1)/2})

    with w(y) = |y|^beta and E the exact B_1 kernel.
    """
    from intertwine.kernels import log_kernel_exact_b1

    _check_positive(t=t, beta=beta)
    y = np.asarray(y, dtype=np.float64)
    with np.errstate(divide="ignore"):
        log_weight = beta * np.log(np.abs(y))
    return (
        -(x * x + y * y) / (2.0 * t)
        + log_weight
        + log_kernel_exact_b1(beta, x * y / t)
        - log_c_beta(beta)
        - 0.5 * (beta + 1.0) * np.log(t)
    )


def tpd_template_b1(t: float, y: ArrayLike, x: float, beta: float) -> np.ndarray:
    """p(t, y | x) through the exact kernel (see log_tpd_template_b1)"""
    return np.exp(log_tpd_template_b1(t, y, x, beta))


# =============================================================================
# SCALED DENSITIES
# =============================================================================


def log_scaled_density_1d(
    t: float, Y: ArrayLike, x0: float, beta: float
) -> np.ndarray:
    """log f(t, Y) for a start at x0"""
    _check_positive(t=t, beta=beta)
    scale = np.sqrt(beta * t)
    y = scale * np.asarray(Y, dtype=np.float64)
    return np.log(scale) + log_tpd_b1(t, y, x0, beta)


def scaled_density_1d(t: float, Y: ArrayLike, x0: float, beta: float) -> np.ndarray:
    """f(t, Y) = sqrt(beta t) p(t, sqrt(beta t) Y | x0)"""
    return np.exp(log_scaled_density_1d(t, Y, x0, beta))


def mixture_components(initial: Initial) -> Tuple[np.ndarray, np.ndarray]:
    """
    Starting points and weights of a finite initial mixture.

    Accepts an object with `points` ((k,) or (k, 1)) and `weights`
    attributes, or a sequence of (x0, weight) pairs. Weights are normalized.
    """
    if hasattr(initial, "points") and hasattr(initial, "weights"):
        points = np.asarray(initial.points, dtype=np.float64).reshape(-1)
        weights = np.asarray(initial.weights, dtype=np.float64).reshape(-1)
    else:
        pairs = np.asarray(list(initial), dtype=np.float64).reshape(-1, 2)
        points, weights = pairs[:, 0], pairs[:, 1]
    if points.size == 0 or np.any(weights < 0.0) or weights.sum() <= 0.0:
        raise Exact1DError(
            "Initial mixture needs nonnegative weights with positive sum"
        )
    return points, weights / weights.sum()


def scaled_density_mixture_1d(
    t: float, Y: ArrayLike, initial: Initial, beta: float
) -> np.ndarray:
    """
    f(t, Y) for a finite mixture of point masses.

    The symmetrized start 1/2 [delta_{x0} + delta_{-x0}] is
    [(x0, 0.5), (-x0, 0.5)].
    """
    points, weights = mixture_components(initial)
    Y = np.asarray(Y, dtype=np.float64)
    logs = np.stack([log_scaled_density_1d(t, Y, x0, beta) for x0 in points])
    log_w = np.log(weights).reshape((-1,) + (1,) * Y.ndim)
    return np.exp(special.logsumexp(logs + log_w, axis=0))


# =============================================================================
# STEADY STATE AND GAUSSIAN MIXTURE
# =============================================================================


def steady_density_1d(beta: float, Y: ArrayLike) -> np.ndarray:
    """e^{-beta Y^2/2} |Y|^beta / z_beta; zero at Y = 0"""
    _check_positive(beta=beta)
    Y = np.asarray(Y, dtype=np.float64)
    with np.errstate(divide="ignore"):
        log_homogeneous = beta * np.log(np.abs(Y))
        log_density = -beta * Y * Y / 2.0 + log_homogeneous - log_z_beta_1d(beta)
    return np.exp(log_density)


def gaussian_tilde_1d(t: float, Y: ArrayLike, x0: float, beta: float) -> np.ndarray:
    """
    Finite-time Gaussian mixture for B_1.

    With eps = x0^2 / (beta t): peaks at +-s~, s~ = (1 - eps)^{-1/2},
    curvature h~ = 2 (1 - eps) and weights c~_+- = 1 +- x0 / sqrt(beta t):

        G~ = sum_+- (c~_+- / 2) sqrt(beta h~ / 2 pi) e^{-beta h~ (Y -+ s~)^2 / 2}

    Raises:
        Exact1DError: If t or beta <= 0, or eps >= 1
    """
    _check_positive(t=t, beta=beta)
    eps = x0 * x0 / (beta * t)
    if eps >= 1.0:
        raise Exact1DError(f"x0^2 / (beta t) = {eps:.3g} >= 1; G~ undefined")
    Y = np.asarray(Y, dtype=np.float64)
    h = 2.0 * (1.0 - eps)
    s = 1.0 / np.sqrt(1.0 - eps)
    shift = x0 / np.sqrt(beta * t)
    norm = np.sqrt(beta * h / (2.0 * np.pi))
    plus = (1.0 + shift) * np.exp(-beta * h * (Y - s) ** 2 / 2.0)
    minus = (1.0 - shift) * np.exp(-beta * h * (Y + s) ** 2 / 2.0)
    return 0.5 * norm * (plus + minus)


def steady_cdf_1d(beta: float, Y: ArrayLike) -> np.ndarray:
    """
    CDF of the B_1 steady state.

    beta Y^2 / 2 is Gamma((beta + 1)/2) distributed and the law is even, so
    F(Y) = 1/2 + sgn(Y) P((beta + 1)/2, beta Y^2 / 2) / 2.
    """
    _check_positive(beta=beta)
    Y = np.asarray(Y, dtype=np.float64)
    radial = special.gammainc((beta + 1.0) / 2.0, beta * Y * Y / 2.0)
    return 0.5 + 0.5 * np.sign(Y) * radial
