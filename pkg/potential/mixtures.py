"""
Gaussian Mixture Approximations

G_beta: one Gaussian per peak with precision beta H(s_i) and unit
coefficients, the large-beta form of the steady state.

G~_beta: the finite-time form for a process started at x0. Peaks sit
slightly further out, are slightly wider, and carry coefficients
c~_i = 1 + (d_R / gamma) (x0 . s_i) / sqrt(beta t), which average to 1
over the orbit.
"""

import logging
from typing import Dict, Optional, Union

import numpy as np

from potential.constants import TOLERANCE_DELTA, VALIDITY_MARGIN, TildeShape
from potential.free_energy import PotentialError
from potential.models.gaussian_mixture import GaussianMixture
from potential.models.peak_set import PeakSet
from potential.peak_solver import peak_set
from potential.steady_state import tolerance_radius
from rootsys import RootSystem

logger = logging.getLogger(__name__)


def gaussian_approx(
    system: RootSystem,
    beta: float,
    peaks: Optional[PeakSet] = None,
) -> GaussianMixture:
    """
    Build G_beta.

    Args:
        system: Root system
        beta: beta > 0 (warns when beta * lambda_min <= 1)
        peaks: Precomputed peak set (computed when omitted)

    Returns:
        GaussianMixture with unit coefficients and integral 1
    """
    if not beta > 0.0:
        raise PotentialError(f"beta must be positive, got {beta}")
    peaks = peaks if peaks is not None else peak_set(system)
    if beta * peaks.min_eigenvalue <= 1.0:
        logger.warning(
            f"beta * lambda_min = {beta * peaks.min_eigenvalue:.3g} <= 1; "
            f"G_beta is a poor approximation for {system.name}"
        )
    return GaussianMixture.from_components(
        centers=peaks.points,
        precision_matrices=beta * peaks.hessians,
    )


def freeze_window_ratios(
    system: RootSystem,
    beta: float,
    t: float,
    x0_norm: float,
    radius: float,
) -> Dict[str, float]:
    """
    How well the strong-coupling conditions hold.

    Returns:
        {"coupling": beta gamma / d_R, "time": beta t gamma / (d_R^2 x0^2 r^2)};
        both should be much larger than 1
    """
    d, gamma = system.rank, system.gamma
    coupling = beta * gamma / d
    denominator = d**2 * x0_norm**2 * radius**2
    time = np.inf if denominator == 0.0 else beta * t * gamma / denominator
    return {"coupling": float(coupling), "time": float(time)}


def _warn_outside_window(system: RootSystem, ratios: Dict[str, float]) -> None:
    for name, ratio in ratios.items():
        if ratio < VALIDITY_MARGIN:
            logger.warning(
                f"Strong-coupling {name} condition only holds by a factor "
                f"{ratio:.3g} for {system.name}; G~_beta may be inaccurate"
            )


def _check_in_span(system: RootSystem, x0: np.ndarray) -> None:
    residual = float(np.linalg.norm(system.perpendicular(x0)))
    if residual > 1e-9:
        raise PotentialError(
            f"x0 is not in Span(R) for {system.name} (residual {residual:.2e})"
        )


def _coefficients(
    system: RootSystem, peaks: PeakSet, x: np.ndarray, beta: float, t: float
) -> np.ndarray:
    """c~_i = 1 + (d_R / gamma)(x . s_i) / sqrt(beta t)"""
    drift = (peaks.points @ x) / np.sqrt(beta * t)
    return 1.0 + (system.rank / system.gamma) * drift


def _shifted_precisions(
    system: RootSystem,
    beta: float,
    hessians: np.ndarray,
    factor: float,
) -> np.ndarray:
    """beta [factor * H restricted to Span(R) + identity on the perp space]"""
    perp = system.perp_basis.T @ system.perp_basis
    return beta * (factor * (hessians - perp) + perp)


def gaussian_tilde(
    system: RootSystem,
    beta: float,
    t: float,
    x0: np.ndarray,
    shape: Union[str, TildeShape] = TildeShape.FIRST_ORDER,
    radius: Optional[float] = None,
    peaks: Optional[PeakSet] = None,
) -> GaussianMixture:
    """
    Build G~_beta for a process started at x0.

    With eps = |x0|^2 / (gamma beta t):
    - first_order: s~ = (1 + eps/2) s, 1/(beta lambda~) = (1 + eps)/(beta lambda)
    - exact: s~ = s / sqrt(1 - eps), lambda~ = (1 - eps) lambda
    Coefficients are c~_i = 1 + (d_R / gamma)(x0 . s_i) / sqrt(beta t) in both.

    Args:
        system: Root system
        beta: beta > 0
        t: Time t > 0
        x0: Initial point in Span(R)
        shape: "first_order" or "exact"
        radius: r(delta) used for the validity check (computed when omitted)
        peaks: Precomputed peak set

    Raises:
        PotentialError: If x0 is not in Span(R), or eps >= 1 for "exact"
    """
    x0 = np.asarray(x0, dtype=np.float64).reshape(-1)
    _check_in_span(system, x0)
    if not (beta > 0.0 and t > 0.0):
        raise PotentialError(f"beta and t must be positive, got beta={beta}, t={t}")

    shape = TildeShape(shape)
    peaks = peaks if peaks is not None else peak_set(system)
    x0_sq = float(x0 @ x0)

    if x0_sq > 0.0:
        if radius is None:
            radius = tolerance_radius(system, beta, TOLERANCE_DELTA)
        ratios = freeze_window_ratios(system, beta, t, np.sqrt(x0_sq), radius)
        _warn_outside_window(system, ratios)

    eps = x0_sq / (system.gamma * beta * t)
    if shape == TildeShape.FIRST_ORDER:
        centers = (1.0 + eps / 2.0) * peaks.points
        factor = 1.0 / (1.0 + eps)
        precisions = _shifted_precisions(system, beta, peaks.hessians, factor)
    else:
        if eps >= 1.0:
            raise PotentialError(
                f"x0^2 / (gamma beta t) = {eps:.3g} >= 1; exact G~_beta undefined"
            )
        centers = peaks.points / np.sqrt(1.0 - eps)
        precisions = _shifted_precisions(system, beta, peaks.hessians, 1.0 - eps)

    coefficients = _coefficients(system, peaks, x0, beta, t)
    return GaussianMixture.from_components(centers, precisions, coefficients)


def gaussian_tilde_general(
    system: RootSystem,
    beta: float,
    t: float,
    c_eps: float,
    x_bar: np.ndarray,
    peaks: Optional[PeakSet] = None,
) -> GaussianMixture:
    """
    G~_beta for a general initial distribution.

    The distribution is summarized by its tail cutoff C(eps) (all but eps of
    its mass lies within |x| < C) and its mean x_bar. Shifts use C^2 in place
    of |x0|^2 and coefficients use x_bar in place of x0.

    Args:
        system: Root system
        beta: beta > 0
        t: Time t > 0
        c_eps: Tail cutoff C(eps) >= 0
        x_bar: Mean of the initial distribution, in Span(R)
        peaks: Precomputed peak set
    """
    x_bar = np.asarray(x_bar, dtype=np.float64).reshape(-1)
    _check_in_span(system, x_bar)
    if c_eps < 0.0:
        raise PotentialError(f"C(eps) must be nonnegative, got {c_eps}")

    peaks = peaks if peaks is not None else peak_set(system)
    eps = c_eps**2 / (system.gamma * beta * t)
    centers = (1.0 + eps / 2.0) * peaks.points
    precisions = _shifted_precisions(system, beta, peaks.hessians, 1.0 / (1.0 + eps))
    coefficients = _coefficients(system, peaks, x_bar, beta, t)
    return GaussianMixture.from_components(centers, precisions, coefficients)


def delta_limit_mass(mixture: GaussianMixture, radius: float) -> np.ndarray:
    """
    Mass of each peak's own Gaussian within `radius` of its center.

    Tends to 1/|W| per peak as beta grows.
    """
    return mixture.mass_within(radius)
