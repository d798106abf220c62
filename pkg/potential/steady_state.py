"""
Steady State

The steady-state density e^{-beta F_R(Y)} / z_beta of the scaled process,
its normalization z_beta, and the tolerance radius r(delta).

z_beta paths:
- Closed form: rank-one systems (Gamma reduction) and A_{N-1} with
  kappa = 1 (Mehta integral)
- Quadrature: systems with d_R <= 2, after factoring out the Gaussian
  perp directions; d_R = 2 uses polar coordinates, where the radial
  integral is a Gamma function and only the angle is integrated
- Gaussian: Laplace approximation around the |W| peaks (large beta)
"""

import logging
from typing import Optional, Union

import numpy as np
from scipy import integrate, optimize, special

from potential.constants import (
    GAUSSIAN_NORMALIZATION_MIN_BETA,
    QUAD_EPSABS,
    QUAD_EPSREL,
    QUAD_LIMIT,
    QUAD_TAIL_EXPONENT,
    QUAD_TAIL_PAD,
    SURROGATE_SAMPLES,
    SURROGATE_SEED,
    TOLERANCE_BISECTION_XTOL,
    NormalizationMethod,
    RadiusMethod,
)
from potential.free_energy import PotentialError, active_roots, log_weight
from potential.peak_solver import peak_set
from rootsys import RootFamily, RootSystem

logger = logging.getLogger(__name__)


class NormalizationError(PotentialError):
    """z_beta could not be computed (no applicable method or quadrature failure)"""


def _check_beta(beta: float) -> None:
    if not beta > 0.0:
        raise PotentialError(f"beta must be positive, got {beta}")


def _radial_log_integral(power: float, beta: float) -> float:
    """log of integral_0^inf r^power exp(-beta r^2 / 2) dr"""
    half = (power + 1.0) / 2.0
    return -np.log(2.0) + half * np.log(2.0 / beta) + special.gammaln(half)


# =============================================================================
# CLOSED FORMS
# =============================================================================


def rank_one_log_z_beta(system: RootSystem, beta: float) -> float:
    """
    log z_beta for d_R = 1.

    With R_+ = {alpha}: z = |alpha|^{beta kappa} (2/beta)^{(beta kappa + 1)/2}
    Gamma((beta kappa + 1)/2) (2 pi / beta)^{(N-1)/2}.
    """
    alphas, kappa = active_roots(system)
    if system.rank != 1 or alphas.shape[0] != 1:
        raise NormalizationError(f"{system.name} is not a rank-one system")
    power = beta * float(kappa[0])
    return (
        power * np.log(np.linalg.norm(alphas[0]))
        + np.log(2.0)
        + _radial_log_integral(power, beta)
        + 0.5 * (system.ambient_dim - 1) * np.log(2.0 * np.pi / beta)
    )


def mehta_log_z_beta(n_particles: int, beta: float) -> float:
    """
    log z_beta for A_{N-1} with kappa = 1 (Mehta integral).

    z = beta^{-N/2 - beta N(N-1)/4} (2 pi)^{N/2}
        prod_{j=1}^N Gamma(1 + j beta/2) / Gamma(1 + beta/2)
    """
    n = n_particles
    j = np.arange(1, n + 1)
    return float(
        (-n / 2.0 - beta * n * (n - 1) / 4.0) * np.log(beta)
        + 0.5 * n * np.log(2.0 * np.pi)
        + np.sum(special.gammaln(1.0 + j * beta / 2.0))
        - n * special.gammaln(1.0 + beta / 2.0)
    )


def closed_form_log_z_beta(system: RootSystem, beta: float) -> Optional[float]:
    """Closed-form log z_beta, or None when no closed form applies"""
    if system.rank == 1 and active_roots(system)[0].shape[0] == 1:
        return rank_one_log_z_beta(system, beta)
    if system.family == RootFamily.A and np.allclose(system.kappa, 1.0):
        return mehta_log_z_beta(system.ambient_dim, beta)
    return None


# =============================================================================
# QUADRATURE
# =============================================================================


def _reduced_roots(system: RootSystem):
    """Active positive roots in Span(R) coordinates"""
    alphas, kappa = active_roots(system)
    return alphas @ system.span_basis.T, kappa


def quadrature_log_z_beta(system: RootSystem, beta: float) -> float:
    """
    log z_beta by adaptive quadrature (requires d_R <= 2).

    Raises:
        NormalizationError: If d_R > 2 or the quadrature does not converge
    """
    d = system.rank
    if d > 2:
        raise NormalizationError(f"Quadrature needs d_R <= 2, {system.name} has {d}")

    alphas, kappa = _reduced_roots(system)
    peaks = peak_set(system, expand_orbit=False)
    perp_log = 0.5 * (system.ambient_dim - d) * np.log(2.0 * np.pi / beta)

    if d == 1:
        s = float(np.linalg.norm(peaks.points[0]))
        shift = -beta * peaks.f_value

        def integrand(u: float) -> float:
            if u == 0.0:
                return 0.0
            logs = kappa @ np.log(np.abs(alphas[:, 0] * u))
            return float(np.exp(-beta * (0.5 * u * u - logs) - shift))

        half_width = s + np.sqrt(2.0 * QUAD_TAIL_EXPONENT / beta) + QUAD_TAIL_PAD
        value, error = integrate.quad(
            integrand,
            -half_width,
            half_width,
            points=[-s, 0.0, s],
            epsabs=QUAD_EPSABS,
            epsrel=QUAD_EPSREL,
            limit=QUAD_LIMIT,
        )
        _check_quadrature(value, error, system)
        return float(shift + np.log(value) + perp_log)

    # d = 2: z = (radial Gamma integral) x (angular integral)
    gamma = float(kappa.sum())
    peak_dir = system.span_basis @ peaks.points[0]
    peak_dir /= np.linalg.norm(peak_dir)
    angular_max = beta * float(kappa @ np.log(np.abs(alphas @ peak_dir)))

    def angular(theta: float) -> float:
        u = np.array([np.cos(theta), np.sin(theta)])
        dots = np.abs(alphas @ u)
        if np.any(dots == 0.0):
            return 0.0
        return float(np.exp(beta * kappa @ np.log(dots) - angular_max))

    walls = np.mod(np.arctan2(alphas[:, 1], alphas[:, 0]) + np.pi / 2.0, np.pi)
    peak_angle = np.arctan2(peak_dir[1], peak_dir[0])
    breaks = np.concatenate([walls, walls + np.pi, [np.mod(peak_angle, 2.0 * np.pi)]])
    value, error = integrate.quad(
        angular,
        0.0,
        2.0 * np.pi,
        points=np.sort(np.unique(np.mod(breaks, 2.0 * np.pi))),
        epsabs=QUAD_EPSABS,
        epsrel=QUAD_EPSREL,
        limit=QUAD_LIMIT,
    )
    _check_quadrature(value, error, system)
    radial = _radial_log_integral(beta * gamma + 1.0, beta)
    return float(angular_max + np.log(value) + radial + perp_log)


def _check_quadrature(value: float, error: float, system: RootSystem) -> None:
    if not np.isfinite(value) or value <= 0.0:
        raise NormalizationError(f"z_beta quadrature failed for {system.name}: {value}")
    if error > 1e-6 * value:
        raise NormalizationError(
            f"z_beta quadrature for {system.name} did not converge "
            f"(estimate {value:.6g}, error {error:.2e})"
        )


def gaussian_log_z_beta(system: RootSystem, beta: float) -> float:
    """
    Laplace approximation of log z_beta.

    z ~ |W| e^{-beta F_R(s)} prod_j sqrt(2 pi / (beta lambda_j)),
    with perp directions contributing curvature 1.
    """
    peaks = peak_set(system)
    n_perp = system.ambient_dim - system.rank
    return float(
        np.log(peaks.size)
        - beta * peaks.f_value
        + 0.5 * np.sum(np.log(2.0 * np.pi / (beta * peaks.spectrum)))
        + 0.5 * n_perp * np.log(2.0 * np.pi / beta)
    )


# =============================================================================
# PUBLIC API
# =============================================================================


def log_z_beta(
    system: RootSystem,
    beta: float,
    method: Union[str, NormalizationMethod] = NormalizationMethod.AUTO,
) -> float:
    """
    log of z_beta = integral of e^{-beta F_R(Y)} over R^N.

    Args:
        system: Root system
        beta: beta > 0
        method: "auto", "closed_form", "quadrature" or "gaussian"

    Raises:
        PotentialError: If beta <= 0
        NormalizationError: If the requested method does not apply
    """
    _check_beta(beta)
    method = NormalizationMethod(method)

    if method == NormalizationMethod.CLOSED_FORM:
        value = closed_form_log_z_beta(system, beta)
        if value is None:
            raise NormalizationError(f"No closed form z_beta for {system.name}")
        return value
    if method == NormalizationMethod.QUADRATURE:
        return quadrature_log_z_beta(system, beta)
    if method == NormalizationMethod.GAUSSIAN:
        return gaussian_log_z_beta(system, beta)

    value = closed_form_log_z_beta(system, beta)
    if value is not None:
        return value
    if system.rank <= 2:
        return quadrature_log_z_beta(system, beta)
    if beta < GAUSSIAN_NORMALIZATION_MIN_BETA:
        logger.warning(
            f"No closed form or quadrature for {system.name}; using the Gaussian "
            f"z_beta at beta={beta:g} < {GAUSSIAN_NORMALIZATION_MIN_BETA:g}"
        )
    return gaussian_log_z_beta(system, beta)


def z_beta(
    system: RootSystem,
    beta: float,
    method: Union[str, NormalizationMethod] = NormalizationMethod.AUTO,
) -> float:
    """z_beta itself (underflows for very large beta; prefer log_z_beta)"""
    return float(np.exp(log_z_beta(system, beta, method)))


def log_steady_density(
    system: RootSystem,
    beta: float,
    y: np.ndarray,
    log_z: Optional[float] = None,
) -> np.ndarray:
    """-beta F_R(Y) - log z_beta, vectorized over rows; -inf on walls"""
    if log_z is None:
        log_z = log_z_beta(system, beta)
    return log_weight(system, beta, y) - log_z


def steady_density(
    system: RootSystem,
    beta: float,
    y: np.ndarray,
    log_z: Optional[float] = None,
) -> np.ndarray:
    """e^{-beta F_R(Y)} / z_beta; zero on chamber walls"""
    return np.exp(log_steady_density(system, beta, y, log_z))


# =============================================================================
# TOLERANCE RADIUS
# =============================================================================


def steady_mass_within(system: RootSystem, beta: float, radius: float) -> float:
    """
    Steady-state mass of the ball |Y| < radius.

    The weight is homogeneous of degree beta gamma, so beta |Y|^2 / 2 is
    Gamma((beta gamma + N)/2) distributed for every root system.
    """
    shape = (beta * system.gamma + system.ambient_dim) / 2.0
    return float(special.gammainc(shape, beta * radius**2 / 2.0))


def _quadrature_mass(
    system: RootSystem, beta: float, radius: float, log_z: float
) -> float:
    """Mass of |Y| < radius by quadrature, N <= 2"""
    if system.ambient_dim == 1:
        s = np.sqrt(system.gamma)
        inner = [p for p in (-s, 0.0, s) if -radius < p < radius]
        value, _ = integrate.quad(
            lambda u: float(steady_density(system, beta, np.array([u]), log_z)),
            -radius,
            radius,
            points=inner or None,
            epsabs=QUAD_EPSABS,
            epsrel=QUAD_EPSREL,
            limit=QUAD_LIMIT,
        )
        return float(value)

    # N = 2: integrate the radial marginal r^{beta gamma + 1} e^{-beta r^2/2}
    power = beta * system.gamma + 1.0
    log_total = _radial_log_integral(power, beta)
    peak_r = np.sqrt(power / beta)

    def radial(r: float) -> float:
        if r <= 0.0:
            return 0.0
        return float(np.exp(power * np.log(r) - beta * r * r / 2.0 - log_total))

    value, _ = integrate.quad(
        radial,
        0.0,
        radius,
        points=[peak_r] if peak_r < radius else None,
        epsabs=QUAD_EPSABS,
        epsrel=QUAD_EPSREL,
        limit=QUAD_LIMIT,
    )
    return float(value)


def tolerance_radius(
    system: RootSystem,
    beta: float,
    delta: float,
    method: Union[str, RadiusMethod] = RadiusMethod.AUTO,
) -> float:
    """
    r(delta): the steady-state mass of |Y| < r sqrt(gamma) equals 1 - delta.

    Args:
        system: Root system
        beta: beta > 0
        delta: 0 < delta < 1
        method: "auto" (quadrature for N <= 2, radial law otherwise),
                "quadrature", "radial" or "surrogate"

    Returns:
        r(delta), in units of sqrt(gamma)

    Raises:
        PotentialError: If delta is outside (0, 1) or beta <= 0
    """
    _check_beta(beta)
    if not 0.0 < delta < 1.0:
        raise PotentialError(f"delta must lie in (0, 1), got {delta}")

    method = RadiusMethod(method)
    if method == RadiusMethod.AUTO:
        low_dimensional = system.ambient_dim <= 2
        method = RadiusMethod.QUADRATURE if low_dimensional else RadiusMethod.RADIAL

    scale = np.sqrt(system.gamma)
    target = 1.0 - delta

    if method == RadiusMethod.RADIAL:
        shape = (beta * system.gamma + system.ambient_dim) / 2.0
        return float(np.sqrt(2.0 * special.gammaincinv(shape, target) / beta) / scale)

    if method == RadiusMethod.SURROGATE:
        from potential.mixtures import gaussian_approx

        mixture = gaussian_approx(system, beta)
        rng = np.random.default_rng(SURROGATE_SEED)
        samples = mixture.sample(SURROGATE_SAMPLES, rng)
        return float(np.quantile(np.linalg.norm(samples, axis=1), target) / scale)

    if system.ambient_dim > 2:
        raise PotentialError("Quadrature tolerance radius needs N <= 2")

    log_z = log_z_beta(system, beta)

    def excess(r: float) -> float:
        return _quadrature_mass(system, beta, r * scale, log_z) - target

    upper = 2.0
    while excess(upper) < 0.0:
        upper *= 2.0
    return float(optimize.bisect(excess, 1e-12, upper, xtol=TOLERANCE_BISECTION_XTOL))
