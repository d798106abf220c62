"""
Strong-Coupling Mixture Fits

Fits one Gaussian per peak of a finite-time density and compares the
fitted centers, in-span widths and coefficients with the finite-time
Gaussian mixture G~_beta. Peaks are located in windows of half-width
FIT_WINDOW_SIGMAS / sqrt(beta lambda_min) around the predicted centers.

Gridded 1-d densities are fitted by nonlinear least squares; sampled
densities (Monte Carlo) by window moments: mass, mean and covariance of
the samples inside each window.
"""

import logging
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from scipy import optimize

from asymfit.constants import (
    ASYMMETRY_FLOOR,
    FIT_GRID_POINTS,
    FIT_WINDOW_SIGMAS,
    MECHANISM_MIN_VALUES,
    MIXTURE_FIT_SAMPLES,
)
from asymfit.decay import fit_power_law
from asymfit.interfaces.expectation_source import (
    FitError,
    InsufficientGridError,
    PeaksUnresolvedError,
)
from asymfit.models.mechanism_report import MechanismReport
from asymfit.models.mixture_fit import MixtureFit
from exact1d import Density1D
from potential import (
    GaussianMixture,
    PeakSet,
    gaussian_approx,
    gaussian_tilde,
    gaussian_tilde_general,
    peak_set,
)
from rootsys import RootSystem
from simulate import DensityEstimate

logger = logging.getLogger(__name__)

FitTarget = Union[Density1D, DensityEstimate, GaussianMixture]


def _in_span_sigmas(system: RootSystem, covariances: np.ndarray) -> np.ndarray:
    """Square roots of covariance eigenvalues on Span(R), ascending, (K, d_R)"""
    basis = system.span_basis
    restricted = np.einsum("ai,kij,bj->kab", basis, covariances, basis)
    return np.sqrt(np.linalg.eigvalsh(restricted))


def _window_half_width(beta: float, peaks: PeakSet) -> float:
    return FIT_WINDOW_SIGMAS / np.sqrt(beta * peaks.min_eigenvalue)


def _check_resolved(centers: np.ndarray, half_width: float, beta: float) -> None:
    if centers.shape[0] < 2:
        return
    gaps = np.linalg.norm(centers[:, None, :] - centers[None, :, :], axis=-1)
    closest = float(gaps[~np.eye(centers.shape[0], dtype=bool)].min())
    if closest < 2.0 * half_width:
        raise PeaksUnresolvedError(
            f"peaks unresolved at beta={beta:g}: centers {closest:.3g} apart, "
            f"windows {2.0 * half_width:.3g} wide"
        )


def _evaluate_1d(target: FitTarget, y: np.ndarray) -> np.ndarray:
    if isinstance(target, Density1D):
        return np.asarray(target(y), dtype=np.float64)
    return np.asarray(target.pdf(y), dtype=np.float64)


def _least_squares_peak(
    target: FitTarget,
    center: float,
    sigma: float,
    half_width: float,
) -> Tuple[float, float, float]:
    """Fit A exp(-(y - mu)^2 / (2 sigma^2)) on one window; returns (mu, sigma, mass)"""
    y = np.linspace(center - half_width, center + half_width, FIT_GRID_POINTS)
    values = _evaluate_1d(target, y)
    scale = float(values.max())
    if not scale > 0.0:
        raise FitError(f"Density vanishes on the window around {center:g}")
    data = values / scale

    def residuals(params: np.ndarray) -> np.ndarray:
        amplitude, mu, width = params
        return amplitude * np.exp(-0.5 * ((y - mu) / width) ** 2) - data

    start = np.array([1.0, center, sigma])
    result = optimize.least_squares(
        residuals, start, method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15
    )
    if not result.success:
        raise FitError(f"Peak fit at {center:g} did not converge: {result.message}")
    amplitude, mu, width = result.x
    width = abs(width)
    mass = amplitude * scale * np.sqrt(2.0 * np.pi) * width
    return float(mu), float(width), float(mass)


def _fit_gridded(
    target: FitTarget,
    centers: np.ndarray,
    sigmas: np.ndarray,
    half_width: float,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    fitted = [
        _least_squares_peak(target, float(c[0]), float(s[0]), half_width)
        for c, s in zip(centers, sigmas)
    ]
    mus, widths, masses = (np.array(column) for column in zip(*fitted))
    k = centers.shape[0]
    return mus.reshape(k, 1), widths.reshape(k, 1), masses


def _fit_moments(
    system: RootSystem,
    samples: np.ndarray,
    centers: np.ndarray,
    half_width: float,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    k, n = centers.shape
    fitted_centers = np.empty((k, n))
    covariances = np.empty((k, n, n))
    masses = np.empty(k)
    for i, center in enumerate(centers):
        inside = samples[np.linalg.norm(samples - center, axis=1) < half_width]
        if inside.shape[0] <= n + 1:
            raise FitError(
                f"Only {inside.shape[0]} samples in the window around peak {i}"
            )
        masses[i] = inside.shape[0] / samples.shape[0]
        fitted_centers[i] = inside.mean(axis=0)
        covariances[i] = np.atleast_2d(np.cov(inside, rowvar=False))
    return fitted_centers, _in_span_sigmas(system, covariances), masses


def _fit_target(
    system: RootSystem,
    target: FitTarget,
    centers: np.ndarray,
    sigmas: np.ndarray,
    half_width: float,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, str]:
    """Dispatch on the target type; returns (centers, sigmas, window masses, method)"""
    if isinstance(target, DensityEstimate):
        if target.samples is None:
            raise FitError(
                "DensityEstimate was built without samples; cannot fit peaks"
            )
        fitted = _fit_moments(system, target.samples, centers, half_width)
        return (*fitted, "window_moments")

    if system.ambient_dim == 1:
        return (*_fit_gridded(target, centers, sigmas, half_width), "least_squares")

    if isinstance(target, Density1D):
        raise FitError(
            f"A 1-d density cannot be fitted on {system.name} "
            f"(N={system.ambient_dim})"
        )
    samples = target.sample(MIXTURE_FIT_SAMPLES, np.random.default_rng(0))
    return (*_fit_moments(system, samples, centers, half_width), "window_moments")


def freeze_fit(
    density: FitTarget,
    system: RootSystem,
    beta: float,
    t: float,
    x0: Union[float, Sequence[float], np.ndarray],
    reference: Optional[FitTarget] = None,
    peaks: Optional[PeakSet] = None,
    x_bar: Optional[np.ndarray] = None,
) -> MixtureFit:
    """
    Fit per-peak Gaussians and compare them with G~_beta.

    Args:
        density: Exact 1-d density, Monte Carlo estimate (with samples) or
                 a GaussianMixture
        system: Root system
        beta: beta > 0
        t: Time t > 0
        x0: Initial point (its norm sets the center and width shifts)
        reference: Steady-state density fitted the same way for the
                   reference peaks (G_beta itself when omitted)
        peaks: Precomputed peak set
        x_bar: Mean of a symmetrized start; predictions then use C = |x0|
               for the shifts and x_bar for the coefficients

    Returns:
        MixtureFit with one entry per predicted peak

    Raises:
        PeaksUnresolvedError: If neighbouring peak windows overlap
        FitError: If a window holds no usable data
    """
    x0 = np.asarray(x0, dtype=np.float64).reshape(-1)
    peaks = peaks if peaks is not None else peak_set(system)

    if x_bar is None:
        predicted = gaussian_tilde(system, beta, t, x0, peaks=peaks)
    else:
        predicted = gaussian_tilde_general(
            system, beta, t, float(np.linalg.norm(x0)), x_bar, peaks=peaks
        )
    steady = gaussian_approx(system, beta, peaks=peaks)

    half_width = _window_half_width(beta, peaks)
    _check_resolved(predicted.centers, half_width, beta)

    predicted_sigmas = _in_span_sigmas(system, predicted.covariances())
    fitted_centers, fitted_sigmas, masses, method = _fit_target(
        system, density, predicted.centers, predicted_sigmas, half_width
    )
    # Orbit coefficients average to 1
    fitted_coefficients = masses / masses.mean()

    steady_sigmas = _in_span_sigmas(system, steady.covariances())
    if reference is None:
        reference_centers, reference_sigmas = steady.centers, steady_sigmas
    else:
        reference_centers, reference_sigmas, _, _ = _fit_target(
            system, reference, steady.centers, steady_sigmas, half_width
        )

    fit = MixtureFit(
        beta=float(beta),
        t=float(t),
        x0=x0.tolist(),
        fitted_centers=fitted_centers,
        fitted_sigmas=fitted_sigmas,
        fitted_coefficients=fitted_coefficients,
        predicted_centers=predicted.centers,
        predicted_sigmas=predicted_sigmas,
        predicted_coefficients=predicted.coefficients,
        reference_centers=reference_centers,
        reference_sigmas=reference_sigmas,
        steady_centers=steady.centers,
        method=method,
        n_resolved=int(fitted_centers.shape[0]),
        metadata={
            "system": system.name,
            "window_half_width": half_width,
            "window_mass": float(masses.sum()),
            "reference": "fitted" if reference is not None else "gaussian_approx",
        },
    )
    logger.debug(f"{fit!r}")
    return fit


def _grid_size(values: Sequence[float]) -> int:
    return len({round(v, 12) for v in values})


def mechanism_split(fits: Sequence[MixtureFit]) -> MechanismReport:
    """
    Power laws in beta t for the three relaxation mechanisms.

    Center shifts and variance shifts are expected to decay as (beta t)^-1
    and the coefficient asymmetry as (beta t)^-1/2. The asymmetry fit is
    skipped when every asymmetry is below ASYMMETRY_FLOOR (symmetric start).

    Raises:
        InsufficientGridError: If fewer than 3 distinct beta or t values are given
        FitError: If a shift series has too few positive values to fit
    """
    n_beta = _grid_size([f.beta for f in fits])
    n_t = _grid_size([f.t for f in fits])
    if min(n_beta, n_t) < MECHANISM_MIN_VALUES:
        raise InsufficientGridError(
            f"Mechanism split needs {MECHANISM_MIN_VALUES} values of beta and t, "
            f"got {n_beta} and {n_t}"
        )

    beta_t = np.array([f.beta * f.t for f in fits])
    centers = np.array([f.center_shift for f in fits])
    variances = np.array([f.variance_shift for f in fits])
    asymmetries = np.array([f.coefficient_asymmetry for f in fits])

    def positive_fit(label: str, values: np.ndarray):
        keep = values > 0.0
        if keep.sum() < keep.size:
            dropped = int((~keep).sum())
            logger.warning(f"Dropping {dropped} nonpositive {label} value(s)")
        return fit_power_law(beta_t[keep], values[keep])

    coefficient_fit = None
    if np.any(asymmetries > ASYMMETRY_FLOOR):
        coefficient_fit = positive_fit("coefficient asymmetry", asymmetries)
    else:
        logger.info("Coefficient asymmetry vanishes on the grid; symmetric start")

    report = MechanismReport(
        beta_t=beta_t.tolist(),
        center_shifts=centers.tolist(),
        variance_shifts=variances.tolist(),
        coefficient_asymmetries=asymmetries.tolist(),
        center_fit=positive_fit("center shift", centers),
        variance_fit=positive_fit("variance shift", variances),
        coefficient_fit=coefficient_fit,
        metadata={"n_beta": n_beta, "n_t": n_t},
    )
    logger.info(f"{report!r}")
    return report
