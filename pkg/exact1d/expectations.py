"""
B_1 Expectations

Quadrature of test functions against the exact scaled density, the steady
state and the first-order prediction of the approach to it.

Quadrature runs over [-L, L] with L = sqrt(2 * 40 / beta) + |x0|/sqrt(beta t) + 5,
trimmed to where the density exceeds 1e-14 of its peak, with breakpoints
at the origin, at +-1 (the steady peaks) and at x0/sqrt(beta t).
"""

import logging
from typing import Callable, Iterable, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import integrate

from exact1d.bessel import Exact1DError
from exact1d.constants import (
    QUAD_ACCEPT_ERROR,
    QUAD_EPSABS,
    QUAD_EPSREL,
    QUAD_LIMIT,
    QUAD_TAIL_EXPONENT,
    QUAD_TAIL_PAD,
    TAIL_TRUNCATION,
    DensityCurve,
)
from exact1d.densities import (
    Initial,
    gaussian_tilde_1d,
    mixture_components,
    scaled_density_1d,
    scaled_density_mixture_1d,
    steady_density_1d,
)
from exact1d.models.density_1d import Density1D

logger = logging.getLogger(__name__)

TestFunction = Callable[[float], float]
DensityFunction = Callable[[np.ndarray], np.ndarray]

# Points used to locate where the density is negligible
_SCAN_POINTS = 4001


def domain_half_width(t: Optional[float], x0: float, beta: float) -> float:
    """L = sqrt(2 * 40 / beta) + |x0| / sqrt(beta t) + 5"""
    drift = 0.0 if t is None else abs(x0) / np.sqrt(beta * t)
    return float(np.sqrt(2.0 * QUAD_TAIL_EXPONENT / beta) + drift + QUAD_TAIL_PAD)


def _trimmed_domain(density: DensityFunction, half_width: float) -> Tuple[float, float]:
    """
    Shrink [-L, L] to where density >= 1e-14 of its maximum, keeping one
    scan cell of slack.
    """
    scan = np.linspace(-half_width, half_width, _SCAN_POINTS)
    values = density(scan)
    keep = np.nonzero(values >= TAIL_TRUNCATION * values.max())[0]
    if keep.size == 0:
        return -half_width, half_width
    cell = scan[1] - scan[0]
    return (
        max(-half_width, float(scan[keep[0]] - cell)),
        min(half_width, float(scan[keep[-1]] + cell)),
    )


def integrate_density(
    phi: TestFunction,
    density: DensityFunction,
    half_width: float,
    breakpoints: Iterable[float] = (),
) -> float:
    """
    Integral of phi(Y) density(Y) over the trimmed domain.

    Raises:
        Exact1DError: If the quadrature error estimate stays too large
    """
    low, high = _trimmed_domain(density, half_width)
    inner = sorted({float(p) for p in breakpoints if low < p < high})

    def integrand(y: float) -> float:
        return float(phi(y) * density(np.asarray(y)))

    value, error = integrate.quad(
        integrand,
        low,
        high,
        points=inner or None,
        epsabs=QUAD_EPSABS,
        epsrel=QUAD_EPSREL,
        limit=QUAD_LIMIT,
    )
    if not np.isfinite(value) or error > QUAD_ACCEPT_ERROR * max(1.0, abs(value)):
        raise Exact1DError(
            f"Quadrature did not converge on [{low:.3g}, {high:.3g}] "
            f"(estimate {value:.6g}, error {error:.2e})"
        )
    return float(value)


def _breakpoints(centers: Sequence[float]) -> Sequence[float]:
    return [-1.0, 0.0, 1.0, *centers]


# =============================================================================
# EXPECTATIONS
# =============================================================================


def expectation_1d(phi: TestFunction, t: float, x0: float, beta: float) -> float:
    """
    <phi>_{t, x0}: integral of phi(Y) f(t, Y) for a start at x0.

    Args:
        phi: Polynomially bounded test function of Y
        t: Time t > 0
        x0: Starting point
        beta: beta > 0
    """
    return integrate_density(
        phi,
        lambda y: scaled_density_1d(t, y, x0, beta),
        domain_half_width(t, x0, beta),
        _breakpoints([x0 / np.sqrt(beta * t)]),
    )


def expectation_mixture_1d(
    phi: TestFunction, t: float, initial: Initial, beta: float
) -> float:
    """<phi>_t for a finite mixture of point masses"""
    points, _ = mixture_components(initial)
    widest = float(np.max(np.abs(points)))
    return integrate_density(
        phi,
        lambda y: scaled_density_mixture_1d(t, y, initial, beta),
        domain_half_width(t, widest, beta),
        _breakpoints(points / np.sqrt(beta * t)),
    )


def steady_expectation_1d(phi: TestFunction, beta: float) -> float:
    """<phi> under the steady state e^{-beta Y^2/2} |Y|^beta / z_beta"""
    return integrate_density(
        phi,
        lambda y: steady_density_1d(beta, y),
        domain_half_width(None, 0.0, beta),
        _breakpoints([]),
    )


def first_order_expectation_1d(
    phi: TestFunction, t: float, x0: float, beta: float
) -> float:
    """
    First-order approach to the steady state:

        <phi> + sqrt(beta / t) / (1 + beta) <phi(Y) x0 Y>

    Exact for phi = Y + 1; the error is O(1/t) for smooth phi.
    """
    if not t > 0.0:
        raise Exact1DError(f"t must be positive, got {t}")
    base = steady_expectation_1d(phi, beta)
    correction = steady_expectation_1d(lambda y: phi(y) * x0 * y, beta)
    return base + np.sqrt(beta / t) / (1.0 + beta) * correction


# =============================================================================
# TABULATION
# =============================================================================


def _curve_evaluator(
    curve: DensityCurve, t: float, x0: float, beta: float
) -> DensityFunction:
    if curve == DensityCurve.SCALED:
        return lambda y: scaled_density_1d(t, y, x0, beta)
    if curve == DensityCurve.STEADY:
        return lambda y: steady_density_1d(beta, y)
    if curve == DensityCurve.GTILDE:
        return lambda y: gaussian_tilde_1d(t, y, x0, beta)

    factor = np.sqrt(beta / t) / (1.0 + beta) * x0
    return lambda y: steady_density_1d(beta, y) * (1.0 + factor * np.asarray(y))


def density_grid(
    t: float,
    x0: float,
    beta: float,
    grid: np.ndarray,
    curve: Union[str, DensityCurve] = DensityCurve.SCALED,
) -> Density1D:
    """
    Tabulate one of the B_1 curves on a grid of Y values.

    Args:
        t: Time t > 0
        x0: Starting point
        beta: beta > 0
        grid: Y values
        curve: "scaled", "steady", "gtilde" or "first_order"

    Returns:
        Density1D whose normalization_check is the quadrature mass
    """
    curve = DensityCurve(curve)
    evaluator = _curve_evaluator(curve, t, x0, beta)
    half_width = domain_half_width(t, x0, beta)
    mass = integrate_density(
        lambda y: 1.0, evaluator, half_width, _breakpoints([x0 / np.sqrt(beta * t)])
    )
    grid = np.asarray(grid, dtype=np.float64)
    density = Density1D(
        evaluator=evaluator,
        support_hint=_trimmed_domain(evaluator, half_width),
        normalization_check=mass,
        label=curve.value,
        grid=grid,
        values=evaluator(grid),
        parameters={"t": t, "x0": x0, "beta": beta},
    )
    logger.debug(f"{density!r}")
    return density


def cdf_table_1d(
    t: float,
    x0: float,
    beta: float,
    n_points: int,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Tabulated CDF of f(t, Y) on the trimmed quadrature domain.

    The density is integrated with the trapezoid rule on n_points nodes and
    the result is divided by its total.

    Returns:
        (grid, cdf) with cdf nondecreasing from 0 to 1

    Raises:
        Exact1DError: If the table is not monotone or its mass is off by more
                      than 1e-3
    """
    evaluator = _curve_evaluator(DensityCurve.SCALED, t, x0, beta)
    low, high = _trimmed_domain(evaluator, domain_half_width(t, x0, beta))
    grid = np.linspace(low, high, n_points)
    cdf = integrate.cumulative_trapezoid(evaluator(grid), grid, initial=0.0)
    total = cdf[-1]
    if not np.isfinite(total) or abs(total - 1.0) > 1e-3 or np.any(np.diff(cdf) < 0.0):
        raise Exact1DError(
            f"CDF table for t={t:g}, x0={x0:g}, beta={beta:g} is not a valid "
            f"distribution (mass {total:.6g})"
        )
    return grid, cdf / total
