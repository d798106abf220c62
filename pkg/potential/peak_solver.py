"""
Peak Solver

Finds the minima of F_R. One minimum is located by damped Newton inside
the positive Weyl chamber; the rest are its images under W, since F_R is
W-invariant and strictly convex on each chamber.
"""

import logging
from typing import Optional

import numpy as np

from potential.constants import (
    PEAK_GRADIENT_TOLERANCE,
    PEAK_MAX_HALVINGS,
    PEAK_MAX_ITER,
    PEAK_ORBIT_TOLERANCE,
    PEAK_RESIDUAL_LIMIT,
)
from potential.free_energy import PotentialError, f_r, grad_f_r, hessian_f_r, root_dots
from potential.models.peak_set import PeakSet
from rootsys import RootSystem, orbit_points

logger = logging.getLogger(__name__)


class PeakConvergenceError(PotentialError):
    """Damped Newton did not reach the gradient tolerance"""


def chamber_start(system: RootSystem) -> np.ndarray:
    """Sum of the positive roots, scaled to norm sqrt(gamma)"""
    direction = system.positive_roots.sum(axis=0)
    return direction * np.sqrt(system.gamma) / np.linalg.norm(direction)


def _newton_minimize(
    system: RootSystem,
    start: np.ndarray,
    max_iter: int,
    tolerance: float,
) -> tuple:
    """
    Damped Newton on F_R restricted to Span(R).

    Each step is halved until F_R does not increase and no alpha . Y
    changes sign.

    Returns:
        Tuple of (minimizer, iterations used, final gradient norm)
    """
    basis = system.span_basis
    y = basis.T @ (basis @ start)
    signs = np.sign(root_dots(system, y))
    value = float(f_r(system, y))
    grad_norm = float("inf")

    for iteration in range(1, max_iter + 1):
        grad = basis @ grad_f_r(system, y)
        grad_norm = float(np.linalg.norm(grad))
        if grad_norm < tolerance:
            return y, iteration - 1, grad_norm

        hess = basis @ hessian_f_r(system, y) @ basis.T
        step = basis.T @ np.linalg.solve(hess, -grad)

        scale = 1.0
        for _ in range(PEAK_MAX_HALVINGS):
            candidate = y + scale * step
            dots = root_dots(system, candidate, check_walls=False)
            if np.all(np.sign(dots) == signs):
                candidate_value = float(f_r(system, candidate))
                # Equality is allowed once F_R is flat to rounding
                if candidate_value <= value + 1e-15 * max(1.0, abs(value)):
                    break
            scale *= 0.5
        else:
            logger.debug(f"Line search exhausted at iteration {iteration}")
            return y, iteration, grad_norm

        y, value = candidate, candidate_value

    return y, max_iter, grad_norm


def peak_set(
    system: RootSystem,
    max_iter: int = PEAK_MAX_ITER,
    tolerance: Optional[float] = None,
    expand_orbit: bool = True,
) -> PeakSet:
    """
    Compute the peak set of a root system.

    Args:
        system: Validated root system
        max_iter: Newton iteration cap
        tolerance: Gradient norm target (defaults to 1e-12 * max(1, sqrt(gamma)))
        expand_orbit: When False only the positive-chamber peak is returned

    Returns:
        PeakSet with |W| points (or one point when expand_orbit is False)

    Raises:
        PeakConvergenceError: If the gradient or orbit residuals stay too large
    """
    if tolerance is None:
        tolerance = PEAK_GRADIENT_TOLERANCE * max(1.0, np.sqrt(system.gamma))

    s1, iterations, grad_norm = _newton_minimize(
        system, chamber_start(system), max_iter, tolerance
    )
    if grad_norm > PEAK_RESIDUAL_LIMIT * max(1.0, np.sqrt(system.gamma)):
        raise PeakConvergenceError(
            f"Peak solver for {system.name} did not converge after "
            f"{iterations} iterations (residual {grad_norm:.3e})"
        )

    if expand_orbit:
        points = orbit_points(system, s1, decimals=int(-np.log10(PEAK_ORBIT_TOLERANCE)))
    else:
        points = s1[None, :]

    residuals = np.linalg.norm(grad_f_r(system, points), axis=1)
    worst = float(residuals.max())
    if worst > PEAK_RESIDUAL_LIMIT * max(1.0, np.sqrt(system.gamma)):
        raise PeakConvergenceError(
            f"Orbit of the {system.name} peak has residual {worst:.3e}"
        )

    hessians = hessian_f_r(system, points)
    restricted = system.span_basis @ hessians @ system.span_basis.T
    eigenvalues = np.linalg.eigvalsh(restricted)

    peaks = PeakSet(
        points=points,
        hessians=hessians,
        eigenvalues=eigenvalues,
        f_value=float(f_r(system, s1)),
        residuals=residuals,
        gamma=system.gamma,
        system_name=system.name,
        iterations=iterations,
    )
    logger.info(f"{peaks!r} after {iterations} Newton iteration(s)")
    return peaks
