"""
Tails and Validity Windows

Tail integrals T(C) of the initial distribution, the cutoff C(eps) with
T(C) = eps, the size of the first correction to the steady-state
expectation, and the strong-coupling validity checks.
"""

import logging
from typing import Any, Dict, Union

import numpy as np
from scipy import optimize, special

from asymfit.constants import VALIDITY_MARGIN, TailFamily
from asymfit.interfaces.expectation_source import FitError
from potential import freeze_window_ratios
from rootsys import RootSystem

logger = logging.getLogger(__name__)


def _check_tail_parameters(
    family: TailFamily, length: float, xi: float, zeta: float
) -> None:
    if family == TailFamily.STRETCHED_EXP and not (length > 0.0 and xi > 0.0):
        raise FitError(
            f"stretched_exp needs l > 0 and xi > 0, got l={length}, xi={xi}"
        )
    if family == TailFamily.POWER and not zeta > 0.0:
        raise FitError(f"power tail needs zeta > 0, got {zeta}")
    if family == TailFamily.CUTOFF and not length > 0.0:
        raise FitError(f"cutoff needs a positive support bound, got {length}")


def tail_integral(
    family: Union[str, TailFamily],
    C: float,
    length: float = 1.0,
    xi: float = 1.0,
    zeta: float = 1.0,
    asymptotic: bool = False,
) -> float:
    """
    T(C) for the three tail families.

    - cutoff: 0 for every C at or beyond the support bound `length`
    - stretched_exp: integral_C^inf exp(-(x/l)^xi) dx = (l/xi) Gamma(1/xi, (C/l)^xi);
      with asymptotic=True the large-C/l form (l/xi)(l/C)^{xi-1} e^{-(C/l)^xi}
    - power: C^{-zeta} / zeta

    Raises:
        FitError: If the family parameters are out of range or C < 0
    """
    family = TailFamily(family)
    _check_tail_parameters(family, length, xi, zeta)
    if C < 0.0:
        raise FitError(f"C must be nonnegative, got {C}")

    if family == TailFamily.CUTOFF:
        if C < length:
            logger.debug(f"C={C:g} is inside the cutoff support (bound {length:g})")
        return 0.0
    if family == TailFamily.POWER:
        if C == 0.0:
            return float("inf")
        return float(C ** (-zeta) / zeta)

    u = (C / length) ** xi
    if asymptotic:
        return float((length / xi) * (length / C) ** (xi - 1.0) * np.exp(-u))
    shape = 1.0 / xi
    return float((length / xi) * special.gamma(shape) * special.gammaincc(shape, u))


def tail_cutoff(
    family: Union[str, TailFamily],
    epsilon: float,
    length: float = 1.0,
    xi: float = 1.0,
    zeta: float = 1.0,
) -> float:
    """
    C(eps): the smallest C with T(C) = eps.

    The cutoff family returns its support bound; the power family has the
    closed form (zeta eps)^{-1/zeta}; the stretched exponential is bracketed
    and solved with brentq.
    """
    family = TailFamily(family)
    _check_tail_parameters(family, length, xi, zeta)
    if not epsilon > 0.0:
        raise FitError(f"epsilon must be positive, got {epsilon}")

    if family == TailFamily.CUTOFF:
        return float(length)
    if family == TailFamily.POWER:
        return float((zeta * epsilon) ** (-1.0 / zeta))

    total = tail_integral(family, 0.0, length, xi)
    if epsilon >= total:
        return 0.0

    def excess(c: float) -> float:
        return tail_integral(family, c, length, xi) - epsilon

    upper = length
    while excess(upper) > 0.0:
        upper *= 2.0
    return float(optimize.brentq(excess, 0.0, upper, xtol=1e-14 * max(1.0, upper)))


def steady_correction_bound(
    system: RootSystem,
    beta: float,
    t: float,
    x0_norm: float,
    radius: float,
) -> float:
    """
    Size of the first correction to <phi>_t:

    sqrt(beta gamma / t) r |x0| / (1 + beta gamma / d_R)
    """
    gamma, d = system.gamma, system.rank
    shift = np.sqrt(beta * gamma / t) * radius * x0_norm
    return float(shift / (1.0 + beta * gamma / d))


def steady_validity_window(
    system: RootSystem,
    beta: float,
    x0_norm: float,
    radius: float,
) -> float:
    """
    Time scale x0^2 max(1 / (beta gamma r^2), beta gamma r^2).

    The steady-state expansion needs t much larger than this.
    """
    coupling = beta * system.gamma * radius**2
    return float(x0_norm**2 * max(1.0 / coupling, coupling))


def freeze_validity(
    system: RootSystem,
    beta: float,
    t: float,
    x0_norm: float,
    radius: float,
) -> Dict[str, Any]:
    """
    Strong-coupling window checks.

    Returns:
        {"coupling": beta gamma / d_R, "time": beta t gamma / (d_R^2 x0^2 r^2),
         "valid": both at least VALIDITY_MARGIN}
    """
    ratios: Dict[str, Any] = freeze_window_ratios(system, beta, t, x0_norm, radius)
    ratios["valid"] = bool(min(ratios["coupling"], ratios["time"]) >= VALIDITY_MARGIN)
    if not ratios["valid"]:
        logger.warning(
            f"Strong-coupling window fails for {system.name} "
            f"at beta={beta:g}, t={t:g}: "
            f"coupling {ratios['coupling']:.3g}, time {ratios['time']:.3g}"
        )
    return ratios
