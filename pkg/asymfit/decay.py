"""
Steady-State Decay Fits

The deviation |<phi>_t / <phi> - 1| of an expectation from its
steady-state value is fitted as a power of t on a log-log scale. A linear
test function relaxes as t^{-1/2}; a W-symmetrized start removes that
term and leaves t^{-1}.
"""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from asymfit.constants import (
    BOOTSTRAP_RESAMPLES,
    BOOTSTRAP_SEED,
    FIT_MIN_DECADES,
    FIT_MIN_TIMES,
    FIT_SIGNAL_FLOOR,
    STEADY_VALUE_FLOOR,
    TOLERANCE_DELTA,
    VALIDITY_MARGIN,
)
from asymfit.interfaces.expectation_source import (
    ExpectationSourceInterface,
    FitError,
    InsufficientGridError,
    SignalLostError,
    TestFunction,
)
from asymfit.models.decay_fit import DecayFit, PowerLawFit
from asymfit.tails import steady_validity_window
from potential import tolerance_radius
from rootsys import RootSystem

logger = logging.getLogger(__name__)


def fit_power_law(x: Sequence[float], y: Sequence[float]) -> PowerLawFit:
    """
    Least-squares line through (log x, log y).

    Raises:
        FitError: If fewer than 3 points are given or any value is not positive
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.size < 3 or x.size != y.size:
        raise FitError(f"Power-law fit needs at least 3 matched points, got {x.size}")
    if np.any(x <= 0.0) or np.any(y <= 0.0):
        raise FitError("Power-law fit needs positive x and y")

    result = stats.linregress(np.log(x), np.log(y))
    return PowerLawFit(
        slope=float(result.slope),
        intercept=float(result.intercept),
        slope_stderr=float(result.stderr),
        intercept_stderr=float(result.intercept_stderr),
        r_squared=float(result.rvalue**2),
        n_points=int(x.size),
    )


def _check_times(times: np.ndarray) -> None:
    if times.size < FIT_MIN_TIMES:
        raise InsufficientGridError(
            f"Decay fit needs at least {FIT_MIN_TIMES} times, got {times.size}"
        )
    decades = np.log10(times[-1] / times[0])
    if decades < FIT_MIN_DECADES:
        raise InsufficientGridError(
            f"Decay fit times span {decades:.2f} decades, need {FIT_MIN_DECADES}"
        )


def _deviations(values: np.ndarray, steady: float, relative: bool) -> np.ndarray:
    if relative:
        return np.abs(values / steady - 1.0)
    return np.abs(values - steady)


def bootstrap_slope(
    source: ExpectationSourceInterface,
    phi: TestFunction,
    times: Sequence[float],
    steady_value: Optional[float] = None,
    resamples: int = BOOTSTRAP_RESAMPLES,
    seed: int = BOOTSTRAP_SEED,
) -> Tuple[float, float, np.ndarray]:
    """
    Path-level bootstrap of the decay slope.

    Paths are resampled with replacement (the same indices at every time
    when the ensembles share paths) and the log-log slope is refitted.

    Returns:
        (mean slope, standard deviation, all resampled slopes)

    Raises:
        FitError: If the source has no per-path values
    """
    times = np.sort(np.asarray(times, dtype=np.float64))
    source.prepare(times)
    values = [source.path_values(phi, t) for t in times]
    if any(v is None for v in values):
        raise FitError(f"{source.name} source has no per-path values to bootstrap")

    steady = source.steady_expectation(phi) if steady_value is None else steady_value
    relative = abs(steady) > STEADY_VALUE_FLOOR
    shared = len({v.size for v in values}) == 1
    rng = np.random.default_rng(seed)
    log_t = np.log(times)

    slopes = []
    for _ in range(resamples):
        if shared:
            index = rng.integers(0, values[0].size, values[0].size)
            means = np.array([v[index].mean() for v in values])
        else:
            means = np.array(
                [v[rng.integers(0, v.size, v.size)].mean() for v in values]
            )
        deviations = _deviations(means, steady, relative)
        if np.any(deviations <= 0.0):
            continue
        slopes.append(np.polyfit(log_t, np.log(deviations), 1)[0])

    slopes_array = np.asarray(slopes)
    if slopes_array.size < 2:
        raise SignalLostError("signal lost: bootstrap deviations hit zero")
    return float(slopes_array.mean()), float(slopes_array.std(ddof=1)), slopes_array


def steady_decay_fit(
    source: ExpectationSourceInterface,
    phi: TestFunction,
    times: Sequence[float],
    system: Optional[RootSystem] = None,
    x0_norm: Optional[float] = None,
    radius: Optional[float] = None,
    enforce_window: bool = False,
    bootstrap: bool = False,
) -> DecayFit:
    """
    Fit |<phi>_t / <phi> - 1| ~ t^slope.

    When <phi> vanishes the absolute deviation |<phi>_t - <phi>| is fitted.

    Args:
        source: Expectation source
        phi: Test function of Y (..., N)
        times: At least 4 times spanning at least 1.5 decades
        system: Root system (enables the validity-window check with x0_norm)
        x0_norm: |x0| of the initial condition
        radius: r(delta) (computed with delta = 1e-3 when omitted)
        enforce_window: Drop times outside the validity window before fitting
        bootstrap: Add a path-level bootstrap error (Monte Carlo sources)

    Raises:
        InsufficientGridError: If the time grid is too small
        SignalLostError: If a deviation falls below the numerical floor
    """
    times_array = np.sort(np.asarray(times, dtype=np.float64))
    _check_times(times_array)

    window_t_min = None
    in_window = np.ones(times_array.size, bool)
    if system is not None and x0_norm is not None:
        if radius is None:
            radius = tolerance_radius(system, source.beta, TOLERANCE_DELTA)
        window_t_min = steady_validity_window(system, source.beta, x0_norm, radius)
        in_window = times_array >= VALIDITY_MARGIN * window_t_min
        if not in_window.all():
            logger.warning(
                f"{int((~in_window).sum())} time(s) below the validity scale "
                f"{window_t_min:.3g} (x{VALIDITY_MARGIN:g}) for {system.name}"
            )
        if enforce_window:
            times_array = times_array[in_window]
            in_window = in_window[in_window]
            _check_times(times_array)

    source.prepare(times_array)
    steady = source.steady_expectation(phi)
    relative = abs(steady) > STEADY_VALUE_FLOOR
    estimates = [source.expectation(phi, t) for t in times_array]
    values = np.array([e[0] for e in estimates])
    stderrs = np.array([e[1] for e in estimates])
    deviations = _deviations(values, steady, relative)
    if relative:
        stderrs = stderrs / abs(steady)

    if np.any(deviations < FIT_SIGNAL_FLOOR):
        raise SignalLostError(
            f"signal lost: deviation {deviations.min():.2e} below {FIT_SIGNAL_FLOOR:g}"
        )
    noisy = deviations < 2.0 * stderrs
    if np.any(noisy):
        logger.warning(
            f"{int(noisy.sum())} deviation(s) within 2 standard errors of zero"
        )

    fit = fit_power_law(times_array, deviations)
    bootstrap_stderr = None
    if bootstrap:
        _, bootstrap_stderr, _ = bootstrap_slope(source, phi, times_array, steady)

    decay = DecayFit(
        times=times_array.tolist(),
        deviations=deviations.tolist(),
        slope=fit.slope,
        slope_stderr=fit.slope_stderr,
        intercept=fit.intercept,
        steady_value=float(steady),
        relative=relative,
        source=source.name,
        window_t_min=window_t_min,
        in_window=in_window.tolist(),
        deviation_stderrs=stderrs.tolist(),
        bootstrap_stderr=bootstrap_stderr,
    )
    logger.info(f"{decay!r}")
    return decay
