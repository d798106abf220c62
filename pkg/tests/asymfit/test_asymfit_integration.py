"""
Asymptotics Fitting Integration Tests

Tests cover:
1. Tail integrals and cutoffs of the three tail families
2. Validity windows and correction bounds
3. Power-law fits and steady-state decay fits on exact expectations
4. Per-peak mixture fits against G~_beta
5. The mechanism split over a (beta, t) grid
6. Source factory and Monte Carlo source
"""

import numpy as np
import pytest

from asymfit import (
    DecayFit,
    ExactSource,
    FitError,
    InsufficientGridError,
    MechanismReport,
    MixtureFit,
    MonteCarloSource,
    PeaksUnresolvedError,
    PowerLawFit,
    SourceFactory,
    create_source,
    fit_power_law,
    freeze_fit,
    freeze_validity,
    mechanism_split,
    steady_correction_bound,
    steady_decay_fit,
    steady_validity_window,
    tail_cutoff,
    tail_integral,
)
from exact1d import density_grid
from potential import gaussian_tilde, peak_set
from rootsys import build_a, build_b
from simulate import InitialCondition

# ============================================================================
# TEST FIXTURES
# ============================================================================


@pytest.fixture
def b1():
    """B_1 root system"""
    return build_b(1)


@pytest.fixture
def b1_peaks(b1):
    """Peak set of B_1"""
    return peak_set(b1)


@pytest.fixture
def decay_times():
    """Four times spanning three decades"""
    return [1e1, 1e2, 1e3, 1e4]


def linear(Y):
    return 1.0 + Y[..., 0]


def square(Y):
    return np.sum(Y**2, axis=-1)


def tilde_fit(system, peaks, beta, t, x0=2.0):
    """Fit G~_beta against itself"""
    density = gaussian_tilde(system, beta, t, [x0], peaks=peaks)
    return freeze_fit(density, system, beta, t, [x0], peaks=peaks)


# ============================================================================
# TAIL TESTS
# ============================================================================


class TestTails:
    """Test tail integrals and cutoffs"""

    def test_power_tail(self):
        """Power tail is C^-zeta / zeta"""
        assert tail_integral("power", 10.0, zeta=2.0) == pytest.approx(0.005)

    def test_power_tail_at_zero_diverges(self):
        """Power tail is infinite at C = 0"""
        assert tail_integral("power", 0.0, zeta=1.5) == np.inf

    def test_stretched_exponential_tail(self):
        """xi = 1 reduces to a plain exponential"""
        for C in [0.5, 2.0, 7.0]:
            value = tail_integral("stretched_exp", C, length=1.0, xi=1.0)
            assert value == pytest.approx(np.exp(-C), rel=1e-10)

    def test_stretched_exponential_asymptotic(self):
        """Large-C form approaches the exact tail"""
        exact = tail_integral("stretched_exp", 20.0, xi=2.0)
        approx = tail_integral("stretched_exp", 20.0, xi=2.0, asymptotic=True)
        assert approx == pytest.approx(exact, rel=5e-3)

    def test_cutoff_tail_is_zero(self):
        """Compact support has no tail"""
        assert tail_integral("cutoff", 3.0, length=2.0) == 0.0

    def test_power_cutoff_inverts_tail(self):
        """T(C(eps)) = eps for the power family"""
        C = tail_cutoff("power", 1e-3, zeta=2.0)
        assert C == pytest.approx((2.0 * 1e-3) ** -0.5)
        assert tail_integral("power", C, zeta=2.0) == pytest.approx(1e-3)

    def test_stretched_cutoff_inverts_tail(self):
        """brentq solution reproduces eps"""
        C = tail_cutoff("stretched_exp", 1e-6, length=1.5, xi=0.7)
        value = tail_integral("stretched_exp", C, length=1.5, xi=0.7)
        assert value == pytest.approx(1e-6, rel=1e-8)

    def test_cutoff_family_returns_bound(self):
        """Cutoff family returns its support bound"""
        assert tail_cutoff("cutoff", 1e-9, length=4.0) == 4.0

    def test_bad_parameters_raise(self):
        """Out-of-range parameters raise FitError"""
        with pytest.raises(FitError):
            tail_integral("power", 1.0, zeta=0.0)
        with pytest.raises(FitError):
            tail_integral("stretched_exp", 1.0, xi=-1.0)
        with pytest.raises(FitError):
            tail_integral("power", -1.0)
        with pytest.raises(FitError):
            tail_cutoff("power", 0.0)

    def test_unknown_family_raises(self):
        """Unknown family names are rejected"""
        with pytest.raises(ValueError):
            tail_integral("gaussian", 1.0)


# ============================================================================
# VALIDITY WINDOW TESTS
# ============================================================================


class TestValidityWindows:
    """Test validity windows and correction bounds"""

    def test_steady_validity_window(self, b1):
        """x0^2 max(1/c, c) with c = beta gamma r^2"""
        coupling = 2.0 * b1.gamma * 1.5**2
        window = steady_validity_window(b1, 2.0, 3.0, 1.5)
        assert window == pytest.approx(9.0 * max(coupling, 1.0 / coupling))

    def test_steady_validity_window_small_coupling(self, b1):
        """Weak coupling uses the reciprocal branch"""
        coupling = 0.01 * b1.gamma * 0.5**2
        window = steady_validity_window(b1, 0.01, 1.0, 0.5)
        assert window == pytest.approx(1.0 / coupling)

    def test_correction_bound_decays(self, b1):
        """Bound falls off as t^-1/2"""
        early = steady_correction_bound(b1, 1.0, 100.0, 2.0, 1.0)
        late = steady_correction_bound(b1, 1.0, 10000.0, 2.0, 1.0)
        assert early / late == pytest.approx(10.0)

    def test_freeze_validity_flags(self):
        """Valid only when both ratios exceed the margin"""
        a2 = build_a(3)
        good = freeze_validity(a2, 1000.0, 1000.0, 1.0, 1.0)
        assert good["valid"]
        assert good["coupling"] == pytest.approx(1000.0 * 3.0 / 2.0)
        bad = freeze_validity(a2, 1.0, 1.0, 5.0, 2.0)
        assert not bad["valid"]

    def test_freeze_validity_zero_start(self, b1):
        """A start at the origin has no time condition"""
        ratios = freeze_validity(b1, 100.0, 1.0, 0.0, 1.0)
        assert ratios["time"] == np.inf


# ============================================================================
# DECAY FIT TESTS
# ============================================================================


class TestPowerLaw:
    """Test log-log power-law fits"""

    def test_exact_power_law(self):
        """Exact data gives exact slope and intercept"""
        x = np.array([1.0, 10.0, 100.0, 1000.0])
        fit = fit_power_law(x, 3.0 * x**-0.75)
        assert isinstance(fit, PowerLawFit)
        assert fit.slope == pytest.approx(-0.75)
        assert fit.intercept == pytest.approx(np.log(3.0))
        assert fit.r_squared == pytest.approx(1.0)
        assert fit.predict(50.0) == pytest.approx(3.0 * 50.0**-0.75)

    def test_too_few_points(self):
        """Two points cannot be fitted"""
        with pytest.raises(FitError):
            fit_power_law([1.0, 2.0], [1.0, 0.5])

    def test_nonpositive_values(self):
        """Logarithms need positive data"""
        with pytest.raises(FitError):
            fit_power_law([1.0, 2.0, 3.0], [1.0, 0.0, 0.5])

    def test_round_trip(self):
        """to_dict / from_dict preserve the fit"""
        x = np.array([1.0, 2.0, 4.0, 8.0])
        fit = fit_power_law(x, x**-1.0)
        assert PowerLawFit.from_dict(fit.to_dict()).slope == fit.slope


class TestSteadyDecay:
    """Test steady-state decay fits on the exact B_1 source"""

    def test_linear_decays_as_inverse_sqrt(self, decay_times):
        """<1 + Y>_t - 1 = x0 / sqrt(beta t)"""
        source = ExactSource(beta=1.0, initial=2.0)
        fit = steady_decay_fit(source, linear, decay_times)
        assert isinstance(fit, DecayFit)
        assert fit.relative
        assert fit.steady_value == pytest.approx(1.0, abs=1e-8)
        assert fit.passes(-0.5, 0.02)
        assert fit.source == "exact"

    def test_symmetrized_square_decays_as_inverse_t(self, decay_times):
        """Symmetric start removes the t^-1/2 term"""
        source = ExactSource(beta=1.0, initial=[(2.0, 0.5), (-2.0, 0.5)])
        fit = steady_decay_fit(source, square, decay_times)
        assert fit.steady_value == pytest.approx(2.0, rel=1e-6)
        assert fit.passes(-1.0, 0.15)

    def test_too_few_times(self):
        """Three times are not enough"""
        source = ExactSource(beta=1.0, initial=2.0)
        with pytest.raises(InsufficientGridError):
            steady_decay_fit(source, linear, [10.0, 100.0, 1000.0])

    def test_narrow_grid(self):
        """Times must span 1.5 decades"""
        source = ExactSource(beta=1.0, initial=2.0)
        with pytest.raises(InsufficientGridError):
            steady_decay_fit(source, linear, [10.0, 15.0, 20.0, 25.0])

    def test_validity_window_recorded(self, b1, decay_times):
        """Window scale and flags are reported"""
        source = ExactSource(beta=1.0, initial=2.0)
        fit = steady_decay_fit(
            source, linear, decay_times, system=b1, x0_norm=2.0, radius=1.0
        )
        assert fit.window_t_min == pytest.approx(
            steady_validity_window(b1, 1.0, 2.0, 1.0)
        )
        assert len(fit.in_window) == len(decay_times)
        assert fit.in_window[-1]

    def test_bootstrap_needs_path_values(self, decay_times):
        """Exact source has no per-path values"""
        source = ExactSource(beta=1.0, initial=2.0)
        with pytest.raises(FitError, match="no per-path values"):
            steady_decay_fit(source, linear, decay_times, bootstrap=True)


# ============================================================================
# MIXTURE FIT TESTS
# ============================================================================


class TestFreezeFit:
    """Test per-peak Gaussian fits"""

    def test_recovers_tilde_parameters(self, b1, b1_peaks):
        """Fitting G~_beta reproduces its own parameters"""
        fit = tilde_fit(b1, b1_peaks, 100.0, 10.0)
        assert isinstance(fit, MixtureFit)
        assert fit.method == "least_squares"
        assert fit.n_peaks == 2
        assert fit.center_discrepancy < 1e-6
        assert fit.sigma_discrepancy < 1e-4
        assert fit.coefficient_discrepancy < 1e-3

    def test_shifts_against_steady_state(self, b1, b1_peaks):
        """Centers move out by eps/2 and variances grow by eps"""
        fit = tilde_fit(b1, b1_peaks, 100.0, 10.0)
        eps = 4.0 / (1.0 * 100.0 * 10.0)
        assert fit.center_shift == pytest.approx(eps / 2.0, rel=1e-3)
        assert fit.variance_shift == pytest.approx(eps, rel=1e-3)
        assert fit.coefficient_asymmetry == pytest.approx(
            2.0 / np.sqrt(1000.0), rel=1e-3
        )

    def test_exact_density_near_strong_coupling(self, b1, b1_peaks):
        """Exact B_1 density at beta=100, t=10, x0=2 matches G~_beta"""
        grid = np.linspace(-2.0, 2.0, 401)
        density = density_grid(10.0, 2.0, 100.0, grid, "scaled")
        reference = density_grid(10.0, 2.0, 100.0, grid, "steady")
        fit = freeze_fit(density, b1, 100.0, 10.0, [2.0], reference, b1_peaks)

        order = np.argsort(fit.predicted_centers[:, 0])
        assert fit.predicted_centers[order, 0] == pytest.approx(
            [-1.002, 1.002], abs=1e-6
        )
        assert fit.fitted_coefficients[order] == pytest.approx(
            [1.0 - 2.0 / np.sqrt(1000.0), 1.0 + 2.0 / np.sqrt(1000.0)], abs=1e-3
        )
        assert fit.center_discrepancy <= 1e-3
        assert fit.coefficient_discrepancy <= 1e-3
        assert np.all(
            np.abs(fit.fitted_sigmas[:, 0] ** 2 - (1.0 + 4.0 / 1000.0) / 200.0)
            <= 2e-4
        )

    def test_center_discrepancy_cancels_common_offset(self, b1, b1_peaks):
        """An offset shared by the fitted density and its reference drops out"""
        fit = tilde_fit(b1, b1_peaks, 100.0, 10.0)
        offset = np.sign(fit.fitted_centers) * 1e-3
        fit.fitted_centers = fit.fitted_centers + offset
        assert fit.center_discrepancy == pytest.approx(1e-3, rel=1e-3)

        fit.steady_centers = fit.reference_centers.copy()
        fit.reference_centers = fit.reference_centers + offset
        assert fit.center_discrepancy < 1e-6
        assert MixtureFit.from_dict(fit.to_dict()).center_discrepancy < 1e-6

    def test_unresolved_peaks(self, b1, b1_peaks):
        """Low beta merges the peak windows"""
        density = gaussian_tilde(b1, 2.0, 10.0, [2.0], peaks=b1_peaks)
        with pytest.raises(PeaksUnresolvedError):
            freeze_fit(density, b1, 2.0, 10.0, [2.0], peaks=b1_peaks)

    def test_round_trip(self, b1, b1_peaks):
        """to_dict / from_dict preserve the fit"""
        fit = tilde_fit(b1, b1_peaks, 100.0, 10.0)
        restored = MixtureFit.from_dict(fit.to_dict())
        assert restored.method == fit.method
        np.testing.assert_allclose(restored.fitted_centers, fit.fitted_centers)


class TestMechanismSplit:
    """Test power laws of the three relaxation mechanisms"""

    def test_exponents(self, b1, b1_peaks):
        """Shifts decay as (beta t)^-1, asymmetry as (beta t)^-1/2"""
        fits = [
            tilde_fit(b1, b1_peaks, beta, t)
            for beta in [50.0, 200.0, 800.0]
            for t in [5.0, 20.0, 80.0]
        ]
        report = mechanism_split(fits)
        assert isinstance(report, MechanismReport)
        exponents = report.exponents
        assert exponents["center"] == pytest.approx(-1.0, abs=0.05)
        assert exponents["variance"] == pytest.approx(-1.0, abs=0.05)
        assert exponents["coefficient"] == pytest.approx(-0.5, abs=0.05)

    def test_grid_too_small(self, b1, b1_peaks):
        """Fewer than three beta values raise"""
        fits = [
            tilde_fit(b1, b1_peaks, beta, t)
            for beta in [50.0, 200.0]
            for t in [5.0, 20.0, 80.0]
        ]
        with pytest.raises(InsufficientGridError):
            mechanism_split(fits)


# ============================================================================
# SOURCE TESTS
# ============================================================================


class TestSources:
    """Test source factory and Monte Carlo source"""

    def test_factory_creates_exact(self):
        """Exact kind builds an ExactSource"""
        source = create_source("exact", beta=2.0, initial=1.0)
        assert isinstance(source, ExactSource)
        assert source.beta == 2.0

    def test_factory_unknown_kind(self):
        """Unknown kinds raise FitError"""
        with pytest.raises(FitError, match="Unknown"):
            SourceFactory.create_source("bogus", beta=1.0)

    def test_factory_bad_arguments(self):
        """Constructor mismatches raise FitError"""
        with pytest.raises(FitError, match="Bad arguments"):
            SourceFactory.create_source("exact", beta=1.0)

    def test_exact_source_has_no_error(self):
        """Quadrature expectations carry no standard error"""
        source = ExactSource(beta=1.0, initial=2.0)
        value, stderr = source.expectation(linear, 100.0)
        assert value == pytest.approx(1.0 + 2.0 / 10.0, rel=1e-8)
        assert stderr == 0.0
        assert source.path_values(linear, 100.0) is None

    def test_monte_carlo_source(self, b1):
        """Ensemble second moment and steady reference for B_1"""
        source = MonteCarloSource(
            b1,
            beta=2.0,
            initial=InitialCondition.point([1.0]),
            n_paths=4000,
            seed=3,
        )
        source.prepare([1.0])
        value, stderr = source.expectation(square, 1.0)
        # (x0^2 + (1 + beta) t) / (beta t)
        assert value == pytest.approx(2.0, abs=0.2)
        assert stderr > 0.0
        assert source.path_values(square, 1.0).shape == (4000,)
        assert source.steady_expectation(square) == pytest.approx(1.5, abs=0.1)
