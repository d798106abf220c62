"""
Exact B_1 Integration Tests

Tests cover:
1. Modified Bessel functions in log space (series, scipy and Debye regimes)
2. Transition density: Bessel form against the kernel form, x0 = 0 limit,
   reflection symmetry
3. Scaled density normalization, including beta in the thousands
4. Exact moments: <Y> and <Y^2> are known in closed form
5. Steady state, first-order correction and symmetrized starts
6. Tabulation: density grids and CDF tables
"""

import numpy as np
import pytest
from scipy import integrate, special

from exact1d import (
    Density1D,
    Exact1DError,
    bessel_i,
    cdf_table_1d,
    density_grid,
    expectation_1d,
    expectation_mixture_1d,
    first_order_expectation_1d,
    gaussian_tilde_1d,
    log_bessel_i,
    log_bessel_i_sum,
    scaled_density_1d,
    scaled_density_mixture_1d,
    steady_cdf_1d,
    steady_density_1d,
    steady_expectation_1d,
    tpd_b1,
    tpd_template_b1,
)
from potential import gaussian_tilde
from rootsys import build_b

# =============================================================================
# TEST FIXTURES
# =============================================================================


@pytest.fixture
def grid():
    """Scaled coordinates covering both peaks"""
    return np.linspace(-2.5, 2.5, 501)


def linear(y):
    """phi(Y) = 1 + Y"""
    return 1.0 + y


# =============================================================================
# BESSEL TESTS
# =============================================================================


class TestBessel:
    """Test log I_nu(z) in every regime"""

    @pytest.mark.parametrize("nu", [-0.5, 0.0, 2.5, 40.0])
    def test_matches_scipy(self, nu):
        """Series and ive branches agree with scipy"""
        z = np.array([0.1, 3.0, 30.0, 200.0])
        expected = z + np.log(special.ive(nu, z))
        assert np.allclose(log_bessel_i(nu, z), expected, rtol=1e-10)

    def test_debye_branch(self):
        """Order 1000 uses the uniform expansion"""
        z = np.array([800.0, 3000.0])
        expected = z + np.log(special.ive(1000.0, z))
        assert np.allclose(log_bessel_i(1000.0, z), expected, rtol=1e-9)

    def test_values_at_zero(self):
        """I_0(0) = 1 and I_nu(0) = 0 for nu > 0"""
        assert bessel_i(0.0, 0.0) == pytest.approx(1.0)
        assert bessel_i(1.5, 0.0) == 0.0

    def test_difference_stays_positive(self):
        """I_nu - I_{nu+1} > 0 even where both overflow"""
        values = log_bessel_i_sum(10.0, np.array([5.0, 500.0, 5000.0]), -1.0)
        assert np.all(np.isfinite(values))

    def test_invalid_arguments(self):
        """Orders below -1/2 and negative arguments are rejected"""
        with pytest.raises(Exact1DError):
            log_bessel_i(-1.0, 1.0)
        with pytest.raises(Exact1DError):
            log_bessel_i(1.0, -1.0)


# =============================================================================
# TRANSITION DENSITY TESTS
# =============================================================================


class TestTransitionDensity:
    """Test p(t, y | x)"""

    @pytest.mark.parametrize("beta", [0.5, 3.0, 40.0])
    def test_bessel_and_kernel_forms_agree(self, beta):
        """The Bessel form equals the general kernel form"""
        y = np.array([-2.0, -0.5, 0.3, 1.8])
        assert np.allclose(
            tpd_b1(1.5, y, 0.7, beta), tpd_template_b1(1.5, y, 0.7, beta), rtol=1e-9
        )

    def test_origin_start_is_a_limit(self):
        """x0 = 0 agrees with a start very close to the origin"""
        y = np.array([0.5, 1.5, -1.0])
        near = tpd_b1(1.0, y, 1e-7, 3.0)
        assert np.allclose(tpd_b1(1.0, y, 0.0, 3.0), near, rtol=1e-5)

    def test_reflection_symmetry(self):
        """p(t, y | -x) = p(t, -y | x)"""
        y = np.array([-1.2, 0.4, 2.2])
        assert np.allclose(tpd_b1(2.0, y, -0.9, 4.0), tpd_b1(2.0, -y, 0.9, 4.0))

    def test_zero_at_wall(self):
        """The density vanishes at y = 0"""
        assert tpd_b1(1.0, np.array([0.0]), 1.0, 2.0)[0] == 0.0

    def test_non_positive_time_rejected(self):
        """t must be positive"""
        with pytest.raises(Exact1DError, match="t must be positive"):
            tpd_b1(0.0, np.array([1.0]), 1.0, 2.0)

    @pytest.mark.parametrize(
        "t,x0,beta",
        [(2.0, 2.0, 1.0), (2000.0, 2.0, 1.0), (10.0, 2.0, 100.0), (10.0, 2.0, 5000.0)],
    )
    def test_scaled_density_normalized(self, t, x0, beta, grid):
        """f(t, Y) integrates to 1"""
        density = density_grid(t, x0, beta, grid)
        assert density.is_normalized()
        assert np.all(np.isfinite(density.values))

    def test_long_time_limit(self, grid):
        """f(t, Y) tends to the steady state"""
        assert np.allclose(
            scaled_density_1d(1e8, grid, 1.0, 2.0),
            steady_density_1d(2.0, grid),
            atol=1e-3,
        )

    def test_symmetrized_mixture_is_even(self, grid):
        """1/2 [delta_x0 + delta_-x0] gives an even density"""
        values = scaled_density_mixture_1d(5.0, grid, [(2.0, 0.5), (-2.0, 0.5)], 3.0)
        assert np.allclose(values, values[::-1])


# =============================================================================
# EXPECTATION TESTS
# =============================================================================


class TestExpectations:
    """Test quadrature expectations against exact moments"""

    @pytest.mark.parametrize("t,x0,beta", [(10.0, 2.0, 100.0), (1.0, 1.0, 2.0)])
    def test_linear_moment_is_exact(self, t, x0, beta):
        """<1 + Y>_{t, x0} = 1 + x0 / sqrt(beta t)"""
        expected = 1.0 + x0 / np.sqrt(beta * t)
        assert expectation_1d(linear, t, x0, beta) == pytest.approx(expected, abs=1e-7)

    def test_second_moment_is_exact(self):
        """<Y^2>_{t, x0} = x0^2 / (beta t) + (beta + 1) / beta"""
        t, x0, beta = 5.0, 2.0, 4.0
        expected = x0**2 / (beta * t) + (beta + 1.0) / beta
        value = expectation_1d(lambda y: y * y, t, x0, beta)
        assert value == pytest.approx(expected, abs=1e-7)

    def test_steady_second_moment(self):
        """beta Y^2 / 2 is Gamma((beta + 1)/2) distributed"""
        assert steady_expectation_1d(lambda y: y * y, 6.0) == pytest.approx(7.0 / 6.0)

    def test_first_order_exact_for_linear(self):
        """The 1/sqrt(t) correction is exact for 1 + Y"""
        value = first_order_expectation_1d(linear, 10.0, 2.0, 100.0)
        assert value == pytest.approx(1.0 + 2.0 / np.sqrt(1000.0), abs=1e-8)

    def test_first_order_rejects_non_positive_time(self):
        """t must be positive"""
        with pytest.raises(Exact1DError):
            first_order_expectation_1d(linear, 0.0, 1.0, 2.0)

    def test_symmetrized_linear_moment(self):
        """Symmetrizing cancels the drift of <Y>"""
        value = expectation_mixture_1d(linear, 3.0, [(2.0, 0.5), (-2.0, 0.5)], 5.0)
        assert value == pytest.approx(1.0, abs=1e-7)

    def test_bad_mixture_weights(self):
        """Weights must be nonnegative with positive sum"""
        with pytest.raises(Exact1DError):
            expectation_mixture_1d(linear, 3.0, [(2.0, -1.0), (-2.0, 0.5)], 5.0)


# =============================================================================
# STEADY STATE AND MIXTURE TESTS
# =============================================================================


class TestSteadyAndMixture:
    """Test the steady CDF and the finite-time Gaussian mixture"""

    def test_steady_cdf(self):
        """CDF is 1/2 at the origin and matches the integrated density"""
        beta = 3.0
        assert steady_cdf_1d(beta, 0.0) == pytest.approx(0.5)
        grid = np.linspace(-8.0, 1.2, 200001)
        mass = integrate.trapezoid(steady_density_1d(beta, grid), grid)
        assert steady_cdf_1d(beta, 1.2) == pytest.approx(mass, abs=1e-7)

    def test_gtilde_matches_multidimensional_form(self, grid):
        """B_1 mixture equals the exact-shape G~ of the potential module"""
        t, x0, beta = 10.0, 2.0, 100.0
        mixture = gaussian_tilde(build_b(1), beta, t, np.array([x0]), shape="exact")
        assert np.allclose(gaussian_tilde_1d(t, grid, x0, beta), mixture.pdf(grid))

    def test_gtilde_normalized(self, grid):
        """Coefficients 1 +- x0 / sqrt(beta t) keep unit mass"""
        assert density_grid(10.0, 2.0, 100.0, grid, curve="gtilde").is_normalized()

    def test_gtilde_undefined(self, grid):
        """x0^2 >= beta t has no mixture"""
        with pytest.raises(Exact1DError):
            gaussian_tilde_1d(1.0, grid, 2.0, 1.0)


# =============================================================================
# TABULATION TESTS
# =============================================================================


class TestTabulation:
    """Test density grids and CDF tables"""

    def test_density_grid_curves(self, grid):
        """Each curve tabulates the matching function"""
        steady = density_grid(10.0, 2.0, 6.0, grid, curve="steady")
        assert isinstance(steady, Density1D)
        assert np.allclose(steady.values, steady_density_1d(6.0, grid))
        assert steady.label == "steady"
        assert steady.parameters["beta"] == 6.0
        assert np.allclose(steady(grid), steady.values)

    def test_first_order_curve_is_normalized(self, grid):
        """The odd correction carries no mass"""
        assert density_grid(10.0, 2.0, 6.0, grid, curve="first_order").is_normalized()

    def test_unknown_curve(self, grid):
        """Curves outside the enum are rejected"""
        with pytest.raises(ValueError):
            density_grid(10.0, 2.0, 6.0, grid, curve="cubic")

    def test_cdf_table(self):
        """Nondecreasing from 0 to 1"""
        nodes, cdf = cdf_table_1d(10.0, 2.0, 100.0, 4001)
        assert cdf[0] == 0.0
        assert cdf[-1] == pytest.approx(1.0)
        assert np.all(np.diff(cdf) >= 0.0)
        assert nodes.shape == cdf.shape
