"""
Intertwining Operator Integration Tests

Tests cover:
1. M_beta: closed form against the direct inverse
2. V_beta on linear functions and the intertwining relation T_i V = V d_i
3. Exact B_1 kernel: E(0) = 1, Bessel form, bounds, eigenfunction property
4. Large-beta kernel approximation against the exact B_1 kernel
5. Rank-deficient limit
"""

import numpy as np
import pytest
from scipy import special

from config.settings import KERNEL_SERIES_RADIUS
from exact1d import Exact1DError
from intertwine import (
    LinearAction,
    dunkl_operator,
    dunkl_operator_b1,
    kernel_bounds_check,
    kernel_even_coefficient_b1,
    kernel_exact_b1,
    kernel_large_beta,
    kernel_odd_coefficient_b1,
    kernel_rank_deficient_limit,
    log_kernel_exact_b1,
    m_beta_closed_form,
    m_beta_direct,
    m_beta_matrix,
    v_beta_linear,
)
from rootsys import build_a, build_b, build_custom, build_dihedral

# =============================================================================
# TEST FIXTURES
# =============================================================================


@pytest.fixture
def a2():
    """A_2 on three particles (one perp direction)"""
    return build_a(3)


@pytest.fixture
def b1():
    """B_1"""
    return build_b(1)


# =============================================================================
# LINEAR ACTION TESTS
# =============================================================================


class TestLinearAction:
    """Test V_beta on linear functions"""

    @pytest.mark.parametrize(
        "system",
        [build_a(3), build_a(5), build_b(3, 2.0), build_dihedral(6, 1.0, 2.0)],
        ids=["A_2", "A_4", "B_3", "I_2(6)"],
    )
    @pytest.mark.parametrize("beta", [0.1, 1.0, 25.0])
    def test_closed_form_matches_direct(self, system, beta):
        """Schur identity gives the same M_beta as inversion"""
        assert np.allclose(
            m_beta_closed_form(system, beta), m_beta_direct(system, beta), atol=1e-12
        )

    def test_parallel_factor(self, a2):
        """1 / (1 + beta gamma / d_R) with gamma = 3, d_R = 2"""
        action = LinearAction(a2, 4.0)
        assert action.parallel_factor == pytest.approx(1.0 / 7.0)
        assert action.to_dict()["root_system"] == "A_2"

    def test_perp_directions_untouched(self, a2):
        """V_beta acts as the identity on the center of mass"""
        ones = np.ones(3)
        assert v_beta_linear(a2, 10.0, ones, ones) == pytest.approx(3.0)

    def test_matches_matrix_form(self, a2):
        """V_beta[x . y] = x . M_beta y"""
        x = np.array([0.4, -1.1, 2.0])
        y = np.array([1.5, 0.3, -0.2])
        expected = x @ m_beta_matrix(a2, 2.5) @ y
        assert v_beta_linear(a2, 2.5, x, y) == pytest.approx(expected)

    def test_reducible_system_falls_back_to_direct(self):
        """A_1 x A_1 with kappa ratios 1 and 3 has no scalar Schur sum"""
        roots = [[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]]
        system = build_custom(roots, kappa=[1.0, 1.0, 3.0, 3.0])
        assert np.allclose(m_beta_matrix(system, 2.0), np.diag([1.0 / 3.0, 1.0 / 7.0]))
        x, y = np.array([1.0, 1.0]), np.array([1.0, 1.0])
        assert v_beta_linear(system, 2.0, x, y) == pytest.approx(1.0 / 3.0 + 1.0 / 7.0)

    @pytest.mark.parametrize("index", [0, 1, 2])
    def test_intertwining_relation(self, a2, index):
        """T_i applied to V_beta[x . y] returns y_i"""
        beta = 3.0
        y = np.array([0.7, -0.2, 1.3])
        matrix = m_beta_matrix(a2, beta)

        def f(x):
            return float(x @ matrix @ y)

        x = np.array([1.1, 0.35, -0.8])
        value = dunkl_operator(a2, f, x, index, beta)
        assert value == pytest.approx(y[index], abs=1e-7)


# =============================================================================
# EXACT B_1 KERNEL TESTS
# =============================================================================


class TestExactKernel:
    """Test the exact B_1 kernel"""

    @pytest.mark.parametrize("beta", [0.5, 2.0, 40.0])
    def test_unit_at_origin(self, beta):
        """E(0) = 1"""
        assert kernel_exact_b1(beta, 0.0) == pytest.approx(1.0)

    def test_bessel_form_at_beta_one(self):
        """nu = 0: E(z) = I_0(|z|) + sgn(z) I_1(|z|)"""
        for z in (-2.5, 0.3, 4.0):
            expected = special.iv(0, abs(z)) + np.sign(z) * special.iv(1, abs(z))
            assert kernel_exact_b1(1.0, z) == pytest.approx(expected, rel=1e-10)

    def test_series_and_bessel_branches_agree(self):
        """No jump at the series radius"""
        below = kernel_exact_b1(3.0, KERNEL_SERIES_RADIUS * (1.0 - 1e-9))
        above = kernel_exact_b1(3.0, KERNEL_SERIES_RADIUS * (1.0 + 1e-9))
        assert below == pytest.approx(above, rel=1e-7)

    def test_taylor_coefficients(self):
        """Leading terms 1 + z / (beta + 1) + ..."""
        assert kernel_even_coefficient_b1(4.0, 0) == pytest.approx(1.0)
        assert kernel_odd_coefficient_b1(4.0, 0) == pytest.approx(1.0 / 5.0)

    @pytest.mark.parametrize("beta", [0.5, 3.0, 200.0, 5000.0])
    def test_bounds(self, b1, beta):
        """e^{-|z|} <= E(z) <= e^{|z|}"""
        for z in (-30.0, -1.0, 0.2, 7.5, 60.0):
            value = float(kernel_exact_b1(beta, z))
            assert kernel_bounds_check(b1, beta, z, 1.0, value)

    def test_large_arguments_stay_finite(self):
        """log-space evaluation for beta in the thousands"""
        values = log_kernel_exact_b1(3000.0, np.array([-5000.0, 5000.0]))
        assert np.all(np.isfinite(values))

    def test_negative_beta_rejected(self):
        """beta must be positive"""
        with pytest.raises(Exact1DError):
            kernel_exact_b1(-1.0, 1.0)

    @pytest.mark.parametrize("beta", [1.0, 6.0])
    def test_dunkl_eigenfunction(self, beta):
        """T_x E(x y) = y E(x y)"""
        y = 0.8

        def kernel(x):
            return float(kernel_exact_b1(beta, x * y))

        for x in (-1.7, 0.6, 2.4):
            assert dunkl_operator_b1(kernel, x, beta) == pytest.approx(
                y * kernel(x), rel=1e-6
            )


# =============================================================================
# APPROXIMATION TESTS
# =============================================================================


class TestKernelApproximations:
    """Test the large-beta form and the beta -> infinity limit"""

    def test_large_beta_matches_exact_b1(self, b1):
        """(1 + x y / sqrt(beta)) exp(x^2 y^2 / 2) at beta = 1e4"""
        beta, x, y = 1e4, 1.0, 0.5
        exact = kernel_exact_b1(beta, np.sqrt(beta) * x * y)
        approx = kernel_large_beta(b1, beta, np.array([x]), np.array([y]))
        assert float(approx) == pytest.approx(float(exact), rel=1e-2)

    def test_large_beta_perp_factor(self, a2):
        """Center-of-mass directions contribute exp(sqrt(beta) x_perp . y_perp)"""
        beta = 400.0
        ones = np.ones(3) / np.sqrt(3.0)
        value = kernel_large_beta(a2, beta, 0.1 * ones, 0.2 * ones)
        assert float(value) == pytest.approx(np.exp(np.sqrt(beta) * 0.02))

    def test_rank_deficient_limit(self, a2):
        """exp(x_perp . y_perp); parallel parts drop out"""
        x = np.array([1.0, 2.0, 3.0])
        y = np.array([0.5, 0.5, 0.5])
        value = kernel_rank_deficient_limit(a2, x, y)
        assert float(value) == pytest.approx(np.exp(3.0))
        assert float(kernel_rank_deficient_limit(build_b(2), x[:2], y[:2])) == 1.0
