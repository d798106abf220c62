"""
Intertwining Operator Package

The computable special cases of the intertwining operator V_beta: its action
on linear functions, numerical Dunkl operators, large-beta kernel
approximations, the rank-deficient limit and the exact B_1 kernel.

Usage:
    from intertwine import kernel_exact_b1, v_beta_linear
    from rootsys import build_b

    b1 = build_b(1)
    v_beta_linear(b1, 2.0, [1.0], [3.0])  # 1.0
    kernel_exact_b1(2.0, 0.0)             # 1.0
"""

# ============================================================================
# intertwine/__init__.py - Main Package Exports
# ============================================================================

from intertwine.kernels import (
    kernel_bounds_check,
    kernel_even_coefficient_b1,
    kernel_exact_b1,
    kernel_large_beta,
    kernel_odd_coefficient_b1,
    kernel_rank_deficient_limit,
    log_kernel_exact_b1,
)
from intertwine.linear import (
    dunkl_operator,
    dunkl_operator_b1,
    m_beta_closed_form,
    m_beta_direct,
    m_beta_matrix,
    v_beta_linear,
)
from intertwine.models.linear_action import LinearAction

# Public API (sorted alphabetically)
__all__ = [
    "LinearAction",
    "dunkl_operator",
    "dunkl_operator_b1",
    "kernel_bounds_check",
    "kernel_even_coefficient_b1",
    "kernel_exact_b1",
    "kernel_large_beta",
    "kernel_odd_coefficient_b1",
    "kernel_rank_deficient_limit",
    "log_kernel_exact_b1",
    "m_beta_closed_form",
    "m_beta_direct",
    "m_beta_matrix",
    "v_beta_linear",
]
