"""
Root System Module

Reduced root systems, multiplicity functions, Weyl groups, and the action
of reflections on vectors and polynomials.

Layout:
- builders.py: reflect, build_a / build_b / build_dihedral / build_custom
- groups.py: Weyl group closure and point orbits
- operators.py: reflection average A, group average B, spectral check
- factory.py: spec string -> RootSystem
- models/: RootSystem, WeylGroup, MultivariatePolynomial
- utils/: linear algebra, JSON serialization, file validation
"""

# ============================================================================
# rootsys/__init__.py - Main Package Exports
# ============================================================================

from rootsys.builders import (
    build_a,
    build_b,
    build_custom,
    build_dihedral,
    normalize_kappa,
    positive_subsystem,
    reflect,
    root_orbits,
    schur_is_scalar,
    schur_residual,
    schur_sum,
    validate,
)
from rootsys.constants import KappaNormalization, RootFamily, ValidationStatus
from rootsys.factory import RootSystemFactory, create_root_system
from rootsys.groups import orbit_points, weyl_group
from rootsys.models.polynomial import MultivariatePolynomial, monomial_basis
from rootsys.models.root_system import (
    ClosureError,
    DegenerateRootError,
    GroupTooLargeError,
    MultiplicityError,
    NotReducedError,
    RootSystem,
    RootSystemError,
)
from rootsys.models.weyl_group import WeylGroup
from rootsys.operators import (
    SpectralReport,
    group_average,
    is_w_invariant,
    operator_matrix,
    reflection_average,
    spectral_check,
)
from rootsys.utils.serialization import (
    from_json,
    load_root_system,
    save_root_system,
    to_json,
)
from rootsys.utils.validation_utils import validate_root_system_file

# Public API (sorted alphabetically)
__all__ = [
    "ClosureError",
    "DegenerateRootError",
    "GroupTooLargeError",
    "KappaNormalization",
    "MultiplicityError",
    "MultivariatePolynomial",
    "NotReducedError",
    "RootFamily",
    "RootSystem",
    "RootSystemError",
    "RootSystemFactory",
    "SpectralReport",
    "ValidationStatus",
    "WeylGroup",
    "build_a",
    "build_b",
    "build_custom",
    "build_dihedral",
    "create_root_system",
    "from_json",
    "group_average",
    "is_w_invariant",
    "load_root_system",
    "monomial_basis",
    "normalize_kappa",
    "operator_matrix",
    "orbit_points",
    "positive_subsystem",
    "reflect",
    "reflection_average",
    "root_orbits",
    "save_root_system",
    "schur_is_scalar",
    "schur_residual",
    "schur_sum",
    "spectral_check",
    "to_json",
    "validate",
    "validate_root_system_file",
    "weyl_group",
]
