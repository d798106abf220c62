"""
Root System Enums

Type definitions for the rootsys module.
Numeric tolerances live in config/settings.py following the
"ALL config in config/settings.py" principle; this module re-exports the
ones the package needs so callers have one import site.
"""

from enum import Enum

from config.settings import (
    KAPPA_NORMALIZATION,
    KAPPA_TOLERANCE,
    POSITIVE_CHOICE_MAX_TRIES,
    POSITIVE_CHOICE_MIN_DOT,
    POSITIVE_CHOICE_SEED,
    ROOT_CLOSURE_TOLERANCE,
    ROOT_DEDUP_TOLERANCE,
    WEYL_GROUP_CAP,
    WEYL_HASH_DECIMALS,
    WEYL_MATRIX_TOLERANCE,
)

# =============================================================================
# ENUMS
# =============================================================================


class RootFamily(Enum):
    """Where a root system came from"""

    A = "a"  # A_{N-1}: e_i - e_j, Dyson-type
    B = "b"  # B_N: +-e_i +- e_j, +-e_i, Wishart-Laguerre-type
    DIHEDRAL = "dihedral"  # I_2(m) in the plane
    CUSTOM = "custom"  # User-supplied root list


class KappaNormalization(Enum):
    """Which multiplicity orbit is rescaled to kappa = 1"""

    LONGEST = "longest"  # Orbit of the longest roots (B_N convention)
    SHORTEST = "shortest"  # Orbit of the shortest roots
    NONE = "none"  # Reject kappa maps without a unit value


class ValidationStatus(Enum):
    """Root system validation results"""

    VALID = "valid"  # Reduced, closed, W-invariant multiplicities
    DEGENERATE = "degenerate"  # Zero root or mismatched dimensions
    NOT_CLOSED = "not_closed"  # sigma_alpha R != R for some alpha
    NOT_REDUCED = "not_reduced"  # a xi = alpha with a != +-1
    KAPPA_INVALID = "kappa_invalid"  # kappa not W-invariant or not positive
    MALFORMED = "malformed"  # File could not be parsed


__all__ = [
    "KAPPA_NORMALIZATION",
    "KAPPA_TOLERANCE",
    "POSITIVE_CHOICE_MAX_TRIES",
    "POSITIVE_CHOICE_MIN_DOT",
    "POSITIVE_CHOICE_SEED",
    "ROOT_CLOSURE_TOLERANCE",
    "ROOT_DEDUP_TOLERANCE",
    "WEYL_GROUP_CAP",
    "WEYL_HASH_DECIMALS",
    "WEYL_MATRIX_TOLERANCE",
    "KappaNormalization",
    "RootFamily",
    "ValidationStatus",
]
