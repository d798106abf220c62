"""
Root System Model

Immutable data class describing a reduced root system together with its
multiplicity function, positive subsystem and the orthogonal split of the
ambient space into Span(R) and its complement.
"""

from dataclasses import dataclass, replace
from typing import Any, Dict, Optional

import numpy as np

from rootsys.constants import ROOT_DEDUP_TOLERANCE, RootFamily
from rootsys.utils.linalg_utils import as_vector, find_row, project


class RootSystemError(Exception):
    """
    Exception raised when a root system cannot be built or used.

    Examples:
    - Zero root in the input list
    - Root list not closed under its own reflections
    - Multiplicities not invariant under the Weyl group
    """


class DegenerateRootError(RootSystemError):
    """Zero root, or roots of mismatched dimension"""


class ClosureError(RootSystemError):
    """sigma_alpha R is not equal to R for some root alpha"""


class NotReducedError(RootSystemError):
    """Two roots are parallel with a ratio other than +-1"""


class MultiplicityError(RootSystemError):
    """Multiplicity function is not positive, not invariant, or not normalized"""


class GroupTooLargeError(RootSystemError):
    """Weyl group closure exceeded the configured element cap"""


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=np.float64)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class RootSystem:
    """
    A validated reduced root system with renormalized multiplicities.

    Arrays are stored read-only, so instances can be shared freely between
    threads. Build instances through rootsys.builders (build_a, build_b,
    build_dihedral, build_custom) rather than directly.
    """

    ambient_dim: int  # N
    roots: np.ndarray  # Full set R, one root per row
    kappa: np.ndarray  # kappa(alpha) aligned with `roots`
    positive_roots: np.ndarray  # R_+, one root per row
    positive_kappa: np.ndarray  # kappa(alpha) aligned with `positive_roots`
    choice_vector: np.ndarray  # m with m . alpha > 0 on R_+
    span_basis: np.ndarray  # Orthonormal rows spanning Span(R)
    perp_basis: np.ndarray  # Orthonormal rows spanning Span(R)^perp
    family: RootFamily = RootFamily.CUSTOM
    name: str = "custom"
    beta_scale: float = 1.0  # Factor absorbed into beta by kappa normalization

    def __post_init__(self):
        """Store every array as a read-only float64 copy"""
        for attr in (
            "roots",
            "kappa",
            "positive_roots",
            "positive_kappa",
            "choice_vector",
            "span_basis",
            "perp_basis",
        ):
            object.__setattr__(self, attr, _frozen(getattr(self, attr)))

    def effective_beta(self, beta: float) -> float:
        """
        Coupling for the stored multiplicities.

        beta kappa is what enters the dynamics, so a coupling given for the
        multiplicities before normalization is multiplied by beta_scale.
        """
        return float(beta) * self.beta_scale

    @property
    def rank(self) -> int:
        """d_R, the dimension of Span(R)"""
        return int(self.span_basis.shape[0])

    @property
    def gamma(self) -> float:
        """gamma = sum of kappa over R_+"""
        return float(self.positive_kappa.sum())

    @property
    def n_positive(self) -> int:
        """Number of positive roots"""
        return int(self.positive_roots.shape[0])

    @property
    def is_full_rank(self) -> bool:
        """True when d_R equals the ambient dimension"""
        return self.rank == self.ambient_dim

    def kappa_of(
        self,
        alpha: np.ndarray,
        tolerance: float = ROOT_DEDUP_TOLERANCE,
    ) -> float:
        """
        Multiplicity of a root.

        Raises:
            RootSystemError: If alpha is not a root of this system
        """
        index = find_row(as_vector(alpha), self.roots, tolerance)
        if index < 0:
            raise RootSystemError(
                f"Vector {list(alpha)} is not a root of {self.name}",
            )
        return float(self.kappa[index])

    def parallel(self, x: np.ndarray) -> np.ndarray:
        """Component of x (or of each row of x) in Span(R)"""
        return project(x, self.span_basis)

    def perpendicular(self, x: np.ndarray) -> np.ndarray:
        """Component of x (or of each row of x) orthogonal to Span(R)"""
        return project(x, self.perp_basis)

    def in_span(self, x: np.ndarray, tolerance: float = 1e-9) -> bool:
        """True when x lies in Span(R) up to `tolerance`"""
        return bool(np.linalg.norm(self.perpendicular(as_vector(x))) <= tolerance)

    def root_products(self, x: np.ndarray) -> np.ndarray:
        """alpha . x for every positive root (rows of x give a 2-d result)"""
        return np.asarray(x, dtype=np.float64) @ self.positive_roots.T

    def to_dict(self) -> Dict[str, Any]:
        """Convert to the JSON document layout used by rootsys files"""
        return {
            "ambient_dim": self.ambient_dim,
            "roots": self.roots.tolist(),
            "kappa": self.kappa.tolist(),
            "positive_choice_vector": self.choice_vector.tolist(),
            "family": self.family.value,
            "name": self.name,
            "beta_scale": self.beta_scale,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RootSystem":
        """Rebuild (and re-validate) a root system from its JSON document"""
        from rootsys.builders import build_custom

        system = build_custom(
            roots=data["roots"],
            kappa=data.get("kappa", 1.0),
            positive_choice=data.get("positive_choice_vector"),
            family=RootFamily(data.get("family", "custom")),
            name=data.get("name", "custom"),
            ambient_dim=data.get("ambient_dim"),
        )
        # Factors already absorbed before saving compose with any new one
        scale = float(data.get("beta_scale", 1.0)) * system.beta_scale
        return replace(system, beta_scale=scale)

    def summary(self, group_size: Optional[int] = None) -> Dict[str, Any]:
        """Short description for logs and CLI output"""
        info: Dict[str, Any] = {
            "name": self.name,
            "family": self.family.value,
            "ambient_dim": self.ambient_dim,
            "rank": self.rank,
            "gamma": self.gamma,
            "n_roots": int(self.roots.shape[0]),
            "n_positive": self.n_positive,
            "beta_scale": self.beta_scale,
        }
        if group_size is not None:
            info["weyl_group_size"] = group_size
        return info

    def __repr__(self) -> str:
        """Human-readable representation"""
        return (
            f"RootSystem(name='{self.name}', N={self.ambient_dim}, "
            f"rank={self.rank}, gamma={self.gamma:g}, "
            f"|R+|={self.n_positive})"
        )
