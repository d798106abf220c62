"""
Polynomial Operators

The reflection-average operator

    A p = (1/gamma) sum_{alpha in R_+} kappa(alpha) sigma_alpha p

and the group-average projector

    B p = (1/|W|) sum_{rho in W} rho p

together with their matrices on monomial bases. A has spectrum in [-1, 1]
and its eigenvalue-1 eigenspace is exactly the W-invariant subspace, which
is the image of B; spectral_check() measures both facts numerically.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple, Union

import numpy as np
from scipy import linalg

from rootsys.models.polynomial import Exponent, MultivariatePolynomial, monomial_basis
from rootsys.models.root_system import RootSystem
from rootsys.models.weyl_group import WeylGroup
from rootsys.utils.linalg_utils import reflection_matrix

logger = logging.getLogger(__name__)


def reflection_average(
    system: RootSystem, p: MultivariatePolynomial
) -> MultivariatePolynomial:
    """A p = (1/gamma) sum kappa(alpha) p(sigma_alpha x); degree preserved"""
    total = MultivariatePolynomial(p.n_vars, {})
    for alpha, kappa in zip(system.positive_roots, system.positive_kappa):
        if kappa == 0.0:
            continue
        total = total + p.substitute(reflection_matrix(alpha)).scaled(kappa)
    return total.scaled(1.0 / system.gamma)


def group_average(
    group: WeylGroup, p: MultivariatePolynomial
) -> MultivariatePolynomial:
    """B p = (1/|W|) sum p(rho x); idempotent"""
    total = MultivariatePolynomial(p.n_vars, {})
    for rho in group.elements:
        total = total + p.substitute(rho)
    return total.scaled(1.0 / group.size)


def is_w_invariant(
    system: RootSystem,
    p: MultivariatePolynomial,
    tolerance: float = 1e-12,
) -> bool:
    """
    True when p(sigma_alpha x) = p(x) for every positive root.

    Root reflections generate W, so checking them suffices.
    """
    for alpha in system.positive_roots:
        if not (p.substitute(reflection_matrix(alpha)) - p).is_zero(tolerance):
            return False
    return True


def operator_matrix(
    source: Union[RootSystem, WeylGroup],
    degree: int,
) -> Tuple[np.ndarray, List[Exponent]]:
    """
    Matrix of A (for a RootSystem) or B (for a WeylGroup) on monomials.

    Column k holds the coefficients of the operator applied to basis[k].

    Args:
        source: RootSystem for the reflection average, WeylGroup for the
                group average
        degree: Maximum total degree of the monomial basis

    Returns:
        Tuple of (square matrix, monomial basis)
    """
    n_vars = source.ambient_dim if isinstance(source, RootSystem) else source.dimension
    basis = monomial_basis(n_vars, degree)

    columns = []
    for exponent in basis:
        p = MultivariatePolynomial.monomial(exponent)
        if isinstance(source, RootSystem):
            image = reflection_average(source, p)
        else:
            image = group_average(source, p)
        columns.append(image.coefficient_vector(basis))

    return np.column_stack(columns), basis


@dataclass
class SpectralReport:
    """Result of comparing the spectrum of A with the image of B"""

    system_name: str
    degree: int
    eigenvalues: np.ndarray  # Real parts of the eigenvalues of A
    invariant_dimension: int  # dim of the eigenvalue-1 eigenspace of A
    image_dimension: int  # rank of B
    subspace_distance: float  # ||P_A - P_B||_2 between the two projectors

    @property
    def max_abs_eigenvalue(self) -> float:
        """Largest |lambda|"""
        return float(np.abs(self.eigenvalues).max())

    def passed(self, tolerance: float = 1e-9) -> bool:
        """Spectrum in [-1, 1] and eigenvalue-1 space equal to image(B)"""
        return (
            self.max_abs_eigenvalue <= 1.0 + tolerance
            and self.invariant_dimension == self.image_dimension
            and self.subspace_distance <= tolerance
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output"""
        return {
            "system_name": self.system_name,
            "degree": self.degree,
            "eigenvalues": self.eigenvalues.tolist(),
            "max_abs_eigenvalue": self.max_abs_eigenvalue,
            "invariant_dimension": self.invariant_dimension,
            "image_dimension": self.image_dimension,
            "subspace_distance": self.subspace_distance,
        }


def _projector(basis_columns: np.ndarray) -> np.ndarray:
    """Orthogonal projector onto the column span"""
    return basis_columns @ basis_columns.T


def spectral_check(
    system: RootSystem,
    group: WeylGroup,
    max_degree: int = 3,
    rcond: float = 1e-9,
) -> SpectralReport:
    """
    Compare the eigenvalue-1 eigenspace of A with the image of B.

    Args:
        system: Root system defining A
        group: Its Weyl group, defining B
        max_degree: Monomials of degree <= max_degree span the test space
        rcond: Relative singular value cutoff for null spaces and ranks

    Returns:
        SpectralReport
    """
    a_matrix, _ = operator_matrix(system, max_degree)
    b_matrix, _ = operator_matrix(group, max_degree)

    eigenvalues = np.linalg.eigvals(a_matrix)
    fixed = linalg.null_space(a_matrix - np.eye(a_matrix.shape[0]), rcond=rcond)
    image = linalg.orth(b_matrix, rcond=rcond)

    if fixed.shape[1] == image.shape[1]:
        distance = float(np.linalg.norm(_projector(fixed) - _projector(image), 2))
    else:
        distance = float("inf")

    report = SpectralReport(
        system_name=system.name,
        degree=max_degree,
        eigenvalues=np.sort(eigenvalues.real),
        invariant_dimension=int(fixed.shape[1]),
        image_dimension=int(image.shape[1]),
        subspace_distance=distance,
    )
    logger.info(
        f"Spectral check {system.name} (degree <= {max_degree}): "
        f"max|lambda|={report.max_abs_eigenvalue:.12f}, "
        f"dim fixed={report.invariant_dimension}, rank B={report.image_dimension}, "
        f"distance={distance:.2e}"
    )
    return report
