"""
Multivariate Polynomial Model

Sparse polynomials in N variables, stored as {exponent tuple: coefficient}.
Linear substitutions x -> M x are expanded exactly with sympy, which is how
reflections and Weyl group elements act on polynomials.
"""

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Any, Dict, List, Tuple

import numpy as np
import sympy as sp

Exponent = Tuple[int, ...]

# Coefficients below this magnitude are dropped after substitution
COEFFICIENT_FLOOR = 1e-14


def monomial_basis(n_vars: int, degree: int) -> List[Exponent]:
    """
    Exponents of all monomials of total degree <= `degree`.

    Ordered by degree, then lexicographically within a degree.
    """
    basis: List[Exponent] = []
    for d in range(degree + 1):
        for combo in combinations_with_replacement(range(n_vars), d):
            exponent = [0] * n_vars
            for var in combo:
                exponent[var] += 1
            basis.append(tuple(exponent))
    return sorted(set(basis), key=lambda e: (sum(e), tuple(-k for k in e)))


@dataclass(frozen=True)
class MultivariatePolynomial:
    """Polynomial with real coefficients in `n_vars` variables"""

    n_vars: int
    terms: Dict[Exponent, float] = field(default_factory=dict)

    @classmethod
    def monomial(
        cls, exponent: Exponent, coefficient: float = 1.0
    ) -> "MultivariatePolynomial":
        """Single term c x^exponent"""
        return cls(n_vars=len(exponent), terms={tuple(exponent): float(coefficient)})

    @classmethod
    def from_coefficients(
        cls,
        coefficients: np.ndarray,
        basis: List[Exponent],
    ) -> "MultivariatePolynomial":
        """Inverse of coefficient_vector()"""
        terms = {
            exponent: float(c)
            for exponent, c in zip(basis, coefficients)
            if abs(c) > COEFFICIENT_FLOOR
        }
        return cls(n_vars=len(basis[0]), terms=terms)

    @property
    def degree(self) -> int:
        """Total degree (0 for the zero polynomial)"""
        return max((sum(e) for e in self.terms), default=0)

    def is_zero(self, tolerance: float = COEFFICIENT_FLOOR) -> bool:
        """True when every coefficient is below `tolerance`"""
        return all(abs(c) <= tolerance for c in self.terms.values())

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        """Evaluate at a point, or at every row of a 2-d array"""
        x = np.asarray(x, dtype=np.float64)
        total = np.zeros(x.shape[:-1])
        for exponent, c in self.terms.items():
            total = total + c * np.prod(x ** np.asarray(exponent), axis=-1)
        return total

    def coefficient_vector(self, basis: List[Exponent]) -> np.ndarray:
        """Coefficients in the order of `basis`"""
        return np.array([self.terms.get(e, 0.0) for e in basis])

    def scaled(self, factor: float) -> "MultivariatePolynomial":
        """factor * p"""
        return MultivariatePolynomial(
            self.n_vars, {e: factor * c for e, c in self.terms.items()}
        )

    def __add__(self, other: "MultivariatePolynomial") -> "MultivariatePolynomial":
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0.0) + c
        return MultivariatePolynomial(self.n_vars, terms)

    def __sub__(self, other: "MultivariatePolynomial") -> "MultivariatePolynomial":
        return self + other.scaled(-1.0)

    def to_sympy(self) -> Tuple[sp.Expr, List[sp.Symbol]]:
        """Expression and generator symbols x_0 .. x_{N-1}"""
        symbols = list(sp.symbols(f"x0:{self.n_vars}"))
        expr = sp.Integer(0)
        for exponent, c in self.terms.items():
            monomial = sp.Mul(*[s**k for s, k in zip(symbols, exponent)])
            expr += sp.Float(c) * monomial
        return expr, symbols

    def substitute(self, matrix: np.ndarray) -> "MultivariatePolynomial":
        """
        The polynomial x -> p(M x).

        The degree is preserved for invertible M.
        """
        matrix = np.asarray(matrix, dtype=np.float64)
        expr, symbols = self.to_sympy()
        images = {
            s: sum(sp.Float(matrix[i, j]) * symbols[j] for j in range(self.n_vars))
            for i, s in enumerate(symbols)
        }
        expanded = sp.expand(expr.xreplace(images))
        if expanded == 0:
            return MultivariatePolynomial(self.n_vars, {})

        poly = sp.Poly(expanded, *symbols)
        terms = {
            tuple(int(k) for k in exponent): float(c)
            for exponent, c in poly.terms()
            if abs(float(c)) > COEFFICIENT_FLOOR
        }
        return MultivariatePolynomial(self.n_vars, terms)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary (exponents joined as strings)"""
        return {
            "n_vars": self.n_vars,
            "terms": {",".join(map(str, e)): c for e, c in self.terms.items()},
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MultivariatePolynomial":
        """Create from dictionary"""
        terms = {
            tuple(int(k) for k in key.split(",")): float(c)
            for key, c in data["terms"].items()
        }
        return cls(n_vars=int(data["n_vars"]), terms=terms)

    def __repr__(self) -> str:
        """Human-readable representation"""
        return (
            f"MultivariatePolynomial(n_vars={self.n_vars}, degree={self.degree}, "
            f"terms={len(self.terms)})"
        )
