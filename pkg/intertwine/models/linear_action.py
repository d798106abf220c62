"""
Linear Action Model

The intertwining operator restricted to linear functions x -> x . y.
"""

from dataclasses import dataclass
from typing import Any, Dict

import numpy as np

from rootsys import RootSystem


@dataclass(frozen=True, eq=False)
class LinearAction:
    """
    V_beta acting on linear functions.

    On Span(R) the action is multiplication by parallel_factor; on the
    complement it is the identity.
    """

    root_system: RootSystem
    beta: float

    @property
    def parallel_factor(self) -> float:
        """1 / (1 + beta gamma / d_R), in (0, 1)"""
        return 1.0 / (1.0 + self.beta * self.root_system.gamma / self.root_system.rank)

    def matrix(self) -> np.ndarray:
        """M_beta in closed form: parallel_factor on Span(R), identity on the perp"""
        span = self.root_system.span_basis.T @ self.root_system.span_basis
        perp = self.root_system.perp_basis.T @ self.root_system.perp_basis
        return self.parallel_factor * span + perp

    def apply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """V_beta[x . y] = x_par . y_par * parallel_factor + x_perp . y_perp"""
        system = self.root_system
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        parallel = np.sum(system.parallel(x) * system.parallel(y), axis=-1)
        x_perp, y_perp = system.perpendicular(x), system.perpendicular(y)
        perpendicular = np.sum(x_perp * y_perp, axis=-1)
        return self.parallel_factor * parallel + perpendicular

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output"""
        return {
            "root_system": self.root_system.name,
            "beta": self.beta,
            "parallel_factor": self.parallel_factor,
        }

    def __repr__(self) -> str:
        """Human-readable representation"""
        return (
            f"LinearAction(system='{self.root_system.name}', beta={self.beta:g}, "
            f"parallel_factor={self.parallel_factor:.6g})"
        )
