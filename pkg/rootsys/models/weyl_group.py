"""
Weyl Group Model

Finite reflection group stored as a stack of orthogonal matrices.
"""

from dataclasses import dataclass
from typing import Any, Dict

import numpy as np

from rootsys.constants import WEYL_MATRIX_TOLERANCE


@dataclass(frozen=True, eq=False)
class WeylGroup:
    """
    The group generated by the root reflections of a RootSystem.

    elements[0] is always the identity.
    """

    elements: np.ndarray  # (|W|, N, N) orthogonal matrices
    system_name: str = "custom"

    def __post_init__(self):
        """Store the elements as a read-only float64 array"""
        elements = np.array(self.elements, dtype=np.float64)
        elements.setflags(write=False)
        object.__setattr__(self, "elements", elements)

    @property
    def size(self) -> int:
        """|W|"""
        return int(self.elements.shape[0])

    @property
    def dimension(self) -> int:
        """Ambient dimension N"""
        return int(self.elements.shape[1])

    def index_of(
        self, matrix: np.ndarray, tolerance: float = WEYL_MATRIX_TOLERANCE
    ) -> int:
        """Index of `matrix` in the group, or -1"""
        distances = np.abs(self.elements - matrix[None, :, :]).max(axis=(1, 2))
        index = int(np.argmin(distances))
        return index if distances[index] < tolerance else -1

    def contains(
        self, matrix: np.ndarray, tolerance: float = WEYL_MATRIX_TOLERANCE
    ) -> bool:
        """True when `matrix` is a group element"""
        return self.index_of(np.asarray(matrix, dtype=np.float64), tolerance) >= 0

    def act(self, x: np.ndarray) -> np.ndarray:
        """Images rho x for every element, shape (|W|, N)"""
        return self.elements @ np.asarray(x, dtype=np.float64)

    def is_closed(self, tolerance: float = WEYL_MATRIX_TOLERANCE) -> bool:
        """Check closure under products and inverses (O(|W|^2), small groups only)"""
        for g in self.elements:
            if not self.contains(g.T, tolerance):
                return False
            for h in self.elements:
                if not self.contains(g @ h, tolerance):
                    return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output"""
        return {
            "system_name": self.system_name,
            "size": self.size,
            "elements": self.elements.tolist(),
        }

    def __repr__(self) -> str:
        """Human-readable representation"""
        return f"WeylGroup(system='{self.system_name}', size={self.size})"
