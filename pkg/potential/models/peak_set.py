"""
Peak Set Model

The |W| minima of F_R, all on the sphere |s|^2 = gamma and related to each
other by Weyl group elements.
"""

from dataclasses import dataclass
from typing import Any, Dict

import numpy as np


@dataclass
class PeakSet:
    """
    Minima of the free energy with their curvature.

    hessians are full N x N matrices (perp directions carry curvature 1);
    eigenvalues are restricted to Span(R) and sorted ascending.
    """

    points: np.ndarray  # (|W|, N) peak points s_i, first one in the positive chamber
    hessians: np.ndarray  # (|W|, N, N) H(s_i)
    eigenvalues: np.ndarray  # (|W|, d_R) spectra of H(s_i) on Span(R)
    f_value: float  # Common minimum value of F_R
    residuals: np.ndarray  # (|W|,) gradient norms
    gamma: float  # Sum of kappa over R_+
    system_name: str = "custom"
    iterations: int = 0  # Newton iterations used for the first point

    @property
    def size(self) -> int:
        """Number of peak points"""
        return int(self.points.shape[0])

    @property
    def ambient_dim(self) -> int:
        """N"""
        return int(self.points.shape[1])

    @property
    def spectrum(self) -> np.ndarray:
        """Eigenvalues at the first peak (identical across the orbit)"""
        return self.eigenvalues[0]

    @property
    def min_eigenvalue(self) -> float:
        """Smallest Hessian eigenvalue over all points"""
        return float(self.eigenvalues.min())

    @property
    def max_residual(self) -> float:
        """Largest gradient norm over all points"""
        return float(self.residuals.max())

    @property
    def norm_errors(self) -> np.ndarray:
        """| |s_i|^2 - gamma | per point"""
        return np.abs(np.sum(self.points**2, axis=1) - self.gamma)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output"""
        return {
            "system_name": self.system_name,
            "gamma": self.gamma,
            "size": self.size,
            "points": self.points.tolist(),
            "eigenvalues": self.eigenvalues.tolist(),
            "f_value": self.f_value,
            "residuals": self.residuals.tolist(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PeakSet":
        """Create from dictionary (Hessians are not stored and come back empty)"""
        points = np.asarray(data["points"], dtype=np.float64)
        return cls(
            points=points,
            hessians=np.zeros((0, points.shape[1], points.shape[1])),
            eigenvalues=np.asarray(data["eigenvalues"], dtype=np.float64),
            f_value=float(data["f_value"]),
            residuals=np.asarray(data["residuals"], dtype=np.float64),
            gamma=float(data["gamma"]),
            system_name=data.get("system_name", "custom"),
        )

    def __repr__(self) -> str:
        """Human-readable representation"""
        return (
            f"PeakSet(system='{self.system_name}', size={self.size}, "
            f"f_value={self.f_value:.12g}, max_residual={self.max_residual:.1e})"
        )
