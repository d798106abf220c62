"""
Mixture Fit Model

Fitted per-peak parameters of a density near the strong-coupling limit,
next to the finite-time Gaussian-mixture prediction and the steady-state
reference they relax to.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np


def _relative(fitted: np.ndarray, predicted: np.ndarray) -> float:
    scale = np.maximum(np.abs(predicted), 1e-300)
    return float(np.max(np.abs(fitted - predicted) / scale))


@dataclass
class MixtureFit:
    """
    Per-peak centers, widths and coefficients.

    sigmas are the square roots of the covariance eigenvalues on Span(R),
    sorted ascending per peak. The reference_* arrays describe the steady state
    (t -> infinity) at the same beta.
    """

    beta: float
    t: float
    x0: List[float]
    fitted_centers: np.ndarray  # (K, N)
    fitted_sigmas: np.ndarray  # (K, d_R)
    fitted_coefficients: np.ndarray  # (K,)
    predicted_centers: np.ndarray
    predicted_sigmas: np.ndarray
    predicted_coefficients: np.ndarray
    reference_centers: np.ndarray
    reference_sigmas: np.ndarray
    steady_centers: Optional[np.ndarray] = None  # G_beta peaks; reference if None
    method: str = "least_squares"  # or "window_moments"
    n_resolved: int = 0
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def n_peaks(self) -> int:
        """Number of fitted peaks"""
        return int(self.fitted_centers.shape[0])

    @property
    def center_discrepancy(self) -> float:
        """
        Largest error of the fitted center shift.

        The fitted shift (fitted - reference) is compared with the predicted
        shift (predicted - steady); an offset common to the fitted steady
        reference and the fitted density cancels.
        """
        steady = (
            self.reference_centers
            if self.steady_centers is None
            else self.steady_centers
        )
        fitted_shift = self.fitted_centers - self.reference_centers
        predicted_shift = self.predicted_centers - steady
        distances = np.linalg.norm(fitted_shift - predicted_shift, axis=1)
        return float(np.max(distances))

    @property
    def sigma_discrepancy(self) -> float:
        """Largest relative width error"""
        return _relative(self.fitted_sigmas, self.predicted_sigmas)

    @property
    def variance_discrepancy(self) -> float:
        """Largest absolute variance error"""
        return float(np.max(np.abs(self.fitted_sigmas**2 - self.predicted_sigmas**2)))

    @property
    def coefficient_discrepancy(self) -> float:
        """Largest absolute coefficient error"""
        errors = np.abs(self.fitted_coefficients - self.predicted_coefficients)
        return float(np.max(errors))

    @property
    def center_shift(self) -> float:
        """Mean over peaks of |s~_i| / |s_i| - 1 (fitted against the reference)"""
        fitted = np.linalg.norm(self.fitted_centers, axis=1)
        reference = np.linalg.norm(self.reference_centers, axis=1)
        return float(np.mean(fitted / reference - 1.0))

    @property
    def variance_shift(self) -> float:
        """Mean relative growth of the in-span variances over the reference"""
        fitted = self.fitted_sigmas**2
        reference = self.reference_sigmas**2
        return float(np.mean(fitted / reference - 1.0))

    @property
    def coefficient_asymmetry(self) -> float:
        """max_i |c_i - 1|"""
        return float(np.max(np.abs(self.fitted_coefficients - 1.0)))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output"""
        return {
            "beta": self.beta,
            "t": self.t,
            "x0": list(self.x0),
            "method": self.method,
            "n_resolved": self.n_resolved,
            "fitted_centers": self.fitted_centers.tolist(),
            "fitted_sigmas": self.fitted_sigmas.tolist(),
            "fitted_coefficients": self.fitted_coefficients.tolist(),
            "predicted_centers": self.predicted_centers.tolist(),
            "predicted_sigmas": self.predicted_sigmas.tolist(),
            "predicted_coefficients": self.predicted_coefficients.tolist(),
            "reference_centers": self.reference_centers.tolist(),
            "reference_sigmas": self.reference_sigmas.tolist(),
            "steady_centers": (
                None if self.steady_centers is None else self.steady_centers.tolist()
            ),
            "discrepancies": {
                "center": self.center_discrepancy,
                "sigma": self.sigma_discrepancy,
                "coefficient": self.coefficient_discrepancy,
            },
            "metadata": dict(self.metadata),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MixtureFit":
        """Create from dictionary"""
        arrays = {
            key: np.asarray(data[key], dtype=np.float64)
            for key in (
                "fitted_centers",
                "fitted_sigmas",
                "fitted_coefficients",
                "predicted_centers",
                "predicted_sigmas",
                "predicted_coefficients",
                "reference_centers",
                "reference_sigmas",
            )
        }
        steady = data.get("steady_centers")
        return cls(
            beta=float(data["beta"]),
            t=float(data["t"]),
            x0=list(data["x0"]),
            method=data.get("method", "least_squares"),
            n_resolved=int(data.get("n_resolved", 0)),
            steady_centers=(
                None if steady is None else np.asarray(steady, dtype=np.float64)
            ),
            metadata=dict(data.get("metadata", {})),
            **arrays,
        )

    def __repr__(self) -> str:
        """Human-readable representation"""
        return (
            f"MixtureFit(beta={self.beta:g}, t={self.t:g}, peaks={self.n_peaks}, "
            f"d_center={self.center_discrepancy:.2e}, "
            f"d_sigma={self.sigma_discrepancy:.2e}, "
            f"d_coeff={self.coefficient_discrepancy:.2e})"
        )
