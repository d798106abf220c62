"""
Gaussian Mixture Model

Sum of Gaussians sharing one normalization prefactor:

    G(Y) = normalization * sum_i c_i exp(-(Y - s_i)^T P_i (Y - s_i) / 2)

with normalization = sqrt(det P_1) / ((2 pi)^{N/2} K) for K components.
With all c_i = 1 and congruent precisions the mixture integrates to 1.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np
from scipy import special, stats


@dataclass
class GaussianMixture:
    """Equal-prefactor Gaussian mixture in R^N"""

    centers: np.ndarray  # (K, N)
    precision_matrices: np.ndarray  # (K, N, N), the beta H form
    coefficients: np.ndarray  # (K,)
    normalization: float  # Common prefactor

    @classmethod
    def from_components(
        cls,
        centers: np.ndarray,
        precision_matrices: np.ndarray,
        coefficients: Optional[np.ndarray] = None,
    ) -> "GaussianMixture":
        """Build a mixture, deriving the prefactor from the first precision"""
        centers = np.atleast_2d(np.asarray(centers, dtype=np.float64))
        precisions = np.asarray(precision_matrices, dtype=np.float64)
        k, n = centers.shape
        if coefficients is None:
            coefficients = np.ones(k)
        _, logdet = np.linalg.slogdet(precisions[0])
        normalization = float(np.exp(0.5 * logdet - 0.5 * n * np.log(2.0 * np.pi)) / k)
        return cls(
            centers=centers,
            precision_matrices=precisions,
            coefficients=np.asarray(coefficients, dtype=np.float64),
            normalization=normalization,
        )

    @property
    def n_components(self) -> int:
        """K"""
        return int(self.centers.shape[0])

    @property
    def dimension(self) -> int:
        """N"""
        return int(self.centers.shape[1])

    def _quadratic_forms(self, y: np.ndarray) -> np.ndarray:
        """(Y - s_i)^T P_i (Y - s_i), shape (..., K)"""
        diff = y[..., None, :] - self.centers
        return np.einsum("...ki,kij,...kj->...k", diff, self.precision_matrices, diff)

    def component_pdfs(self, y: np.ndarray) -> np.ndarray:
        """Per-component terms c_i * normalization * exp(...), shape (..., K)"""
        y = np.asarray(y, dtype=np.float64)
        if self.dimension == 1 and y.ndim <= 1:
            y = y.reshape(-1, 1) if y.ndim == 1 else y.reshape(1)
        forms = self._quadratic_forms(y)
        return self.normalization * self.coefficients * np.exp(-0.5 * forms)

    def pdf(self, y: np.ndarray) -> np.ndarray:
        """
        Mixture density.

        For N = 1 a 1-d array is treated as a list of points; otherwise the
        last axis holds coordinates.
        """
        return self.component_pdfs(y).sum(axis=-1)

    def log_pdf(self, y: np.ndarray) -> np.ndarray:
        """log of the mixture density (requires a positive density)"""
        y = np.asarray(y, dtype=np.float64)
        if self.dimension == 1 and y.ndim <= 1:
            y = y.reshape(-1, 1) if y.ndim == 1 else y.reshape(1)
        forms = -0.5 * self._quadratic_forms(y)
        return np.log(self.normalization) + special.logsumexp(
            forms, b=self.coefficients, axis=-1
        )

    def component_masses(self) -> np.ndarray:
        """Analytic integral of each term"""
        _, logdets = np.linalg.slogdet(self.precision_matrices)
        n = self.dimension
        volumes = np.exp(0.5 * n * np.log(2.0 * np.pi) - 0.5 * logdets)
        return self.normalization * self.coefficients * volumes

    def integral(self) -> float:
        """Analytic integral of the mixture over R^N"""
        return float(self.component_masses().sum())

    def peak_heights(self) -> np.ndarray:
        """Mixture density evaluated at each center"""
        return self.pdf(self.centers)

    def covariances(self) -> np.ndarray:
        """Inverse precision matrices"""
        return np.linalg.inv(self.precision_matrices)

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """
        Draw n points.

        Raises:
            ValueError: If some coefficient is negative
        """
        if np.any(self.coefficients < 0.0):
            raise ValueError("Cannot sample a mixture with negative coefficients")
        weights = self.component_masses()
        labels = rng.choice(self.n_components, size=n, p=weights / weights.sum())
        noise = rng.standard_normal((n, self.dimension))
        # Covariance P^{-1} = (L L^T)^{-1}, so x = L^{-T} xi
        factors = np.linalg.cholesky(self.precision_matrices)
        samples = np.empty((n, self.dimension))
        for k in range(self.n_components):
            chosen = labels == k
            if np.any(chosen):
                shifted = np.linalg.solve(factors[k].T, noise[chosen].T).T
                samples[chosen] = self.centers[k] + shifted
        return samples

    def mass_within(
        self,
        radius: float,
        rng: Optional[np.random.Generator] = None,
        n_samples: int = 200_000,
    ) -> np.ndarray:
        """
        Mass of each term within `radius` of its own center.

        Exact for N = 1; otherwise estimated from n_samples standard
        normal draws (seeded rng for reproducibility).
        """
        masses = self.component_masses()
        if self.dimension == 1:
            sigma = 1.0 / np.sqrt(self.precision_matrices[:, 0, 0])
            inside = 2.0 * stats.norm.cdf(radius / sigma) - 1.0
            return masses * inside

        rng = rng if rng is not None else np.random.default_rng(0)
        noise = rng.standard_normal((n_samples, self.dimension))
        factors = np.linalg.cholesky(self.precision_matrices)
        inside = np.empty(self.n_components)
        for k in range(self.n_components):
            offsets = np.linalg.solve(factors[k].T, noise.T).T
            inside[k] = np.mean(np.linalg.norm(offsets, axis=1) < radius)
        return masses * inside

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output"""
        return {
            "centers": self.centers.tolist(),
            "precision_matrices": self.precision_matrices.tolist(),
            "coefficients": self.coefficients.tolist(),
            "normalization": self.normalization,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GaussianMixture":
        """Create from dictionary"""
        return cls(
            centers=np.asarray(data["centers"], dtype=np.float64),
            precision_matrices=np.asarray(data["precision_matrices"], dtype=np.float64),
            coefficients=np.asarray(data["coefficients"], dtype=np.float64),
            normalization=float(data["normalization"]),
        )

    def __repr__(self) -> str:
        """Human-readable representation"""
        return (
            f"GaussianMixture(K={self.n_components}, N={self.dimension}, "
            f"integral={self.integral():.12g})"
        )
