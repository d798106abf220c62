"""
Density Estimate Model

Histogram and moment estimates of the scaled variable Y = X / sqrt(beta t)
at one recorded time.
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Union

import numpy as np
from scipy import stats


@dataclass
class DensityEstimate:
    """
    Per-axis marginal histograms and raw moments of Y.

    counts[i] is the histogram of Y_i over `edges`; samples outside the
    range are clipped into the end bins so every row sums to n_samples.
    moments[k - 1, i] is the sample mean of Y_i^k for k = 1..4.
    """

    time: float
    edges: np.ndarray  # (bins + 1,) shared by every axis
    counts: np.ndarray  # (N, bins)
    n_samples: int
    moments: np.ndarray  # (4, N)
    sq_norm_mean: float  # Sample mean of |Y|^2
    sq_norm_stderr: float  # Its standard error
    jump_count_mean: float  # Mean reflections per path (nan if not tracked)
    samples: Optional[np.ndarray] = None  # (n_samples, N) scaled samples
    n_stuck: int = 0

    @classmethod
    def from_samples(
        cls,
        time: float,
        scaled: np.ndarray,
        edges: np.ndarray,
        jump_counts: Optional[np.ndarray] = None,
        keep_samples: bool = True,
        n_stuck: int = 0,
    ) -> "DensityEstimate":
        """Bin and summarize scaled samples (n, N)"""
        scaled = np.atleast_2d(scaled)
        n = scaled.shape[0]
        clipped = np.clip(scaled, edges[0], np.nextafter(edges[-1], edges[0]))
        counts = np.stack(
            [np.histogram(clipped[:, i], bins=edges)[0] for i in range(scaled.shape[1])]
        )
        powers = np.arange(1, 5)[:, None, None]
        moments = np.mean(scaled[None, :, :] ** powers, axis=1)
        sq_norm = np.sum(scaled**2, axis=1)
        stderr = float(np.std(sq_norm, ddof=1) / np.sqrt(n)) if n > 1 else float("nan")
        jumps = float(np.mean(jump_counts)) if jump_counts is not None else float("nan")
        return cls(
            time=float(time),
            edges=np.asarray(edges, dtype=np.float64),
            counts=counts,
            n_samples=n,
            moments=moments,
            sq_norm_mean=float(sq_norm.mean()),
            sq_norm_stderr=stderr,
            jump_count_mean=jumps,
            samples=scaled if keep_samples else None,
            n_stuck=n_stuck,
        )

    @property
    def dimension(self) -> int:
        """N"""
        return int(self.counts.shape[0])

    @property
    def centers(self) -> np.ndarray:
        """Bin centers"""
        return 0.5 * (self.edges[1:] + self.edges[:-1])

    @property
    def mean(self) -> np.ndarray:
        """Sample mean of Y"""
        return self.moments[0]

    @property
    def variance(self) -> np.ndarray:
        """Per-axis sample variance of Y"""
        return self.moments[1] - self.moments[0] ** 2

    def density(self, axis: int = 0) -> np.ndarray:
        """Histogram of Y_axis normalized to unit mass"""
        widths = np.diff(self.edges)
        return self.counts[axis] / (self.n_samples * widths)

    def projected_samples(self, direction: np.ndarray) -> np.ndarray:
        """Samples of Y . direction (requires kept samples)"""
        if self.samples is None:
            raise ValueError("DensityEstimate was built without samples")
        return self.samples @ np.asarray(direction, dtype=np.float64)

    def ks_distance(
        self,
        other: Union["DensityEstimate", Callable[[np.ndarray], np.ndarray]],
        axis: int = 0,
    ) -> float:
        """
        Kolmogorov-Smirnov distance of the Y_axis marginal.

        Args:
            other: Another estimate (two-sample test) or a CDF callable
            axis: Coordinate index
        """
        if self.samples is None:
            raise ValueError("DensityEstimate was built without samples")
        ours = self.samples[:, axis]
        if isinstance(other, DensityEstimate):
            if other.samples is None:
                raise ValueError("Other DensityEstimate was built without samples")
            return float(stats.ks_2samp(ours, other.samples[:, axis]).statistic)
        return float(stats.kstest(ours, other).statistic)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output (samples are not included)"""
        return {
            "time": self.time,
            "n_samples": self.n_samples,
            "n_stuck": self.n_stuck,
            "edges": self.edges.tolist(),
            "counts": self.counts.tolist(),
            "moments": self.moments.tolist(),
            "sq_norm_mean": self.sq_norm_mean,
            "sq_norm_stderr": self.sq_norm_stderr,
            "jump_count_mean": self.jump_count_mean,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DensityEstimate":
        """Create from dictionary"""
        return cls(
            time=float(data["time"]),
            edges=np.asarray(data["edges"], dtype=np.float64),
            counts=np.asarray(data["counts"], dtype=np.int64),
            n_samples=int(data["n_samples"]),
            moments=np.asarray(data["moments"], dtype=np.float64),
            sq_norm_mean=float(data["sq_norm_mean"]),
            sq_norm_stderr=float(data["sq_norm_stderr"]),
            jump_count_mean=float(data["jump_count_mean"]),
            n_stuck=int(data.get("n_stuck", 0)),
        )

    def __repr__(self) -> str:
        """Human-readable representation"""
        return (
            f"DensityEstimate(t={self.time:g}, n={self.n_samples}, "
            f"<|Y|^2>={self.sq_norm_mean:.4f}+-{self.sq_norm_stderr:.1e}, "
            f"jumps/path={self.jump_count_mean:.3g})"
        )
