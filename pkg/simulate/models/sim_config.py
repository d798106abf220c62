"""
Simulation Config Models

InitialCondition (point mass or finite mixture) and SimConfig, the full
description of one Monte Carlo run.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from rootsys import RootSystem, orbit_points
from simulate.constants import (
    SIM_BASE_DT,
    SIM_CHUNK_SIZE,
    SIM_DT_SAFETY,
    SIM_HISTOGRAM_BINS,
    SIM_MAX_STEPS,
    SIM_MAX_WORKERS,
    InitialKind,
)


@dataclass
class InitialCondition:
    """
    Finite mixture of point masses sum_k w_k delta(x - x_k).

    A point mass is the one-component case.
    """

    points: np.ndarray  # (k, N)
    weights: np.ndarray  # (k,), normalized

    def __post_init__(self):
        self.points = np.atleast_2d(np.asarray(self.points, dtype=np.float64))
        self.weights = np.asarray(self.weights, dtype=np.float64).reshape(-1)
        if self.weights.shape[0] != self.points.shape[0]:
            raise ValueError("InitialCondition needs one weight per point")
        if np.any(self.weights < 0.0) or self.weights.sum() <= 0.0:
            raise ValueError(
                "InitialCondition weights must be nonnegative with positive sum"
            )
        self.weights = self.weights / self.weights.sum()

    @classmethod
    def point(cls, x0: Sequence[float]) -> "InitialCondition":
        """delta at x0"""
        points = np.atleast_2d(np.asarray(x0, dtype=np.float64))
        return cls(points=points, weights=np.ones(1))

    @classmethod
    def mixture(
        cls, points: Sequence, weights: Optional[Sequence[float]] = None
    ) -> "InitialCondition":
        """Weighted mixture (equal weights when omitted)"""
        points = np.atleast_2d(np.asarray(points, dtype=np.float64))
        if weights is None:
            weights = np.ones(points.shape[0])
        return cls(points=points, weights=np.asarray(weights, dtype=np.float64))

    @classmethod
    def symmetrized(cls, system: RootSystem, x0: Sequence[float]) -> "InitialCondition":
        """Uniform mixture over the W-orbit of x0"""
        orbit = orbit_points(system, np.asarray(x0, dtype=np.float64))
        return cls(points=orbit, weights=np.ones(orbit.shape[0]))

    @property
    def kind(self) -> InitialKind:
        """POINT for a single atom, MIXTURE otherwise"""
        return InitialKind.POINT if self.points.shape[0] == 1 else InitialKind.MIXTURE

    @property
    def dimension(self) -> int:
        """N"""
        return int(self.points.shape[1])

    @property
    def mean(self) -> np.ndarray:
        """Weighted mean of the atoms"""
        return self.weights @ self.points

    @property
    def max_norm(self) -> float:
        """Largest |x_k|"""
        return float(np.max(np.linalg.norm(self.points, axis=1)))

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """n starting points drawn according to the weights"""
        if self.points.shape[0] == 1:
            return np.repeat(self.points, n, axis=0)
        index = rng.choice(self.points.shape[0], size=n, p=self.weights)
        return self.points[index].copy()

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output"""
        return {
            "kind": self.kind.value,
            "points": self.points.tolist(),
            "weights": self.weights.tolist(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "InitialCondition":
        """Create from dictionary"""
        return cls(
            points=np.asarray(data["points"]), weights=np.asarray(data["weights"])
        )

    def __repr__(self) -> str:
        """Human-readable representation"""
        if self.kind == InitialKind.POINT:
            return f"InitialCondition(point={self.points[0].tolist()})"
        return f"InitialCondition(mixture of {self.points.shape[0]} points)"


@dataclass
class SimConfig:
    """
    One Monte Carlo run.

    Estimates are recorded at every time in record_schedule (defaults to
    [horizon]).
    """

    beta: float
    horizon: float
    n_paths: int
    seed: int
    initial: InitialCondition
    base_dt: float = SIM_BASE_DT
    dt_safety: float = SIM_DT_SAFETY
    record_schedule: List[float] = field(default_factory=list)
    chunk_size: int = SIM_CHUNK_SIZE
    max_workers: int = SIM_MAX_WORKERS
    histogram_bins: int = SIM_HISTOGRAM_BINS
    max_steps: int = SIM_MAX_STEPS
    keep_samples: bool = True

    def __post_init__(self):
        if not self.record_schedule:
            self.record_schedule = [float(self.horizon)]
        self.record_schedule = [float(t) for t in self.record_schedule]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output"""
        return {
            "beta": self.beta,
            "horizon": self.horizon,
            "n_paths": self.n_paths,
            "seed": self.seed,
            "initial": self.initial.to_dict(),
            "base_dt": self.base_dt,
            "dt_safety": self.dt_safety,
            "record_schedule": list(self.record_schedule),
            "chunk_size": self.chunk_size,
            "max_workers": self.max_workers,
            "histogram_bins": self.histogram_bins,
            "max_steps": self.max_steps,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SimConfig":
        """Create from dictionary"""
        return cls(
            beta=float(data["beta"]),
            horizon=float(data["horizon"]),
            n_paths=int(data["n_paths"]),
            seed=int(data["seed"]),
            initial=InitialCondition.from_dict(data["initial"]),
            base_dt=float(data.get("base_dt", SIM_BASE_DT)),
            dt_safety=float(data.get("dt_safety", SIM_DT_SAFETY)),
            record_schedule=list(data.get("record_schedule", [])),
            chunk_size=int(data.get("chunk_size", SIM_CHUNK_SIZE)),
            max_workers=int(data.get("max_workers", SIM_MAX_WORKERS)),
            histogram_bins=int(data.get("histogram_bins", SIM_HISTOGRAM_BINS)),
            max_steps=int(data.get("max_steps", SIM_MAX_STEPS)),
        )

    def __repr__(self) -> str:
        """Human-readable representation"""
        return (
            f"SimConfig(beta={self.beta:g}, horizon={self.horizon:g}, "
            f"paths={self.n_paths}, seed={self.seed}, {self.initial!r}, "
            f"records={len(self.record_schedule)})"
        )
