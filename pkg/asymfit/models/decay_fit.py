"""
Decay Fit Models

PowerLawFit is a log-log least-squares line; DecayFit wraps one for the
relaxation |<phi>_t / <phi> - 1| ~ t^slope of an expectation toward its
steady-state value.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np


@dataclass
class PowerLawFit:
    """y = exp(intercept) x^slope"""

    slope: float
    intercept: float
    slope_stderr: float
    intercept_stderr: float
    r_squared: float
    n_points: int

    def predict(self, x) -> np.ndarray:
        """exp(intercept) x^slope"""
        return np.exp(self.intercept) * np.asarray(x, dtype=np.float64) ** self.slope

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output"""
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "slope_stderr": self.slope_stderr,
            "intercept_stderr": self.intercept_stderr,
            "r_squared": self.r_squared,
            "n_points": self.n_points,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PowerLawFit":
        """Create from dictionary"""
        return cls(**{k: data[k] for k in cls.__dataclass_fields__})

    def __repr__(self) -> str:
        """Human-readable representation"""
        return (
            f"PowerLawFit(slope={self.slope:.4f}+-{self.slope_stderr:.4f}, "
            f"n={self.n_points})"
        )


@dataclass
class DecayFit:
    """
    Relaxation of <phi>_t toward <phi>.

    deviations are |<phi>_t / <phi> - 1| when relative is True and
    |<phi>_t - <phi>| otherwise (used when <phi> vanishes).
    """

    times: List[float]
    deviations: List[float]
    slope: float
    slope_stderr: float
    intercept: float
    steady_value: float
    relative: bool = True
    source: str = "exact"
    # Scale x0^2 max(1/(beta gamma r^2), beta gamma r^2)
    window_t_min: Optional[float] = None
    in_window: List[bool] = field(default_factory=list)
    deviation_stderrs: List[float] = field(default_factory=list)
    bootstrap_stderr: Optional[float] = None

    def passes(self, expected_slope: float, tolerance: float) -> bool:
        """|slope - expected| <= tolerance"""
        return abs(self.slope - expected_slope) <= tolerance

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output"""
        return {
            "times": list(self.times),
            "deviations": list(self.deviations),
            "deviation_stderrs": list(self.deviation_stderrs),
            "slope": self.slope,
            "slope_stderr": self.slope_stderr,
            "bootstrap_stderr": self.bootstrap_stderr,
            "intercept": self.intercept,
            "steady_value": self.steady_value,
            "relative": self.relative,
            "source": self.source,
            "window_t_min": self.window_t_min,
            "in_window": list(self.in_window),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DecayFit":
        """Create from dictionary"""
        return cls(
            times=list(data["times"]),
            deviations=list(data["deviations"]),
            slope=float(data["slope"]),
            slope_stderr=float(data["slope_stderr"]),
            intercept=float(data["intercept"]),
            steady_value=float(data["steady_value"]),
            relative=bool(data.get("relative", True)),
            source=data.get("source", "exact"),
            window_t_min=data.get("window_t_min"),
            in_window=list(data.get("in_window", [])),
            deviation_stderrs=list(data.get("deviation_stderrs", [])),
            bootstrap_stderr=data.get("bootstrap_stderr"),
        )

    def __repr__(self) -> str:
        """Human-readable representation"""
        kind = "relative" if self.relative else "absolute"
        return (
            f"DecayFit(slope={self.slope:.4f}+-{self.slope_stderr:.4f}, "
            f"{len(self.times)} times, {kind}, source={self.source})"
        )
