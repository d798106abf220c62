"""
Density1D Model

A one-dimensional probability density over the scaled coordinate Y, with
the mass found by quadrature when it was built.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np


@dataclass
class Density1D:
    """
    Callable density f(Y) >= 0.

    grid/values are the tabulation the density was built for (optional);
    from_dict rebuilds the evaluator by linear interpolation over them.
    """

    evaluator: Callable[[np.ndarray], np.ndarray]
    support_hint: Tuple[float, float]  # Interval holding all but ~1e-14 of the mass
    normalization_check: float  # Quadrature mass over support_hint
    label: str = "density"
    grid: Optional[np.ndarray] = None
    values: Optional[np.ndarray] = None
    parameters: Dict[str, float] = field(default_factory=dict)

    def __call__(self, y) -> np.ndarray:
        """Evaluate f at y (scalar or array)"""
        return self.evaluator(np.asarray(y, dtype=np.float64))

    def is_normalized(self, tolerance: float = 1e-6) -> bool:
        """Mass within `tolerance` of 1"""
        return abs(self.normalization_check - 1.0) < tolerance

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output"""
        return {
            "label": self.label,
            "support_hint": list(self.support_hint),
            "normalization_check": self.normalization_check,
            "parameters": dict(self.parameters),
            "grid": None if self.grid is None else self.grid.tolist(),
            "values": None if self.values is None else self.values.tolist(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Density1D":
        """Create from dictionary; requires the tabulated grid and values"""
        if data.get("grid") is None or data.get("values") is None:
            raise ValueError("Density1D.from_dict needs 'grid' and 'values'")
        grid = np.asarray(data["grid"], dtype=np.float64)
        values = np.asarray(data["values"], dtype=np.float64)
        return cls(
            evaluator=lambda y: np.interp(y, grid, values, left=0.0, right=0.0),
            support_hint=tuple(data["support_hint"]),
            normalization_check=float(data["normalization_check"]),
            label=data.get("label", "density"),
            grid=grid,
            values=values,
            parameters=dict(data.get("parameters", {})),
        )

    def __repr__(self) -> str:
        """Human-readable representation"""
        params = ", ".join(f"{k}={v:g}" for k, v in self.parameters.items())
        low, high = self.support_hint
        return (
            f"Density1D({self.label}, {params}, support=[{low:.3g}, {high:.3g}], "
            f"mass={self.normalization_check:.10f})"
        )
