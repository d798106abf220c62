"""
Ensemble Result Model

All DensityEstimates of one run, with the config and sampler that made them.
"""

from dataclasses import dataclass
from typing import Any, Dict, List

import numpy as np

from simulate.models.density_estimate import DensityEstimate
from simulate.models.sim_config import SimConfig


@dataclass
class EnsembleResult:
    """DensityEstimates in record_schedule order"""

    config: SimConfig
    estimates: List[DensityEstimate]
    sampler: str
    system_name: str

    @property
    def times(self) -> np.ndarray:
        """Recorded times"""
        return np.array([e.time for e in self.estimates])

    def at(self, time: float) -> DensityEstimate:
        """Estimate recorded closest to `time`"""
        index = int(np.argmin(np.abs(self.times - time)))
        return self.estimates[index]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output"""
        return {
            "system": self.system_name,
            "sampler": self.sampler,
            "config": self.config.to_dict(),
            "estimates": [e.to_dict() for e in self.estimates],
        }

    def __repr__(self) -> str:
        """Human-readable representation"""
        return (
            f"EnsembleResult({self.system_name}, sampler={self.sampler}, "
            f"times={self.times.tolist()})"
        )
