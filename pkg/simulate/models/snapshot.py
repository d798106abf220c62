"""
Snapshot Model

Raw ensemble state at one recorded time, before scaling and binning.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np


@dataclass
class Snapshot:
    """Positions X_t of every path at time t"""

    time: float
    positions: np.ndarray  # (n_paths, N)
    jump_counts: Optional[np.ndarray] = None  # (n_paths,), None when not tracked
    stuck: Optional[np.ndarray] = None  # (n_paths,) bool

    @property
    def n_paths(self) -> int:
        """Number of paths"""
        return int(self.positions.shape[0])

    @property
    def n_stuck(self) -> int:
        """Paths that stopped at a wall"""
        return 0 if self.stuck is None else int(self.stuck.sum())

    @property
    def healthy(self) -> np.ndarray:
        """Positions of paths that reached t"""
        if self.stuck is None:
            return self.positions
        return self.positions[~self.stuck]

    def __repr__(self) -> str:
        """Human-readable representation"""
        return f"Snapshot(t={self.time:g}, paths={self.n_paths}, stuck={self.n_stuck})"
