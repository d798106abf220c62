"""
Monte Carlo Expectation Source

<phi>_t as an ensemble average over simulated paths. All requested times
are simulated in one run so the estimates share paths.

The steady-state reference comes from an exact sampler when one exists
(beta-Hermite ensemble for A_{N-1} with kappa = 1, Gamma radial law for
B_1) and from a long simulation otherwise.
"""

import logging
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from asymfit.interfaces.expectation_source import (
    ExpectationSourceInterface,
    TestFunction,
)
from rootsys import RootFamily, RootSystem
from simulate import (
    InitialCondition,
    SamplerInterface,
    SimConfig,
    run_ensemble,
    sample_hermite_ensemble,
)
from simulate.constants import SIM_BASE_DT, SIM_DT_SAFETY

# Long-run reference time, relative to the latest requested time
STEADY_TIME_FACTOR = 100.0


class MonteCarloSource(ExpectationSourceInterface):
    """
    Ensemble expectations for any root system.

    Usage:
        source = MonteCarloSource(build_a(3), beta=1.0,
                                  initial=InitialCondition.point([1, 0, -1]),
                                  n_paths=10_000, seed=1)
        source.prepare([1, 10, 100])
        value, stderr = source.expectation(lambda Y: 1 + Y[..., 0], 10)
    """

    def __init__(
        self,
        system: RootSystem,
        beta: float,
        initial: InitialCondition,
        n_paths: int,
        seed: int,
        base_dt: float = SIM_BASE_DT,
        dt_safety: float = SIM_DT_SAFETY,
        sampler: Optional[SamplerInterface] = None,
        mode: str = "auto",
    ):
        self.system = system
        self._beta = float(beta)
        self.initial = initial
        self.n_paths = n_paths
        self.seed = seed
        self.base_dt = base_dt
        self.dt_safety = dt_safety
        self.sampler = sampler
        self.mode = mode
        self._samples: Dict[float, np.ndarray] = {}
        self._steady: Optional[np.ndarray] = None
        self.logger = logging.getLogger(__name__)

    @property
    def name(self) -> str:
        return "monte_carlo"

    @property
    def beta(self) -> float:
        return self._beta

    def _simulate(self, times: Sequence[float], seed: int) -> Dict[float, np.ndarray]:
        schedule = sorted({float(t) for t in times})
        config = SimConfig(
            beta=self._beta,
            horizon=schedule[-1],
            n_paths=self.n_paths,
            seed=seed,
            initial=self.initial,
            base_dt=self.base_dt,
            dt_safety=self.dt_safety,
            record_schedule=schedule,
        )
        result = run_ensemble(self.system, config, mode=self.mode, sampler=self.sampler)
        return {e.time: e.samples for e in result.estimates}

    def prepare(self, times: Sequence[float]) -> None:
        missing = [t for t in times if float(t) not in self._samples]
        if missing:
            schedule = list(self._samples) + missing
            self._samples.update(self._simulate(schedule, self.seed))

    def path_values(self, phi: TestFunction, t: float) -> np.ndarray:
        self.prepare([t])
        return np.asarray(phi(self._samples[float(t)]), dtype=np.float64)

    def expectation(self, phi: TestFunction, t: float) -> Tuple[float, float]:
        values = self.path_values(phi, t)
        return float(values.mean()), float(values.std(ddof=1) / np.sqrt(values.size))

    def steady_samples(self) -> np.ndarray:
        """Samples of the steady state (n_paths, N)"""
        if self._steady is not None:
            return self._steady

        system = self.system
        rng_seed = self.seed + 1
        if system.family == RootFamily.A and np.allclose(system.kappa, 1.0):
            self._steady = sample_hermite_ensemble(
                system.ambient_dim, self._beta, self.n_paths, rng_seed
            )
        elif system.family == RootFamily.B and system.ambient_dim == 1:
            rng = np.random.default_rng(rng_seed)
            shape = (self._beta + 1.0) / 2.0
            radius = np.sqrt(2.0 * rng.gamma(shape, size=self.n_paths) / self._beta)
            signs = rng.choice([-1.0, 1.0], size=self.n_paths)
            self._steady = (signs * radius)[:, None]
        else:
            latest = max(self._samples) if self._samples else 1.0
            horizon = STEADY_TIME_FACTOR * latest
            self.logger.info(
                f"No exact steady sampler for {system.name}; "
                f"simulating to t={horizon:g}"
            )
            self._steady = self._simulate([horizon], rng_seed)[horizon]
        return self._steady

    def steady_expectation(self, phi: TestFunction) -> float:
        return float(np.mean(phi(self.steady_samples())))
