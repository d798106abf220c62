"""
Jump-Diffusion Stepping

One Euler-Maruyama step of the Dunkl process followed by root reflections:

    x' = x + (beta/2) sum_{alpha in R_+} kappa(alpha) alpha / (alpha . x) dt
         + sqrt(dt) xi

then, independently for each alpha in R_+, x' -> sigma_alpha x' with
probability 1 - exp(-r_alpha dt), where

    r_alpha(x) = (beta/4) kappa(alpha) |alpha|^2 / (alpha . x)^2

is read off the exchange term of the generator.

The drift of the root nearest to x is taken implicitly. Along its unit
vector u the distance y = u . x obeys dy = (beta kappa / 2) / y dt + dW, and
the implicit step

    y' = (b + sqrt(b^2 + 2 beta kappa dt)) / 2,   b = y + explicit part

stays positive for any dt, so the nearest wall is never crossed. Step sizes
shrink with the squared wall distance down to a floor of
SIM_MIN_DT_FRACTION * base_dt. A step that still lands on or across some
other wall is retried with dt/2.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from potential import active_roots
from rootsys import RootSystem
from simulate.constants import SIM_MAX_HALVINGS, SIM_MIN_DT_FRACTION
from simulate.interfaces.sampler_interface import SimulationError, StuckAtWallError

logger = logging.getLogger(__name__)


class StepKernel:
    """
    Active roots of a system, preprocessed for batched stepping.

    Roots with kappa = 0 carry neither drift nor jumps and are dropped.
    """

    def __init__(self, system: RootSystem, beta: float):
        alphas, kappa = active_roots(system)
        self.alphas = alphas
        self.kappa = kappa
        self.norms_sq = np.einsum("ij,ij->i", alphas, alphas)
        self.beta = float(beta)
        # Drift and rate constants per root
        self._drift = 0.5 * self.beta * self.kappa
        self._rate = 0.25 * self.beta * self.kappa * self.norms_sq
        self._dt_scale = self.beta * self.kappa * self.norms_sq

    @property
    def n_roots(self) -> int:
        """Number of active positive roots"""
        return int(self.alphas.shape[0])

    def adaptive_dt(
        self,
        states: np.ndarray,
        base_dt: float,
        dt_safety: float,
        min_dt: Optional[float] = None,
    ) -> np.ndarray:
        """
        Per-row step size:
        dt_safety * min_alpha (alpha . x)^2 / (beta kappa |alpha|^2),
        clipped to [min_dt, base_dt]; min_dt defaults to
        SIM_MIN_DT_FRACTION * base_dt.
        """
        if self.n_roots == 0:
            return np.full(states.shape[0], base_dt)
        if min_dt is None:
            min_dt = SIM_MIN_DT_FRACTION * base_dt
        dots = states @ self.alphas.T
        wall_scale = np.min(dots**2 / self._dt_scale, axis=1)
        return np.clip(dt_safety * wall_scale, min(min_dt, base_dt), base_dt)

    def propose(
        self,
        states: np.ndarray,
        dt: np.ndarray,
        rng: np.random.Generator,
    ) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        One step for every row of `states`.

        Returns:
            (new states, accepted mask, reflections applied per row);
            rejected rows crossed or touched a wall and must be retried
        """
        noise = rng.standard_normal(states.shape)
        scale = np.sqrt(dt)[:, None]
        if self.n_roots == 0:
            return states + scale * noise, np.ones(states.shape[0], bool), np.zeros(
                states.shape[0], np.int64
            )

        dots = states @ self.alphas.T
        rows = np.arange(states.shape[0])
        nearest = np.argmin(np.abs(dots) / np.sqrt(self.norms_sq), axis=1)

        coefficients = self._drift / dots
        coefficients[rows, nearest] = 0.0
        new = states + (coefficients @ self.alphas) * dt[:, None] + scale * noise

        # Implicit drift along the nearest root, oriented into the chamber
        unit = self.alphas[nearest] / np.sqrt(self.norms_sq[nearest])[:, None]
        unit *= np.sign(dots[rows, nearest])[:, None]
        b = np.einsum("ij,ij->i", new, unit)
        c_dt = self._drift[nearest] * dt
        root = np.sqrt(b**2 + 4.0 * c_dt)
        with np.errstate(divide="ignore", invalid="ignore"):
            y = np.where(b >= 0.0, 0.5 * (b + root), 2.0 * c_dt / (root - b))
        new += (y - b)[:, None] * unit

        new_dots = new @ self.alphas.T
        same_chamber = (np.sign(new_dots) == np.sign(dots)) & (new_dots != 0.0)
        accepted = np.all(same_chamber, axis=1)

        with np.errstate(divide="ignore"):
            rates = self._rate / new_dots**2
        probabilities = -np.expm1(-rates * dt[:, None])
        fire = (rng.random(rates.shape) < probabilities) & accepted[:, None]
        for r in np.nonzero(fire.any(axis=0))[0]:
            hit = fire[:, r]
            alpha = self.alphas[r]
            projection = new[hit] @ alpha
            new[hit] -= (2.0 * projection / self.norms_sq[r])[:, None] * alpha
        return new, accepted, fire.sum(axis=1)

    def advance(
        self,
        states: np.ndarray,
        dt: np.ndarray,
        rng: np.random.Generator,
        max_halvings: int = SIM_MAX_HALVINGS,
    ) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """
        Step every row, halving dt for rejected rows up to max_halvings times.

        Returns:
            (new states, dt actually used, reflections per row, stuck mask);
            stuck rows are returned unchanged with dt = 0
        """
        new = states.copy()
        used = np.zeros_like(dt)
        jumps = np.zeros(states.shape[0], np.int64)
        pending = np.arange(states.shape[0])
        trial_dt = dt.copy()

        for _ in range(max_halvings + 1):
            proposal, accepted, fired = self.propose(
                states[pending], trial_dt[pending], rng
            )
            done = pending[accepted]
            new[done] = proposal[accepted]
            used[done] = trial_dt[done]
            jumps[done] = fired[accepted]
            pending = pending[~accepted]
            if pending.size == 0:
                break
            trial_dt[pending] *= 0.5

        stuck = np.zeros(states.shape[0], bool)
        stuck[pending] = True
        return new, used, jumps, stuck


def step(
    state: np.ndarray,
    dt: float,
    beta: float,
    system: RootSystem,
    rng: np.random.Generator,
) -> np.ndarray:
    """
    Advance one state by dt.

    Args:
        state: Off-wall point in R^N
        dt: Step size
        beta: beta > 0
        system: Root system
        rng: Random generator

    Returns:
        New state (dt may have been halved internally, up to 10 times)

    Raises:
        SimulationError: If the state lies on a wall
        StuckAtWallError: If every halving still hits a wall
    """
    kernel = StepKernel(system, beta)
    state = np.asarray(state, dtype=np.float64).reshape(1, -1)
    if kernel.n_roots and np.any(state @ kernel.alphas.T == 0.0):
        raise SimulationError("state lies on a chamber wall")
    new, _, _, stuck = kernel.advance(state, np.array([float(dt)]), rng)
    if stuck[0]:
        raise StuckAtWallError(
            f"stuck at wall: state {state[0].tolist()} "
            f"after {SIM_MAX_HALVINGS} dt halvings"
        )
    return new[0]
