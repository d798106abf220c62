"""
Jump-Diffusion Sampler

Monte Carlo simulation of the Dunkl process on any root system: adaptive
Euler-Maruyama drift and diffusion with reflections drawn from per-root
exponential clocks (see simulate.utils.stepping).

Paths run in fixed-size chunks, each with its own random stream, on a
thread pool; snapshots are concatenated in chunk order, so results are
identical for any worker count.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Tuple

import numpy as np

from rootsys import RootSystem
from simulate.interfaces.sampler_interface import SamplerInterface
from simulate.models.sim_config import SimConfig
from simulate.models.snapshot import Snapshot
from simulate.utils.rng_utils import chunk_rng, chunk_sizes
from simulate.utils.stepping import StepKernel

ChunkResult = List[Tuple[np.ndarray, np.ndarray, np.ndarray]]


class JumpDiffusionSampler(SamplerInterface):
    """
    General-purpose simulator for Dunkl processes.

    Usage:
        sampler = JumpDiffusionSampler()
        snapshots = sampler.sample(build_a(3), config)
    """

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    @property
    def name(self) -> str:
        return "jump_diffusion"

    def supports(self, system: RootSystem) -> bool:
        return True

    def _run_chunk(
        self,
        system: RootSystem,
        config: SimConfig,
        n: int,
        chunk_index: int,
    ) -> ChunkResult:
        """Simulate one chunk; returns (positions, jumps, stuck) per recorded time"""
        rng = chunk_rng(config.seed, chunk_index)
        kernel = StepKernel(system, config.beta)

        x = config.initial.sample(n, rng)
        clock = np.zeros(n)
        jumps = np.zeros(n, np.int64)
        stuck = np.zeros(n, bool)
        records: ChunkResult = []
        steps = 0

        for target in config.record_schedule:
            slack = 1e-12 * max(1.0, target)
            while True:
                active = np.nonzero(~stuck & (clock < target - slack))[0]
                if active.size == 0:
                    break
                if steps >= config.max_steps:
                    self.logger.warning(
                        f"Chunk {chunk_index}: step budget {config.max_steps} "
                        f"exhausted before t={target:g}; "
                        f"{active.size} path(s) marked stuck"
                    )
                    stuck[active] = True
                    break
                xs = x[active]
                dt = kernel.adaptive_dt(xs, config.base_dt, config.dt_safety)
                dt = np.minimum(dt, target - clock[active])
                new, used, fired, newly_stuck = kernel.advance(xs, dt, rng)
                x[active] = new
                clock[active] += used
                jumps[active] += fired
                stuck[active[newly_stuck]] = True
                steps += 1
            records.append((x.copy(), jumps.copy(), stuck.copy()))

        self.logger.debug(
            f"Chunk {chunk_index}: {n} paths, {steps} steps, {int(stuck.sum())} stuck"
        )
        return records

    def sample(self, system: RootSystem, config: SimConfig) -> List[Snapshot]:
        sizes = chunk_sizes(config.n_paths, config.chunk_size)
        self.logger.info(
            f"Simulating {config.n_paths} paths of {system.name} "
            f"in {len(sizes)} chunk(s) on {config.max_workers} worker(s)"
        )

        def run(index: int) -> ChunkResult:
            return self._run_chunk(system, config, sizes[index], index)

        if config.max_workers > 1 and len(sizes) > 1:
            with ThreadPoolExecutor(max_workers=config.max_workers) as pool:
                chunks = list(pool.map(run, range(len(sizes))))
        else:
            chunks = [run(i) for i in range(len(sizes))]

        snapshots = []
        for k, time in enumerate(config.record_schedule):
            snapshots.append(
                Snapshot(
                    time=time,
                    positions=np.concatenate([chunk[k][0] for chunk in chunks]),
                    jump_counts=np.concatenate([chunk[k][1] for chunk in chunks]),
                    stuck=np.concatenate([chunk[k][2] for chunk in chunks]),
                )
            )
        return snapshots
