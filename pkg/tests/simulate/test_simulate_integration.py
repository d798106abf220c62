"""
Simulation Module Integration Tests

Tests cover:
1. Initial conditions: point, mixture, symmetrized orbit
2. Config validation: parameters, schedule, span, walls, dimension
3. Sampler factory: exact B_1 sampler vs jump-diffusion
4. Reproducibility: same seed, different worker counts
5. Jump-diffusion against exact B_1 moments and distribution
6. Exact sampler and the beta-Hermite ensemble
7. Stuck-path accounting in the ensemble runner
8. Wall handling: step size floor, implicit wall drift, step budget
9. Radial law and long-horizon distribution at unit coupling
"""

from typing import List

import numpy as np
import pytest

from exact1d import cdf_table_1d
from rootsys import RootSystem, build_a, build_b
from simulate import (
    ConfigStatus,
    DensityEstimate,
    ExactB1Sampler,
    InitialCondition,
    InitialKind,
    JumpDiffusionSampler,
    SamplerFactory,
    SamplerInterface,
    SimConfig,
    SimulationError,
    Snapshot,
    StepKernel,
    StuckAtWallError,
    chunk_rng,
    chunk_sizes,
    create_sampler,
    run_ensemble,
    sample_exact_1d,
    sample_hermite_ensemble,
    step,
    validate_config,
)
from simulate.constants import SIM_BASE_DT, SIM_MIN_DT_FRACTION

# =============================================================================
# TEST FIXTURES
# =============================================================================


@pytest.fixture
def b1():
    """B_1"""
    return build_b(1)


@pytest.fixture
def a2():
    """A_2 on three particles"""
    return build_a(3)


def make_config(x0, **overrides) -> SimConfig:
    """Small config with a point start"""
    values = dict(
        beta=2.0,
        horizon=1.0,
        n_paths=2000,
        seed=11,
        initial=InitialCondition.point(x0),
        chunk_size=500,
    )
    values.update(overrides)
    return SimConfig(**values)


class StuckSampler(SamplerInterface):
    """Returns a snapshot in which a given number of paths are stuck"""

    def __init__(self, n_stuck: int):
        self.n_stuck = n_stuck

    @property
    def name(self) -> str:
        return "stuck"

    def supports(self, system: RootSystem) -> bool:
        return True

    def sample(self, system: RootSystem, config: SimConfig) -> List[Snapshot]:
        stuck = np.zeros(config.n_paths, bool)
        stuck[: self.n_stuck] = True
        positions = np.ones((config.n_paths, system.ambient_dim))
        return [Snapshot(time=config.horizon, positions=positions, stuck=stuck)]


# =============================================================================
# INITIAL CONDITION TESTS
# =============================================================================


class TestInitialCondition:
    """Test point masses and mixtures"""

    def test_point(self):
        """A point mass has one atom of weight 1"""
        initial = InitialCondition.point([2.0])
        assert initial.kind == InitialKind.POINT
        assert initial.dimension == 1
        assert np.allclose(initial.sample(5, np.random.default_rng(0)), 2.0)

    def test_mixture_weights_normalized(self):
        """Weights are divided by their sum"""
        initial = InitialCondition.mixture([[1.0], [-1.0]], [3.0, 1.0])
        assert initial.kind == InitialKind.MIXTURE
        assert np.allclose(initial.weights, [0.75, 0.25])
        assert initial.mean[0] == pytest.approx(0.5)

    def test_symmetrized_orbit(self, a2):
        """Uniform over the 6 images of a generic A_2 point"""
        initial = InitialCondition.symmetrized(a2, [1.0, 0.2, -1.2])
        assert initial.points.shape == (6, 3)
        assert np.allclose(initial.mean, 0.0)
        assert initial.max_norm == pytest.approx(np.sqrt(1.0 + 0.04 + 1.44))

    def test_bad_weights(self):
        """Negative weights are rejected"""
        with pytest.raises(ValueError):
            InitialCondition.mixture([[1.0], [-1.0]], [1.0, -2.0])

    def test_round_trip(self):
        """to_dict / from_dict keep atoms and weights"""
        initial = InitialCondition.mixture([[1.0], [-1.0]], [1.0, 1.0])
        restored = InitialCondition.from_dict(initial.to_dict())
        assert np.allclose(restored.points, initial.points)
        assert np.allclose(restored.weights, initial.weights)


# =============================================================================
# CONFIG VALIDATION TESTS
# =============================================================================


class TestConfigValidation:
    """Test validate_config"""

    def test_valid(self, a2):
        """An off-wall point in Span(R) is valid"""
        status, error = validate_config(a2, make_config([1.0, 0.0, -1.0]))
        assert status == ConfigStatus.VALID
        assert error is None

    def test_bad_beta(self, b1):
        """beta must be positive"""
        status, _ = validate_config(b1, make_config([1.0], beta=0.0))
        assert status == ConfigStatus.BAD_PARAMETER

    def test_bad_dt_safety(self, b1):
        """dt_safety must lie in (0, 1]"""
        status, _ = validate_config(b1, make_config([1.0], dt_safety=1.5))
        assert status == ConfigStatus.BAD_PARAMETER

    def test_bad_schedule(self, b1):
        """Record times must increase and stay within the horizon"""
        unsorted = make_config([1.0], record_schedule=[0.5, 0.2])
        beyond = make_config([1.0], record_schedule=[0.5, 2.0])
        assert validate_config(b1, unsorted)[0] == ConfigStatus.BAD_SCHEDULE
        assert validate_config(b1, beyond)[0] == ConfigStatus.BAD_SCHEDULE

    def test_out_of_span(self, a2):
        """The center of mass direction is outside Span(A_2)"""
        status, _ = validate_config(a2, make_config([1.0, 1.0, 1.0]))
        assert status == ConfigStatus.OUT_OF_SPAN

    def test_on_wall(self, a2, b1):
        """Starting on a wall is rejected"""
        wall_config = make_config([1.0, 1.0, -2.0])
        assert validate_config(a2, wall_config)[0] == ConfigStatus.ON_WALL
        assert validate_config(b1, make_config([0.0]))[0] == ConfigStatus.ON_WALL

    def test_dimension_mismatch(self, a2):
        """Points must live in R^N"""
        status, _ = validate_config(a2, make_config([1.0, -1.0]))
        assert status == ConfigStatus.DIMENSION_MISMATCH

    def test_runner_rejects_invalid_config(self, b1):
        """run_ensemble raises SimulationError for invalid configs"""
        with pytest.raises(SimulationError, match="on_wall"):
            run_ensemble(b1, make_config([0.0]))


# =============================================================================
# FACTORY AND RNG TESTS
# =============================================================================


class TestFactoryAndStreams:
    """Test sampler selection and random streams"""

    def test_auto_mode(self, b1, a2):
        """B_1 gets the exact sampler, everything else the simulator"""
        assert isinstance(SamplerFactory.create_sampler(b1), ExactB1Sampler)
        assert isinstance(SamplerFactory.create_sampler(a2), JumpDiffusionSampler)

    def test_forced_modes(self, b1, a2):
        """Forced simulation works everywhere; forced exact only on B_1"""
        forced = create_sampler(b1, force_simulation=True)
        assert isinstance(forced, JumpDiffusionSampler)
        with pytest.raises(SimulationError, match="not B_1"):
            SamplerFactory.create_sampler(a2, mode="exact")
        with pytest.raises(SimulationError, match="Unknown sampler mode"):
            SamplerFactory.create_sampler(a2, mode="magic")

    def test_chunk_sizes(self):
        """Paths split into full chunks plus a remainder"""
        assert chunk_sizes(10, 4) == [4, 4, 2]
        assert chunk_sizes(8, 4) == [4, 4]

    def test_chunk_streams(self):
        """Streams depend on (seed, chunk) only"""
        first = chunk_rng(5, 0).random(3)
        assert np.allclose(first, chunk_rng(5, 0).random(3))
        assert not np.allclose(first, chunk_rng(5, 1).random(3))

    def test_same_seed_same_paths(self, b1):
        """Two runs with one seed give identical samples"""
        config = make_config([1.0], n_paths=600, horizon=0.5)
        first = run_ensemble(b1, config, mode="jump_diffusion")
        second = run_ensemble(b1, config, mode="jump_diffusion")
        assert np.array_equal(first.estimates[0].samples, second.estimates[0].samples)

    def test_worker_count_does_not_change_paths(self, b1):
        """Chunks carry their own streams, so threading is invisible"""
        serial = make_config([1.0], n_paths=600, horizon=0.5, chunk_size=200)
        threaded = make_config(
            [1.0], n_paths=600, horizon=0.5, chunk_size=200, max_workers=3
        )
        a = run_ensemble(b1, serial, mode="jump_diffusion").estimates[0].samples
        b = run_ensemble(b1, threaded, mode="jump_diffusion").estimates[0].samples
        assert np.array_equal(a, b)


# =============================================================================
# JUMP-DIFFUSION TESTS
# =============================================================================


class TestJumpDiffusion:
    """Test the simulator against exact B_1 results"""

    def test_single_step(self, b1):
        """step() moves an off-wall state and rejects wall states"""
        new = step(np.array([1.0]), 1e-3, 2.0, b1, np.random.default_rng(0))
        assert new.shape == (1,)
        with pytest.raises(SimulationError):
            step(np.array([0.0]), 1e-3, 2.0, b1, np.random.default_rng(0))

    def test_b1_moments(self, b1):
        """E[X_t] = x0 and E[X_t^2] = x0^2 + (1 + beta) t"""
        config = make_config([1.0], n_paths=4000, record_schedule=[0.25, 1.0])
        result = run_ensemble(b1, config, mode="jump_diffusion")
        estimate = result.at(1.0)
        assert result.times.tolist() == [0.25, 1.0]
        assert estimate.n_stuck == 0
        # Y = X / sqrt(2): <Y> = 1 / sqrt(2), <Y^2> = 2
        assert estimate.mean[0] == pytest.approx(1.0 / np.sqrt(2.0), abs=0.06)
        assert abs(estimate.sq_norm_mean - 2.0) < 5.0 * estimate.sq_norm_stderr
        assert estimate.jump_count_mean > 0.0

    def test_b1_distribution(self, b1):
        """KS distance to the exact scaled law is small"""
        config = make_config([1.0], n_paths=4000)
        estimate = run_ensemble(b1, config, mode="jump_diffusion").estimates[0]
        grid, cdf = cdf_table_1d(1.0, 1.0, 2.0, 4001)
        distance = estimate.ks_distance(lambda y: np.interp(y, grid, cdf))
        assert distance < 0.05

    def test_a2_second_moment(self, a2):
        """E|X_t|^2 = |x0|^2 + (N + beta gamma) t"""
        config = make_config([1.0, 0.0, -1.0], beta=1.0, horizon=0.5, n_paths=1500)
        estimate = run_ensemble(a2, config).estimates[0]
        # |x0|^2 = 2, N + beta gamma = 6, scaled by beta t = 0.5
        expected = (2.0 + 6.0 * 0.5) / 0.5
        tolerance = 5.0 * estimate.sq_norm_stderr + 0.05 * expected
        assert abs(estimate.sq_norm_mean - expected) < tolerance
        assert estimate.dimension == 3


# =============================================================================
# EXACT SAMPLER TESTS
# =============================================================================


class TestExactSamplers:
    """Test inverse-CDF draws and the beta-Hermite ensemble"""

    def test_exact_b1_moments(self, b1):
        """Exact draws reproduce <Y> = x0 / sqrt(beta t)"""
        config = make_config([2.0], beta=100.0, horizon=10.0, n_paths=20000)
        estimate = run_ensemble(b1, config).estimates[0]
        assert estimate.mean[0] == pytest.approx(2.0 / np.sqrt(1000.0), abs=0.03)
        assert estimate.sq_norm_mean == pytest.approx(0.004 + 1.01, abs=0.01)
        assert np.isnan(estimate.jump_count_mean)

    def test_exact_b1_distribution(self):
        """Draws follow the tabulated CDF"""
        y = sample_exact_1d(10.0, 2.0, 100.0, 20000, seed=4) / np.sqrt(1000.0)
        grid, cdf = cdf_table_1d(10.0, 2.0, 100.0, 4001)
        empirical = np.mean(y[:, None] <= grid[None, ::400], axis=0)
        assert np.max(np.abs(empirical - cdf[::400])) < 0.02

    def test_exact_b1_draws_stay_in_table(self):
        """Every draw is finite and inside the tabulated support"""
        y = sample_exact_1d(1.0, 0.5, 1.0, 50000, seed=9)
        grid, _ = cdf_table_1d(1.0, 0.5, 1.0, 10_000)
        assert np.all(np.isfinite(y))
        assert np.all(y >= grid[0]) and np.all(y <= grid[-1])
        # No spurious atom at the origin
        assert np.mean(y == 0.0) == 0.0

    def test_exact_sampler_rejects_other_systems(self, a2):
        """Only B_1 is supported"""
        with pytest.raises(SimulationError):
            ExactB1Sampler().sample(a2, make_config([1.0, 0.0, -1.0]))

    def test_hermite_ensemble(self):
        """E|Y|^2 = (beta gamma + N) / beta = 4.5 for A_2 at beta = 2"""
        samples = sample_hermite_ensemble(3, 2.0, 20000, seed=1)
        assert samples.shape == (20000, 3)
        assert np.all(np.diff(samples, axis=1) <= 0.0)
        mean_sq = np.mean(np.sum(samples**2, axis=1))
        assert mean_sq == pytest.approx(4.5, rel=0.03)

    def test_hermite_ensemble_bad_parameters(self):
        """Non-positive beta is rejected"""
        with pytest.raises(SimulationError):
            sample_hermite_ensemble(3, 0.0, 10, seed=1)


# =============================================================================
# RUNNER ACCOUNTING TESTS
# =============================================================================


class TestRunnerAccounting:
    """Test stuck-path handling and result shapes"""

    def test_few_stuck_paths_are_excluded(self, b1):
        """Below 0.1% stuck: dropped from the estimate with a warning"""
        config = make_config([1.0], n_paths=5000)
        estimate = run_ensemble(b1, config, sampler=StuckSampler(2)).estimates[0]
        assert estimate.n_stuck == 2
        assert estimate.n_samples == 4998

    def test_many_stuck_paths_raise(self, b1):
        """Above 0.1% stuck: StuckAtWallError"""
        config = make_config([1.0], n_paths=1000)
        with pytest.raises(StuckAtWallError, match="stuck at wall"):
            run_ensemble(b1, config, sampler=StuckSampler(50))

    def test_density_estimate(self):
        """Histogram densities have unit mass; samples can be dropped"""
        rng = np.random.default_rng(0)
        edges = np.linspace(-3.0, 3.0, 61)
        estimate = DensityEstimate.from_samples(
            1.0, rng.standard_normal((1000, 1)), edges, keep_samples=False
        )
        assert np.sum(estimate.density(0) * np.diff(edges)) == pytest.approx(1.0)
        with pytest.raises(ValueError):
            estimate.ks_distance(lambda y: y)

    def test_result_serialization(self, b1):
        """to_dict carries system, sampler and one entry per time"""
        config = make_config([1.0], n_paths=500, record_schedule=[0.5, 1.0])
        data = run_ensemble(b1, config).to_dict()
        assert data["system"] == "B_1"
        assert data["sampler"] == "exact"
        assert len(data["estimates"]) == 2
        assert data["config"]["seed"] == 11


# =============================================================================
# WALL HANDLING TESTS
# =============================================================================


class TestWallHandling:
    """Test the step size floor, the implicit wall drift and the step budget"""

    def test_step_size_floor(self, b1):
        """Step sizes never drop below SIM_MIN_DT_FRACTION * base_dt"""
        kernel = StepKernel(b1, 1.0)
        states = np.array([[1e-200], [1e-3], [5.0]])
        dt = kernel.adaptive_dt(states, SIM_BASE_DT, 0.05)
        assert dt[0] == pytest.approx(SIM_MIN_DT_FRACTION * SIM_BASE_DT)
        assert dt[1] == pytest.approx(0.05 * 1e-6)
        assert dt[2] == SIM_BASE_DT

    def test_floored_step_stays_off_the_wall(self, b1):
        """A floored step from next to the wall is accepted and finite"""
        kernel = StepKernel(b1, 1.0)
        states = np.full((1000, 1), 1e-150)
        dt = np.full(1000, SIM_MIN_DT_FRACTION * SIM_BASE_DT)
        new, accepted, _ = kernel.propose(states, dt, np.random.default_rng(2))
        assert np.all(accepted)
        assert np.all(np.isfinite(new))
        assert np.all(np.abs(new) > 0.0)

    def test_floored_step_in_two_dimensions(self, a2):
        """Near one wall of A_2 the implicit step keeps the chamber"""
        kernel = StepKernel(a2, 1.0)
        states = np.tile([1.0, 1.0 - 1e-12, -2.0 + 1e-12], (500, 1))
        dt = np.full(500, SIM_MIN_DT_FRACTION * SIM_BASE_DT)
        new, accepted, _ = kernel.propose(states, dt, np.random.default_rng(5))
        assert np.all(accepted)
        assert np.all(np.isfinite(new))

    def test_step_budget_marks_paths_stuck(self, b1):
        """Paths still running when the budget runs out count as stuck"""
        config = make_config([1.0], n_paths=200, max_steps=3)
        with pytest.raises(StuckAtWallError, match="stuck at wall"):
            run_ensemble(b1, config, mode="jump_diffusion")

    def test_bad_step_budget(self, b1):
        """max_steps must be at least 1"""
        status, _ = validate_config(b1, make_config([1.0], max_steps=0))
        assert status == ConfigStatus.BAD_PARAMETER

    def test_max_steps_round_trip(self):
        """max_steps survives to_dict / from_dict"""
        config = make_config([1.0], max_steps=1234)
        assert SimConfig.from_dict(config.to_dict()).max_steps == 1234


# =============================================================================
# LONG-HORIZON TESTS
# =============================================================================


def radial_slope(system: RootSystem, x0: List[float], beta: float) -> float:
    """Least-squares slope of E|X_t|^2 against t from the simulator"""
    times = [0.5, 1.0, 1.5, 2.0]
    config = make_config(
        x0, beta=beta, horizon=2.0, n_paths=4000, record_schedule=times
    )
    result = run_ensemble(system, config, mode="jump_diffusion")
    sq_norms = [beta * e.time * e.sq_norm_mean for e in result.estimates]
    return float(np.polyfit(times, sq_norms, 1)[0])


class TestLongHorizon:
    """Test the simulator where the wall is approached often"""

    def test_b1_unit_coupling_distribution(self, b1):
        """B_1, beta = 1, x0 = 2, t = 20: finishes and matches the exact law"""
        config = make_config(
            [2.0], beta=1.0, horizon=20.0, n_paths=20000, chunk_size=4096
        )
        estimate = run_ensemble(b1, config, mode="jump_diffusion").estimates[0]
        assert estimate.n_stuck == 0
        grid, cdf = cdf_table_1d(20.0, 2.0, 1.0, 4001)
        distance = estimate.ks_distance(lambda y: np.interp(y, grid, cdf))
        assert distance < 0.02
        # <Y> = x0 / sqrt(beta t)
        assert estimate.mean[0] == pytest.approx(2.0 / np.sqrt(20.0), abs=0.06)

    def test_radial_law_a2(self, a2):
        """E|X_t|^2 grows with slope N + beta gamma = 15 on A_2 at beta = 4"""
        slope = radial_slope(a2, [1.0, 0.0, -1.0], 4.0)
        assert slope == pytest.approx(15.0, rel=0.05)

    def test_radial_law_b2(self):
        """E|X_t|^2 grows with slope N + beta gamma = 18 on B_2, nu = 1/2"""
        slope = radial_slope(build_b(2, 0.5), [2.0, 1.0], 4.0)
        assert slope == pytest.approx(18.0, rel=0.05)
