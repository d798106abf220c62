"""
Central Configuration File

ALL numeric defaults live here. This is the single source of truth.

Guidelines:
- Per-machine overrides (output directory, log directory, worker count) go in
  .env or the environment, NOT here
- Import these settings in modules: from config.settings import PEAK_MAX_ITER
- Experiment parameters (beta, t, initial conditions) belong in experiment
  YAML files (see config/experiment.yaml), not here
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# =============================================================================
# ROOT SYSTEMS
# =============================================================================

ROOT_DEDUP_TOLERANCE = 1e-10  # Two roots closer than this are the same root
ROOT_CLOSURE_TOLERANCE = 1e-12  # sigma_alpha R = R checked to this distance
POSITIVE_CHOICE_MIN_DOT = 1e-8  # Reject m vectors with |m.alpha| below this
POSITIVE_CHOICE_MAX_TRIES = 100  # Random m draws before giving up
POSITIVE_CHOICE_SEED = 0  # Seed for the m draw when none is supplied
KAPPA_TOLERANCE = 1e-12  # Relative tolerance for kappa comparisons

# Weyl group closure
WEYL_GROUP_CAP = int(os.getenv("DUNKL_WEYL_GROUP_CAP", "1000000"))  # elements
WEYL_HASH_DECIMALS = 9  # Matrix entries rounded to this many places for hashing
WEYL_MATRIX_TOLERANCE = 1e-9  # Matrix distance treated as equality

# Multiplicity normalization rule when no kappa equals 1
# "longest" | "shortest" | "none"
KAPPA_NORMALIZATION = "longest"

# =============================================================================
# PEAK SOLVER
# =============================================================================

PEAK_MAX_ITER = 200  # Damped Newton iterations
PEAK_GRADIENT_TOLERANCE = 1e-12  # Stop when |grad F_R| drops below this
PEAK_RESIDUAL_LIMIT = 1e-10  # Residual accepted at every orbit point
PEAK_ORBIT_TOLERANCE = 1e-8  # Orbit points closer than this are merged
PEAK_MAX_HALVINGS = 60  # Backtracking line search halvings per iteration
WALL_TOLERANCE = 1e-300  # |alpha.Y| below this counts as wall contact

# Asymptotic formulas warn when a "much greater than" condition holds by
# less than this factor
VALIDITY_MARGIN = 10.0

# =============================================================================
# QUADRATURE
# =============================================================================

QUAD_EPSABS = 1e-12  # Absolute tolerance for adaptive quadrature
QUAD_EPSREL = 1e-10  # Relative tolerance for adaptive quadrature
QUAD_LIMIT = 400  # Subinterval limit for scipy.integrate.quad
QUAD_TAIL_EXPONENT = 40.0  # Domain half-width sqrt(2 * 40 / beta) + shift + 5
QUAD_TAIL_PAD = 5.0

# Tolerance radius r(delta)
TOLERANCE_DELTA = 1e-3  # delta used by the steady-state experiments
TOLERANCE_BISECTION_XTOL = 1e-10
SURROGATE_SAMPLES = 200_000  # Gaussian surrogate draws for N > 2
SURROGATE_SEED = 20150401  # Fixed so r(delta) is deterministic

# Large-beta normalization switch: above this beta the Gaussian path is used
# when no closed form exists and N > 2
GAUSSIAN_NORMALIZATION_MIN_BETA = 50.0

# =============================================================================
# SPECIAL FUNCTIONS
# =============================================================================

BESSEL_SERIES_OFFSET = 20.0  # Power series for z < 20 + nu, asymptotics beyond
BESSEL_SERIES_MAX_TERMS = 5000
DEBYE_MIN_ORDER = 1000.0  # Debye expansion is at machine precision from here on
KERNEL_SERIES_RADIUS = 1.0  # Taylor series of the B_1 kernel for |z| below this

# =============================================================================
# SIMULATION
# =============================================================================

SIM_BASE_DT = 1e-2  # Upper bound on the Euler-Maruyama step
SIM_DT_SAFETY = 0.05  # Fraction of the squared wall distance per step
SIM_MIN_DT_FRACTION = 1e-8  # Step size floor, as a fraction of base_dt
SIM_MAX_HALVINGS = 10  # dt halvings before a path is declared stuck
SIM_MAX_STEPS = 2_000_000  # Batched steps per chunk; paths still running are stuck
SIM_STUCK_FRACTION = 1e-3  # Error when more than 0.1% of paths are stuck
SIM_CHUNK_SIZE = 4096  # Paths per RNG stream / worker task
SIM_MAX_WORKERS = int(os.getenv("DUNKL_MAX_WORKERS", "1"))
SIM_HISTOGRAM_BINS = 200  # Bins per axis
SIM_HISTOGRAM_HALF_WIDTH = 3.0  # Histogram covers [-3 sqrt(gamma), 3 sqrt(gamma)]

# Exact B_1 sampler
EXACT_SAMPLER_GRID = 10_000  # Points in the tabulated inverse CDF

# =============================================================================
# FITTING
# =============================================================================

FIT_SIGNAL_FLOOR = 1e-12  # Deviations below this are numerical noise
FIT_MIN_TIMES = 4  # Decay fits need at least this many times
FIT_MIN_DECADES = 1.5  # ... spanning at least this many decades
FIT_WINDOW_SIGMAS = 4.0  # Peak window half-width in units of 1/sqrt(beta lambda)
FIT_GRID_POINTS = 4001  # Grid for fitting exact 1-d densities
BOOTSTRAP_RESAMPLES = 200
BOOTSTRAP_SEED = 7

# =============================================================================
# VERIFICATION
# =============================================================================

VERIFY_STEADY_TIMES = [1e2, 1e3, 1e4, 1e5]  # Decay fit times
VERIFY_SLOPE_TOLERANCE = 0.02  # Exact linear decay slope
VERIFY_SYMMETRIC_SLOPE_TOLERANCE = 0.15  # Symmetrized start, or Monte Carlo data
VERIFY_FREEZE_BETAS = [50.0, 200.0, 800.0]
VERIFY_FREEZE_TIMES = [5.0, 20.0, 80.0]
VERIFY_EXPONENT_TOLERANCE = 0.05  # Mechanism exponents in beta t
VERIFY_MC_EXPONENT_TOLERANCE = 0.2

# Figure data
FIGURE_GRID_POINTS = 4001
FIGURE_HALF_WIDTH = 2.5  # Y range [-2.5, 2.5]

# =============================================================================
# OUTPUT AND LOGGING
# =============================================================================

OUTPUT_DIR = Path(os.getenv("DUNKL_OUTPUT_DIR", "./output"))
LOG_DIR = Path(os.getenv("DUNKL_LOG_DIR", "./logs"))
LOG_FILE = "dunkl.log"
LOG_LEVEL = os.getenv("DUNKL_LOG_LEVEL", "INFO")

# Default experiment file (YAML)
DEFAULT_EXPERIMENT_FILE = Path(__file__).parent / "experiment.yaml"
