"""
Experiment Config Model

Everything one experiment needs: the root system, beta and times, the
initial condition, simulator settings, verification tolerances and the
output directory. Loaded from YAML (see config/experiment.yaml); command
line flags override file values.
"""

from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml

from config.settings import (
    OUTPUT_DIR,
    SIM_BASE_DT,
    SIM_DT_SAFETY,
    SIM_MAX_WORKERS,
    VERIFY_EXPONENT_TOLERANCE,
    VERIFY_FREEZE_BETAS,
    VERIFY_FREEZE_TIMES,
    VERIFY_MC_EXPONENT_TOLERANCE,
    VERIFY_SLOPE_TOLERANCE,
    VERIFY_STEADY_TIMES,
    VERIFY_SYMMETRIC_SLOPE_TOLERANCE,
)

SOURCES = ("exact", "monte_carlo")
TEST_FUNCTIONS = ("linear", "square")


class ConfigError(Exception):
    """
    Exception raised for invalid experiment files.

    Examples:
    - YAML that does not parse or is not a mapping
    - Unknown keys
    - Nonpositive beta or times
    """


def default_tolerances() -> Dict[str, float]:
    """Verification tolerances from config/settings.py"""
    return {
        "slope": VERIFY_SLOPE_TOLERANCE,
        "symmetric_slope": VERIFY_SYMMETRIC_SLOPE_TOLERANCE,
        "exponent": VERIFY_EXPONENT_TOLERANCE,
        "mc_exponent": VERIFY_MC_EXPONENT_TOLERANCE,
        "coefficient": 1e-3,
        "center": 1e-3,
        "variance": 2e-4,
    }


@dataclass
class ExperimentConfig:
    """
    One experiment.

    system is a root system spec ("a:3", "b1", "dihedral:6") or the path of
    a root system JSON file.
    """

    system: str = "b1"
    beta: float = 1.0
    t: float = 10.0
    times: Optional[List[float]] = None  # per-command default when unset
    x0: List[float] = field(default_factory=lambda: [2.0])
    symmetrize: bool = False
    source: str = "exact"
    test_function: str = "linear"
    n_paths: int = 10_000
    seed: Optional[int] = None
    base_dt: float = SIM_BASE_DT
    dt_safety: float = SIM_DT_SAFETY
    max_workers: int = SIM_MAX_WORKERS
    bootstrap: bool = False
    freeze_betas: List[float] = field(default_factory=lambda: list(VERIFY_FREEZE_BETAS))
    freeze_times: List[float] = field(default_factory=lambda: list(VERIFY_FREEZE_TIMES))
    tolerances: Dict[str, float] = field(default_factory=default_tolerances)
    output_dir: Path = OUTPUT_DIR

    def __post_init__(self):
        self.output_dir = Path(self.output_dir)
        self.x0 = [float(v) for v in self.x0]
        if self.times is not None:
            self.times = sorted(float(v) for v in self.times)
        self.freeze_betas = sorted(float(v) for v in self.freeze_betas)
        self.freeze_times = sorted(float(v) for v in self.freeze_times)
        merged = default_tolerances()
        merged.update({k: float(v) for k, v in self.tolerances.items()})
        self.tolerances = merged
        self.validate()

    def validate(self) -> None:
        """
        Check value ranges.

        Raises:
            ConfigError: On the first invalid value
        """
        if not self.beta > 0.0 or not self.t > 0.0:
            raise ConfigError(f"beta and t must be positive, got {self.beta}, {self.t}")
        for name in ("times", "freeze_betas", "freeze_times"):
            values = getattr(self, name)
            if name == "times" and values is None:
                continue
            if not values or min(values) <= 0.0:
                raise ConfigError(f"{name} must be a nonempty list of positive values")
        if not self.x0:
            raise ConfigError("x0 must have at least one coordinate")
        if self.source not in SOURCES:
            raise ConfigError(f"source must be one of {SOURCES}, got '{self.source}'")
        if self.test_function not in TEST_FUNCTIONS:
            raise ConfigError(
                f"test_function must be one of {TEST_FUNCTIONS}, "
                f"got '{self.test_function}'"
            )
        if self.n_paths < 2 or self.max_workers < 1:
            raise ConfigError("n_paths must be at least 2 and max_workers at least 1")
        if not (self.base_dt > 0.0 and 0.0 < self.dt_safety < 1.0):
            raise ConfigError("base_dt must be positive and dt_safety in (0, 1)")
        if any(v <= 0.0 for v in self.tolerances.values()):
            raise ConfigError("tolerances must be positive")

    @property
    def steady_times(self) -> List[float]:
        """Times of the steady-state decay fit"""
        return self.times if self.times is not None else list(VERIFY_STEADY_TIMES)

    @property
    def simulate_times(self) -> List[float]:
        """Recorded times of a simulation; t alone when times is unset"""
        return self.times if self.times is not None else [self.t]

    def with_overrides(self, **overrides: Any) -> "ExperimentConfig":
        """Copy with every non-None override applied"""
        data = self.to_dict()
        data.update({k: v for k, v in overrides.items() if v is not None})
        return ExperimentConfig.from_dict(data)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary (YAML/JSON friendly)"""
        data = {f.name: getattr(self, f.name) for f in fields(self)}
        data["output_dir"] = str(self.output_dir)
        data["tolerances"] = dict(self.tolerances)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ExperimentConfig":
        """
        Create from dictionary.

        Raises:
            ConfigError: On unknown keys or invalid values
        """
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"Unknown experiment keys: {', '.join(unknown)}")
        try:
            return cls(**data)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid experiment values: {e}") from e

    def __repr__(self) -> str:
        """Human-readable representation"""
        return (
            f"ExperimentConfig(system={self.system}, beta={self.beta:g}, t={self.t:g}, "
            f"x0={self.x0}, source={self.source}, seed={self.seed})"
        )


def load_experiment(path: Union[str, Path]) -> ExperimentConfig:
    """
    Load an experiment file.

    Raises:
        ConfigError: If the file is missing, not YAML, or invalid
    """
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"Experiment file not found: {path}")
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except yaml.YAMLError as e:
        raise ConfigError(f"Cannot parse {path}: {e}") from e
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError(f"{path} must hold a mapping at the top level")
    return ExperimentConfig.from_dict(data)


def save_experiment(config: ExperimentConfig, path: Union[str, Path]) -> Path:
    """Write an experiment file that load_experiment reads back"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(yaml.safe_dump(config.to_dict(), sort_keys=False), encoding="utf-8")
    return path
