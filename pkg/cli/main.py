"""
Dunkl Process Laboratory CLI

Single entry point for every experiment:

    python -m cli.main rootsys show --system a:4
    python -m cli.main peakset --system a:4
    python -m cli.main density1d --t 20 --beta 1 --x0 2
    python -m cli.main kernel --system b1 --beta 6 --x 1.5 --y 0.7
    python -m cli.main simulate --system a:3 --beta 2 --x0 1,0,-1 --seed 1
    python -m cli.main verify-steady --config config/experiment.yaml
    python -m cli.main verify-freeze --x0 2
    python -m cli.main reproduce-figures --fig 1 --out output/

Exit codes:
    0 - success
    1 - a domain error or a failed verification
    2 - usage error (unknown flags, missing --seed on randomized commands)
"""

import argparse
import logging
import logging.handlers
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from asymfit import FitError
from cli.commands import COMMANDS
from cli.figures import FIGURES
from cli.models.experiment_config import (
    ConfigError,
    ExperimentConfig,
    load_experiment,
)
from config.settings import LOG_DIR, LOG_FILE, LOG_LEVEL
from exact1d import Exact1DError
from potential import PotentialError
from rootsys import RootSystemError
from simulate import SimulationError

DOMAIN_ERRORS = (
    ConfigError,
    RootSystemError,
    PotentialError,
    Exact1DError,
    SimulationError,
    FitError,
    ValueError,
)


def setup_logging(level: str = LOG_LEVEL, log_dir: Path = LOG_DIR) -> None:
    """
    Configure logging for a CLI run.

    Console output goes to stderr so JSON printed on stdout stays clean;
    a daily rotating file keeps 7 days under log_dir (./logs when log_dir
    is not writable).
    """
    logger = logging.getLogger()
    logger.setLevel(level.upper())
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    log_format = logging.Formatter("%(message)s | %(name)s | %(levelname)s")
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(log_format)
    logger.addHandler(console_handler)

    log_file = Path(log_dir) / LOG_FILE
    try:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.handlers.TimedRotatingFileHandler(
            log_file,
            when="midnight",
            interval=1,
            backupCount=7,
            encoding="utf-8",
        )
    except OSError:
        fallback_log = Path("logs") / LOG_FILE
        fallback_log.parent.mkdir(exist_ok=True)
        logger.warning(f"Cannot write to {log_file}, using fallback: {fallback_log}")
        file_handler = logging.handlers.TimedRotatingFileHandler(
            fallback_log,
            when="midnight",
            interval=1,
            backupCount=7,
            encoding="utf-8",
        )
    file_handler.setFormatter(log_format)
    logger.addHandler(file_handler)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, help="Experiment YAML file")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING...")
    parser.add_argument("--system", help="Root system spec (a:4, b1, ...) or JSON file")
    parser.add_argument("--beta", type=float, help="Coupling beta > 0")
    parser.add_argument("--output-dir", type=Path, help="Output directory")


def _float_list(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated numbers, got '{text}'"
        )


def _add_process(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--t", type=float, help="Time t > 0")
    parser.add_argument("--times", type=_float_list, help="Comma-separated times")
    parser.add_argument(
        "--x0", type=_float_list, help="Starting point, comma-separated"
    )
    parser.add_argument(
        "--symmetrize",
        action="store_true",
        default=None,
        help="Start from the uniform mixture over the Weyl orbit of x0",
    )


def _add_simulation(parser: argparse.ArgumentParser, seed_required: bool) -> None:
    parser.add_argument("--seed", type=int, required=seed_required, help="RNG seed")
    parser.add_argument("--n-paths", type=int, help="Number of paths")
    parser.add_argument("--max-workers", type=int, help="Worker threads")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command"""
    parser = argparse.ArgumentParser(
        prog="dunkl",
        description="Dunkl processes on root systems: exact densities, "
        "Monte Carlo ensembles and asymptotic checks",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rootsys = sub.add_parser("rootsys", help="Describe or validate a root system")
    rootsys.add_argument("action", choices=["show", "validate"])
    rootsys.add_argument("--file", type=Path, help="Root system JSON (validate)")
    rootsys.add_argument(
        "--spectral-degree", type=int, default=0, help="Also run the A/B spectral check"
    )
    rootsys.add_argument("--out", type=Path, help="Write JSON here instead of stdout")
    _add_common(rootsys)

    peakset = sub.add_parser("peakset", help="Peak set of F_R as JSON")
    peakset.add_argument("--out", type=Path, help="Write JSON here instead of stdout")
    _add_common(peakset)

    density = sub.add_parser("density1d", help="Tabulate an exact B_1 curve")
    density.add_argument(
        "--curve",
        default="scaled",
        choices=["scaled", "steady", "gtilde", "first_order"],
    )
    density.add_argument("--points", type=int, default=2001)
    density.add_argument("--half-width", type=float, default=2.5)
    density.add_argument("--out", type=Path, help="CSV file")
    _add_common(density)
    _add_process(density)

    kernel = sub.add_parser("kernel", help="Intertwined exponential kernel values")
    kernel.add_argument("--x", required=True, help="Point x, comma-separated")
    kernel.add_argument("--y", required=True, help="Point y, comma-separated")
    kernel.add_argument("--out", type=Path, help="Write JSON here instead of stdout")
    _add_common(kernel)

    simulate = sub.add_parser("simulate", help="Monte Carlo ensemble")
    simulate.add_argument(
        "--mode", default="auto", choices=["auto", "jump_diffusion", "exact"]
    )
    _add_common(simulate)
    _add_process(simulate)
    _add_simulation(simulate, seed_required=True)

    steady = sub.add_parser("verify-steady", help="Steady-state decay exponent")
    steady.add_argument("--source", choices=["exact", "monte_carlo"])
    steady.add_argument("--test-function", choices=["linear", "square"])
    steady.add_argument("--bootstrap", action="store_true", default=None)
    _add_common(steady)
    _add_process(steady)
    _add_simulation(steady, seed_required=False)

    freeze = sub.add_parser("verify-freeze", help="Strong-coupling mechanism exponents")
    freeze.add_argument("--source", choices=["exact", "monte_carlo"])
    freeze.add_argument("--betas", type=_float_list, help="Comma-separated beta grid")
    freeze.add_argument(
        "--freeze-times", type=_float_list, help="Comma-separated t grid"
    )
    _add_common(freeze)
    _add_process(freeze)
    _add_simulation(freeze, seed_required=False)

    figures = sub.add_parser("reproduce-figures", help="CSV data of the B_1 figures")
    figures.add_argument(
        "--fig", required=True, choices=FIGURES, help="1, 2, 3 or a figure name"
    )
    figures.add_argument("--out", type=Path, help="Output directory")
    _add_common(figures)

    return parser


def merge_config(args: argparse.Namespace) -> ExperimentConfig:
    """Experiment file (or defaults) with command line flags applied on top"""
    base = load_experiment(args.config) if args.config else ExperimentConfig()
    flag_names = {
        "system": "system",
        "beta": "beta",
        "t": "t",
        "times": "times",
        "x0": "x0",
        "symmetrize": "symmetrize",
        "seed": "seed",
        "n_paths": "n_paths",
        "max_workers": "max_workers",
        "source": "source",
        "test_function": "test_function",
        "bootstrap": "bootstrap",
        "betas": "freeze_betas",
        "freeze_times": "freeze_times",
        "output_dir": "output_dir",
    }
    overrides = {
        field_name: getattr(args, flag)
        for flag, field_name in flag_names.items()
        if hasattr(args, flag)
    }
    return base.with_overrides(**overrides)


def _needs_seed(args: argparse.Namespace, config: ExperimentConfig) -> bool:
    if args.command == "simulate":
        return True
    return args.command in ("verify-steady", "verify-freeze") and (
        config.source == "monte_carlo"
    )


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv, run one subcommand and return its exit code.

    Returns:
        0 on success, 1 on domain errors or failed checks, 2 on usage errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else 2

    logger = logging.getLogger(__name__)
    try:
        config = merge_config(args)
    except ConfigError as e:
        logger.error(f"Invalid experiment: {e}")
        return 1

    setup_logging(args.log_level or LOG_LEVEL)
    if _needs_seed(args, config) and config.seed is None:
        parser.print_usage(sys.stderr)
        logger.error(f"{args.command} is randomized and needs --seed")
        return 2

    try:
        return COMMANDS[args.command](args, config)
    except DOMAIN_ERRORS as e:
        logger.error(f"{args.command} failed: {e}")
        return 1


def main() -> None:
    """Console entry point"""
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
