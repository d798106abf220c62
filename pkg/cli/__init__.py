"""
Command-Line Module

Unified entry point, experiment configuration and machine-readable output.

Layout:
- main.py: argument parsing, dispatch(), setup_logging()
- commands.py: one handler per subcommand
- figures.py: figure data as CSV
- models/: ExperimentConfig
- utils/: CSV/JSON writers, named test functions
"""

# ============================================================================
# cli/__init__.py - Main Package Exports
# ============================================================================

from cli.figures import figure_name, figure_tables, reproduce_figures
from cli.main import build_parser, dispatch, main, setup_logging
from cli.models.experiment_config import (
    ConfigError,
    ExperimentConfig,
    load_experiment,
    save_experiment,
)

# Public API (sorted alphabetically)
__all__ = [
    "ConfigError",
    "ExperimentConfig",
    "build_parser",
    "dispatch",
    "figure_name",
    "figure_tables",
    "load_experiment",
    "main",
    "reproduce_figures",
    "save_experiment",
    "setup_logging",
]
