"""
Figure Data

Regenerates the B_1 density curves behind the three standard plots as CSV
tables, all for a process started at x0 = 2. Figures are selected by number
or by name:

- 1, relaxation: f(t, Y) against the steady state for t in {2, 20, 200, 2000},
  beta = 1
- 2, coupling: f(t, Y) against G~_beta for beta in {2, 100, 5000}, t = 10
- 3, crossover: steady state, G~_beta and f(t, Y) for t in {1, 10, 100, 1000},
  beta = 6

One CSV is written per curve set, with a Y column first.
"""

import logging
from pathlib import Path
from typing import Dict, List, Sequence, Union

import numpy as np

from cli.utils.output_utils import write_csv
from config.settings import FIGURE_GRID_POINTS, FIGURE_HALF_WIDTH
from exact1d import DensityCurve, density_grid

logger = logging.getLogger(__name__)

FIGURE_X0 = 2.0

RELAXATION_TIMES = (2.0, 20.0, 200.0, 2000.0)
RELAXATION_BETA = 1.0
COUPLING_BETAS = (2.0, 100.0, 5000.0)
COUPLING_TIME = 10.0
CROSSOVER_TIMES = (1.0, 10.0, 100.0, 1000.0)
CROSSOVER_BETA = 6.0

FIGURE_NAMES = {"1": "relaxation", "2": "coupling", "3": "crossover"}
FIGURES = (*FIGURE_NAMES, *FIGURE_NAMES.values())

Y_COLUMN = "Y [scaled position]"
CURVE_COLUMNS = {
    DensityCurve.SCALED: "f [density per unit Y]",
    DensityCurve.STEADY: "steady [density per unit Y]",
    DensityCurve.GTILDE: "gtilde [density per unit Y]",
}


def figure_grid(points: int = FIGURE_GRID_POINTS) -> np.ndarray:
    """Symmetric Y grid shared by every figure"""
    return np.linspace(-FIGURE_HALF_WIDTH, FIGURE_HALF_WIDTH, points)


def curve_table(
    t: float,
    beta: float,
    curves: Sequence[DensityCurve],
    x0: float = FIGURE_X0,
    grid: Union[np.ndarray, None] = None,
) -> Dict[str, np.ndarray]:
    """Columns {Y, curve...} for one (t, beta) cell"""
    grid = figure_grid() if grid is None else grid
    table = {Y_COLUMN: grid}
    for curve in curves:
        density = density_grid(t, x0, beta, grid, curve)
        if not density.is_normalized():
            logger.warning(f"{density!r} is not normalized to 1e-6")
        table[CURVE_COLUMNS[curve]] = density.values
    return table


def figure_name(which: Union[int, str]) -> str:
    """Resolve a figure number (1, 2, 3) to its name; names pass through"""
    name = FIGURE_NAMES.get(str(which), str(which))
    if name not in FIGURE_NAMES.values():
        raise ValueError(f"Unknown figure '{which}' (expected one of {FIGURES})")
    return name


def figure_tables(which: Union[int, str]) -> Dict[str, Dict[str, np.ndarray]]:
    """
    Tables for one figure, keyed by file stem.

    Raises:
        ValueError: If `which` is not one of FIGURES
    """
    which = figure_name(which)
    if which == "relaxation":
        curves = (DensityCurve.SCALED, DensityCurve.STEADY)
        return {
            f"relaxation_t{t:g}": curve_table(t, RELAXATION_BETA, curves)
            for t in RELAXATION_TIMES
        }
    if which == "coupling":
        curves = (DensityCurve.SCALED, DensityCurve.GTILDE)
        return {
            f"coupling_beta{beta:g}": curve_table(COUPLING_TIME, beta, curves)
            for beta in COUPLING_BETAS
        }
    curves = (DensityCurve.STEADY, DensityCurve.GTILDE, DensityCurve.SCALED)
    return {
        f"crossover_t{t:g}": curve_table(t, CROSSOVER_BETA, curves)
        for t in CROSSOVER_TIMES
    }


def reproduce_figures(which: Union[int, str], out_dir: Union[str, Path]) -> List[Path]:
    """
    Write the CSV tables of one figure.

    Args:
        which: 1, 2 or 3, or "relaxation", "coupling" or "crossover"
        out_dir: Output directory (created when missing)

    Returns:
        Paths of the written files, in table order
    """
    out_dir = Path(out_dir)
    which = figure_name(which)
    logger.info(f"Reproducing {which} figure data into {out_dir}")
    return [
        write_csv(out_dir / f"{stem}.csv", table)
        for stem, table in figure_tables(which).items()
    ]
