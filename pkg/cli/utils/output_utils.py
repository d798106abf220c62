"""
Output Utilities

CSV tables and JSON reports written by the commands, plus the JSON schemas
the reports follow (cli/schemas). CSV headers name every column with its
unit in brackets.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Mapping, Union

import numpy as np

logger = logging.getLogger(__name__)

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "schemas"
SCHEMA_NAMES = (
    "rootsys",
    "peakset",
    "kernel",
    "simulate",
    "verify_steady",
    "verify_freeze",
)


def _to_builtin(value: Any) -> Any:
    """json.dumps fallback for numpy scalars, arrays and paths"""
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def to_json_text(data: Mapping[str, Any]) -> str:
    """Pretty JSON with numpy values converted"""
    return json.dumps(data, indent=2, default=_to_builtin)


def write_json(path: Union[str, Path], data: Mapping[str, Any]) -> Path:
    """Write a JSON report, creating parent directories"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_json_text(data) + "\n", encoding="utf-8")
    logger.info(f"Wrote {path}")
    return path


def write_csv(path: Union[str, Path], columns: Dict[str, np.ndarray]) -> Path:
    """
    Write equal-length columns as CSV.

    Args:
        path: Output file
        columns: Header (with unit) -> values, in column order

    Raises:
        ValueError: If the columns differ in length
    """
    arrays = [np.asarray(v, dtype=np.float64).reshape(-1) for v in columns.values()]
    if len({a.size for a in arrays}) > 1:
        raise ValueError("CSV columns must have equal length")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    np.savetxt(
        path,
        np.column_stack(arrays),
        delimiter=",",
        header=",".join(columns),
        comments="",
        fmt="%.12g",
    )
    logger.info(f"Wrote {path} ({arrays[0].size} rows)")
    return path


def load_schema(name: str) -> Dict[str, Any]:
    """
    JSON schema of one command's JSON output.

    Raises:
        ValueError: If no schema ships under that name
    """
    if name not in SCHEMA_NAMES:
        raise ValueError(f"No output schema named '{name}'; have {SCHEMA_NAMES}")
    return json.loads((SCHEMA_DIR / f"{name}.json").read_text(encoding="utf-8"))


def read_csv(path: Union[str, Path]) -> Dict[str, np.ndarray]:
    """Read a CSV written by write_csv back into named columns"""
    path = Path(path)
    header = path.read_text(encoding="utf-8").splitlines()[0].split(",")
    data = np.atleast_2d(np.loadtxt(path, delimiter=",", skiprows=1))
    return {name: data[:, i] for i, name in enumerate(header)}
