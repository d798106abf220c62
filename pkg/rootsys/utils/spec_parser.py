"""
System Spec Parser

Parses short root system specifications used on the command line and in
experiment files.

Spec Format:
    "<family>:<param>[:<param>...]"

    - a:N                 -> A_{N-1} on N particles
    - b:N[:nu]            -> B_N with Bessel index nu (default 0.5)
    - b1                  -> B_1 (shorthand)
    - dihedral:m[:ka[:kb]] -> I_2(m), optional orbit multiplicities
    - anything ending in .json -> root system file

Examples:
    "a:4"          -> A_3, gamma = 6, |W| = 24
    "b:2:0.5"      -> B_2, gamma = 4
    "dihedral:6"   -> I_2(6) = G_2 shape with unit roots
"""

import logging
from dataclasses import dataclass, field
from typing import List

logger = logging.getLogger(__name__)


class SystemSpecParseError(ValueError):
    """Raised when a root system spec string is invalid."""


@dataclass
class SystemSpec:
    """Parsed root system specification"""

    family: str  # "a", "b", "dihedral" or "file"
    params: List[float] = field(default_factory=list)
    path: str = ""


def parse_system_spec(spec: str) -> SystemSpec:
    """
    Parse a root system spec string.

    Args:
        spec: Spec such as "a:4", "b:2:0.5", "b1", "dihedral:6" or "sys.json"

    Returns:
        SystemSpec

    Raises:
        SystemSpecParseError: If the spec is invalid
    """
    if not isinstance(spec, str) or not spec.strip():
        raise SystemSpecParseError("Root system spec must be a non-empty string")

    text = spec.strip()
    if text.lower().endswith(".json"):
        return SystemSpec(family="file", path=text)

    lowered = text.lower()
    if lowered == "b1":
        return SystemSpec(family="b", params=[1.0])

    family, *raw_params = lowered.split(":")
    if family not in ("a", "b", "dihedral"):
        raise SystemSpecParseError(
            f"Unknown root system family '{family}' in '{spec}' "
            f"(expected a, b, dihedral or a .json file)"
        )

    try:
        params = [float(p) for p in raw_params]
    except ValueError as e:
        raise SystemSpecParseError(f"Non-numeric parameter in '{spec}': {e}") from e

    limits = {"a": (1, 1), "b": (1, 2), "dihedral": (1, 3)}
    low, high = limits[family]
    if not low <= len(params) <= high:
        raise SystemSpecParseError(
            f"'{family}' takes {low} to {high} parameter(s), "
            f"got {len(params)} in '{spec}'"
        )
    if params[0] != int(params[0]):
        raise SystemSpecParseError(f"Rank parameter must be an integer in '{spec}'")

    return SystemSpec(family=family, params=params)
