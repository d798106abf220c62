"""
Root System Serialization

JSON documents of the form

    {
        "ambient_dim": 2,
        "roots": [[1, 0], [-1, 0], ...],
        "kappa": [1.0, 1.0, ...],
        "positive_choice_vector": [0.9, 0.4]
    }

Optional "family" and "name" keys are written and read back when present.
Loading always re-runs the full validation chain.
"""

import json
import logging
from pathlib import Path
from typing import Union

from rootsys.models.root_system import RootSystem

logger = logging.getLogger(__name__)


def to_json(system: RootSystem, indent: int = 2) -> str:
    """Serialize a root system to a JSON string"""
    return json.dumps(system.to_dict(), indent=indent)


def from_json(text: str) -> RootSystem:
    """
    Parse and validate a root system from a JSON string.

    Raises:
        json.JSONDecodeError: If the text is not JSON
        RootSystemError: If the document describes an invalid system
    """
    return RootSystem.from_dict(json.loads(text))


def save_root_system(system: RootSystem, path: Union[str, Path]) -> Path:
    """
    Write a root system to `path`, creating parent directories.

    Returns:
        The path written
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_json(system) + "\n", encoding="utf-8")
    logger.info(f"Saved {system.name} to {path}")
    return path


def load_root_system(path: Union[str, Path]) -> RootSystem:
    """Read and validate a root system JSON file"""
    path = Path(path)
    system = from_json(path.read_text(encoding="utf-8"))
    logger.debug(f"Loaded {system!r} from {path}")
    return system
