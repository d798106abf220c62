"""
Validation Utilities

Non-raising checks of root system files, used by `rootsys validate`.
"""

import json
import logging
from pathlib import Path
from typing import Optional, Tuple

from rootsys.builders import validate
from rootsys.constants import ValidationStatus

logger = logging.getLogger(__name__)


def validate_root_system_file(path: Path) -> Tuple[ValidationStatus, Optional[str]]:
    """
    Validate a root system JSON file.

    Performs these checks in order:
    1. File exists and parses as a JSON object with a "roots" list
    2. Declared ambient_dim matches the roots
    3. Roots form a closed, reduced system with W-invariant kappa

    Args:
        path: Path to the JSON document

    Returns:
        Tuple of (ValidationStatus, error_message)

    Example:
        status, error = validate_root_system_file(Path("b2.json"))
        if status != ValidationStatus.VALID:
            print(f"Invalid root system: {error}")
    """
    path = Path(path)
    if not path.exists():
        return ValidationStatus.MALFORMED, f"File not found: {path}"

    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        return ValidationStatus.MALFORMED, f"Cannot parse {path}: {e}"

    if not isinstance(data, dict) or not isinstance(data.get("roots"), list):
        return (
            ValidationStatus.MALFORMED,
            "Document must be an object with a 'roots' list",
        )

    roots = data["roots"]
    declared = data.get("ambient_dim")
    if declared is not None and any(len(root) != declared for root in roots):
        return (
            ValidationStatus.DEGENERATE,
            f"Roots do not all have the declared dimension {declared}",
        )

    status, error = validate(roots, kappa=data.get("kappa", 1.0))
    if status != ValidationStatus.VALID:
        logger.warning(f"{path.name}: {status.value} ({error})")
    return status, error
