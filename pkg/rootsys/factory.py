"""
Root System Factory

Creates root systems from short spec strings ("a:4", "b:2:0.5",
"dihedral:6") or JSON files. Follows the same pattern as the other
package factories: a classmethod-based factory plus a convenience function.
"""

import logging
from pathlib import Path
from typing import Union

from rootsys.builders import build_a, build_b, build_dihedral
from rootsys.models.root_system import RootSystem, RootSystemError
from rootsys.utils.serialization import load_root_system
from rootsys.utils.spec_parser import (
    SystemSpec,
    SystemSpecParseError,
    parse_system_spec,
)


class RootSystemFactory:
    """
    Factory for built-in and file-based root systems.

    Usage:
        # Built-in family
        system = RootSystemFactory.create_root_system("a:4")

        # JSON document written by save_root_system()
        system = RootSystemFactory.create_root_system("systems/b2.json")
    """

    _logger = logging.getLogger(__name__)

    @classmethod
    def create_root_system(cls, spec: Union[str, SystemSpec]) -> RootSystem:
        """
        Create a root system.

        Args:
            spec: Spec string or an already parsed SystemSpec

        Returns:
            Validated RootSystem

        Raises:
            RootSystemError: If the spec is malformed or the system invalid
        """
        try:
            parsed = spec if isinstance(spec, SystemSpec) else parse_system_spec(spec)
        except SystemSpecParseError as e:
            raise RootSystemError(f"Invalid root system spec: {e}") from e

        if parsed.family == "file":
            path = Path(parsed.path)
            if not path.exists():
                raise RootSystemError(f"Root system file not found: {path}")
            cls._logger.info(f"Loading root system from {path}")
            return load_root_system(path)

        params = parsed.params
        if parsed.family == "a":
            cls._logger.info(f"Creating A_{int(params[0]) - 1}")
            return build_a(int(params[0]))

        if parsed.family == "b":
            nu = params[1] if len(params) > 1 else 0.5
            cls._logger.info(f"Creating B_{int(params[0])} (nu={nu:g})")
            return build_b(int(params[0]), nu)

        kappa_a = params[1] if len(params) > 1 else 1.0
        kappa_b = params[2] if len(params) > 2 else None
        cls._logger.info(f"Creating I_2({int(params[0])})")
        return build_dihedral(int(params[0]), kappa_a, kappa_b)


# Convenience function for quick creation


def create_root_system(spec: str) -> RootSystem:
    """
    Quick root system creation.

    Example:
        system = create_root_system("b:3:2")
    """
    return RootSystemFactory.create_root_system(spec)
