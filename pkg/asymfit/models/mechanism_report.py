"""
Mechanism Report Model

Power-law exponents in beta t of the three ways a finite-time density
approaches the strong-coupling limit: peak positions, peak widths and peak
heights.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from asymfit.models.decay_fit import PowerLawFit


@dataclass
class MechanismReport:
    """
    Fitted exponents with standard errors.

    Expected: center shift -1, variance shift -1, coefficient asymmetry -1/2.
    coefficient_fit is None when the asymmetry vanishes (symmetric start).
    """

    beta_t: List[float]
    center_shifts: List[float]
    variance_shifts: List[float]
    coefficient_asymmetries: List[float]
    center_fit: PowerLawFit
    variance_fit: PowerLawFit
    coefficient_fit: Optional[PowerLawFit] = None
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def exponents(self) -> Dict[str, Optional[float]]:
        """Fitted exponents by mechanism"""
        return {
            "center": self.center_fit.slope,
            "variance": self.variance_fit.slope,
            "coefficient": (
                None if self.coefficient_fit is None else self.coefficient_fit.slope
            ),
        }

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output"""
        return {
            "beta_t": list(self.beta_t),
            "center_shifts": list(self.center_shifts),
            "variance_shifts": list(self.variance_shifts),
            "coefficient_asymmetries": list(self.coefficient_asymmetries),
            "center_fit": self.center_fit.to_dict(),
            "variance_fit": self.variance_fit.to_dict(),
            "coefficient_fit": (
                None if self.coefficient_fit is None else self.coefficient_fit.to_dict()
            ),
            "exponents": self.exponents,
            "metadata": dict(self.metadata),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MechanismReport":
        """Create from dictionary"""
        coefficient = data.get("coefficient_fit")
        return cls(
            beta_t=list(data["beta_t"]),
            center_shifts=list(data["center_shifts"]),
            variance_shifts=list(data["variance_shifts"]),
            coefficient_asymmetries=list(data["coefficient_asymmetries"]),
            center_fit=PowerLawFit.from_dict(data["center_fit"]),
            variance_fit=PowerLawFit.from_dict(data["variance_fit"]),
            coefficient_fit=(
                None if coefficient is None else PowerLawFit.from_dict(coefficient)
            ),
            metadata=dict(data.get("metadata", {})),
        )

    def __repr__(self) -> str:
        """Human-readable representation"""
        exps = ", ".join(
            f"{k}={'n/a' if v is None else f'{v:.3f}'}"
            for k, v in self.exponents.items()
        )
        return f"MechanismReport({len(self.beta_t)} points, {exps})"
