"""
Diagnostic Reports
Verdicts, witnesses and the certificates they are revalidated from
"""
import logging
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from src.core.vector import SparseVector

logger = logging.getLogger(__name__)


class Property(str, Enum):
    NABLA = "Nabla"
    DPOINT = "DPoint"
    DELTA_DEFICIENCY = "DeltaDeficiency"
    DAUGAVET = "Daugavet"
    STRONGLY_EXPOSED = "StronglyExposed"


class Verdict(str, Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    LOWER_BOUND_ONLY = "LowerBoundOnly"


@dataclass(frozen=True)
class Witness:
    """A vector (kind 'vector') or functional (kind 'functional') and the value it achieves."""
    kind: str
    vector: SparseVector
    value: float
    alpha: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        out = {"kind": self.kind, "vector": self.vector.to_json(), "value": self.value}
        if self.alpha is not None:
            out["alpha"] = self.alpha
        return out


@dataclass(frozen=True)
class CertificateEntry:
    """One recomputable claim: `quantity` of `witness` at the point equals `value`."""
    quantity: str
    witness: SparseVector
    value: float
    alpha: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        out = asdict(self)
        out["witness"] = self.witness.to_json()
        return out


@dataclass
class Certificate:
    """Machine-checkable record of the values a verdict rests on."""
    point: SparseVector
    entries: List[CertificateEntry] = field(default_factory=list)
    tolerance: float = 1e-9

    def add(self, quantity: str, witness: SparseVector, value: float, alpha: Optional[float] = None) -> None:
        self.entries.append(CertificateEntry(quantity, witness, value, alpha))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "point": self.point.to_json(),
            "entries": [e.to_dict() for e in self.entries],
            "tolerance": self.tolerance,
        }


@dataclass
class DiagnosticReport:
    """Verdict, numeric deficiency and witness for one diametral property query."""
    property: Property
    verdict: Verdict
    deficiency: float
    witness: Optional[Witness] = None
    params: Dict[str, Any] = field(default_factory=dict)
    certificate: Optional[Certificate] = None
    sub_reports: List["DiagnosticReport"] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.verdict == Verdict.HOLDS

    @property
    def fails(self) -> bool:
        return self.verdict == Verdict.FAILS

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready dictionary with stable field names."""
        out: Dict[str, Any] = {
            "property": self.property.value,
            "verdict": self.verdict.value,
            "deficiency": self.deficiency,
            "witness": self.witness.to_dict() if self.witness else None,
            "params": dict(self.params),
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_dict()
        if self.sub_reports:
            out["sub_reports"] = [r.to_dict() for r in self.sub_reports]
        return out


def revalidate(report: DiagnosticReport, space, x: SparseVector) -> bool:
    """
    Recompute every certificate entry of a report and compare within its tolerance.

    Returns:
        True when all recorded values are reproduced
    """
    from src.core.norms import norm
    from src.core.space import SliceSpec
    from src.core.vector import pairing
    from src.diag.slices import slice_sup
    from src.polytope.realize import to_vball

    reports = [report] + list(report.sub_reports)
    for r in reports:
        if r.certificate is None:
            continue
        tol = r.certificate.tolerance
        for entry in r.certificate.entries:
            if entry.quantity == "distance":
                actual = norm(space, x - entry.witness)
            elif entry.quantity == "slice_sup":
                actual = slice_sup(space, x, SliceSpec(entry.witness, entry.alpha))
            elif entry.quantity == "margin":
                others = [v for v in to_vball(space).extreme_points() if not v.allclose(x)]
                actual = 1.0 - max(pairing(entry.witness, v) for v in others)
            elif entry.quantity == "pairing":
                actual = pairing(entry.witness, x)
            else:
                logger.warning(f"Unknown certificate quantity {entry.quantity}")
                return False
            if abs(actual - entry.value) > tol:
                logger.warning(
                    f"Certificate mismatch for {entry.quantity}: recorded {entry.value}, got {actual}"
                )
                return False
    return True
