"""Result models: certificates, reports and name-resolution matches."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .field import Element


def _plain(value: Element):
    """JSON-friendly form of a field element (ints stay ints)."""
    return value if type(value) is int else str(value)


@dataclass(frozen=True)
class Witness:
    """A basis vector on which two composites of a diagram differ."""
    basis_index: int
    left: Tuple[Element, ...]
    right: Tuple[Element, ...]

    def to_dict(self) -> dict:
        return {
            "basis_index": self.basis_index,
            "left": [_plain(x) for x in self.left],
            "right": [_plain(x) for x in self.right],
        }


@dataclass(frozen=True)
class DiagramVerdict:
    """PASS/FAIL of one commuting diagram."""
    diagram: str
    passed: bool
    witness: Optional[Witness] = None

    def to_dict(self) -> dict:
        result = {"diagram": self.diagram, "verdict": "PASS" if self.passed else "FAIL"}
        if self.witness is not None:
            result["witness"] = self.witness.to_dict()
        return result


@dataclass(frozen=True)
class CertReport:
    """Per-diagram verdicts for one structure.

    Verdicts are kept separate (never aggregated into one flag) so that
    certificates of dual structures can be compared diagram by diagram.
    """
    subject: str
    verdicts: Tuple[DiagramVerdict, ...]

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    @property
    def failures(self) -> List[DiagramVerdict]:
        return [v for v in self.verdicts if not v.passed]

    def verdict(self, diagram: str) -> DiagramVerdict:
        for v in self.verdicts:
            if v.diagram == diagram:
                return v
        raise KeyError(diagram)

    def outcome(self) -> Dict[str, bool]:
        return {v.diagram: v.passed for v in self.verdicts}

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "verdict": "PASS" if self.passed else "FAIL",
            "diagrams": [v.to_dict() for v in self.verdicts],
        }


@dataclass
class AdjunctionReport:
    """Outcome of verifying Hom_D(N, L□_C M) ≅ Hom_C(h(M,N), L) on one instance.

    Attributes:
        lhs_dim: Dimension of Hom_D(N, L□_C M)
        rhs_dim: Dimension of Hom_C(h(M,N), L)
        isomorphism: Matrix of the currying map in the two solved bases
        verdicts: Dimension, bijection and naturality verdicts
        instance: Serialized inputs, attached by callers when the check fails
    """
    lhs_dim: int
    rhs_dim: int
    isomorphism: Any
    verdicts: Tuple[DiagramVerdict, ...]
    instance: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def to_dict(self) -> dict:
        result = {
            "verdict": "PASS" if self.passed else "FAIL",
            "lhs_dim": self.lhs_dim,
            "rhs_dim": self.rhs_dim,
            "diagrams": [v.to_dict() for v in self.verdicts],
        }
        if self.instance is not None:
            result["instance"] = self.instance
        return result


@dataclass
class Report:
    """What a CLI command prints: verdicts, computed dimensions and (optionally) timings.

    Deterministic for fixed input and seed as long as ``timing`` stays empty.
    """
    command: str
    header: Dict[str, Any] = field(default_factory=dict)
    verdicts: List[Dict[str, Any]] = field(default_factory=list)
    dimensions: Dict[str, int] = field(default_factory=dict)
    timing: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v.get("verdict") == "PASS" for v in self.verdicts)

    def add(self, certificate) -> None:
        self.verdicts.append(certificate.to_dict())

    def to_dict(self) -> dict:
        result = {
            "command": self.command,
            "header": self.header,
            "verdict": "PASS" if self.passed else "FAIL",
            "verdicts": self.verdicts,
            "dimensions": self.dimensions,
        }
        if self.timing:
            result["timing"] = {k: round(v, 6) for k, v in self.timing.items()}
        return result


@dataclass
class ResolutionMatch:
    """Result from fuzzy name resolution."""
    name: str
    match_score: float  # 0-100
