"""Results returned by the handlers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from syzygy.domain.entities import (
    AdjointBasis,
    AmplenessVerdict,
    BettiInvariants,
    BettiTable,
    ClassificationReport,
    ConsistencyReport,
    CurveModel,
    FreeComplex,
    GroebnerBasis,
    Ideal,
    PsiRankReport,
    ReproduceRow,
    StrandRecord,
)
from syzygy.domain.valueobjects import GradedPolynomial, ScrollType, SectionPartition


def _paths(paths: tuple[Path, ...]) -> list[str]:
    return [str(p) for p in paths]


@dataclass
class GroebnerResult:
    basis: GroebnerBasis
    written: tuple[Path, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {**self.basis.to_dict(), "size": len(self.basis), "written": _paths(self.written)}


@dataclass
class BettiResult:
    table: BettiTable
    invariants: BettiInvariants
    strands: tuple[StrandRecord, ...] = ()
    written: tuple[Path, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "table": self.table.to_dict(),
            "invariants": self.invariants.to_dict(),
            "strands": [s.to_dict() for s in self.strands],
            "written": _paths(self.written),
        }


@dataclass
class ResolveResult:
    complex: FreeComplex
    minimal: FreeComplex
    table: BettiTable
    written: tuple[Path, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "ranks": [len(t) for t in self.complex.twists],
            "minimal_ranks": [len(t) for t in self.minimal.twists],
            "table": self.table.to_dict(),
            "written": _paths(self.written),
        }


@dataclass
class ScrollResult:
    scroll_type: ScrollType
    matrix: list[list[GradedPolynomial]]
    ideal: Ideal
    predicted: BettiTable
    computed: BettiTable | None = None
    written: tuple[Path, ...] = ()

    @property
    def matches(self) -> bool | None:
        return None if self.computed is None else self.computed == self.predicted

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "type": str(self.scroll_type),
            "matrix": [[e.to_string() for e in row] for row in self.matrix],
            "ideal": self.ideal.to_dict(),
            "predicted": self.predicted.to_dict(),
            "computed": self.computed.to_dict() if self.computed is not None else None,
            "matches": self.matches,
            "written": _paths(self.written),
        }


@dataclass
class PsiRankResult:
    report: PsiRankReport
    predicted_beta45: int | None = None

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {**self.report.to_dict(), "predicted_beta45": self.predicted_beta45}


@dataclass
class AmplenessResult:
    verdict: AmplenessVerdict
    curve: str
    self_intersection: int
    genus: int
    adjoint_hilbert: tuple[int, Fraction, int]

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        a, b, c = self.adjoint_hilbert
        return {
            **self.verdict.to_dict(),
            "curve": self.curve,
            "self_intersection": self.self_intersection,
            "genus": self.genus,
            "adjoint_hilbert": [a, str(b), c],
        }


@dataclass
class GenerateResult:
    model: CurveModel
    adjoints: AdjointBasis
    ideal: Ideal | None = None
    written: tuple[Path, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "model": self.model.to_dict(),
            "adjoints": self.adjoints.to_dict(),
            "canonical_ideal": self.ideal.to_dict() if self.ideal is not None else None,
            "written": _paths(self.written),
        }


@dataclass
class ClassifyResult:
    table: BettiTable
    report: ClassificationReport
    characteristic: int
    partition: SectionPartition | None = None
    scroll_type: ScrollType | None = None
    consistency: ConsistencyReport | None = None

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "characteristic": self.characteristic,
            "table": self.table.to_dict(),
            "classification": self.report.to_dict(),
            "partition": list(self.partition.h0) if self.partition else None,
            "scroll_type": str(self.scroll_type) if self.scroll_type else None,
            "consistency": self.consistency.to_dict() if self.consistency else None,
        }


@dataclass
class ReproduceResult:
    field_spec: str
    seed: int
    rows: list[ReproduceRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "field": self.field_spec,
            "seed": self.seed,
            "passed": self.passed,
            "rows": [r.to_dict() for r in self.rows],
        }
