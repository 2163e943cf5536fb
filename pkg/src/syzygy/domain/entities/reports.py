"""Result records produced by domain services."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from syzygy.domain.valueobjects import DivisorClass, SurfaceBase


@dataclass(frozen=True)
class StrandRecord:
    """One Koszul homology computation: beta = middle - rank_out - rank_in."""

    i: int
    j: int
    middle: int
    rank_out: int
    rank_in: int
    beta: int

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "i": self.i,
            "j": self.j,
            "middle": self.middle,
            "rank_out": self.rank_out,
            "rank_in": self.rank_in,
            "beta": self.beta,
        }


@dataclass(frozen=True)
class BettiInvariants:
    """Invariants read off a Betti table of S/I."""

    regularity: int
    projective_dimension: int
    depth: int
    is_gorenstein_symmetric: bool

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "regularity": self.regularity,
            "projective_dimension": self.projective_dimension,
            "depth": self.depth,
            "is_gorenstein_symmetric": self.is_gorenstein_symmetric,
        }


@dataclass(frozen=True)
class PsiRankReport:
    """Rank of a wedge-multiplication map."""

    type_tag: str
    field: str
    rows: int
    cols: int
    rank: int

    @property
    def kernel_dim(self) -> int:
        return self.cols - self.rank

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "type": self.type_tag,
            "field": self.field,
            "size": [self.rows, self.cols],
            "rank": self.rank,
            "kernel_dim": self.kernel_dim,
        }


@dataclass(frozen=True)
class GammaKernelReport:
    dimension: int
    degenerate: bool

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {"dimension": self.dimension, "degenerate": self.degenerate}


@dataclass(frozen=True)
class CriticalDivisor:
    """A candidate divisor D with the Reider value D.(L - D)."""

    divisor: DivisorClass
    value: int

    def to_dict(self, base: SurfaceBase) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "class": self.divisor.format(base),
            "coords": list(self.divisor.coords),
            "value": self.value,
        }


class VerdictKind(str, Enum):
    FAILS = "fails"
    HOLDS = "holds"
    HOLDS_OUTSIDE = "holds_outside"


@dataclass(frozen=True)
class AmplenessVerdict:
    """Outcome of the Reider-type check for i-very ampleness of L."""

    base: SurfaceBase
    i: int
    applicable: bool
    verdict: VerdictKind | None = None
    critical: tuple[CriticalDivisor, ...] = ()
    reason: str = ""

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "surface": self.base.value,
            "i": self.i,
            "applicable": self.applicable,
            "verdict": self.verdict.value if self.verdict else None,
            "critical": [c.to_dict(self.base) for c in self.critical],
            "reason": self.reason,
        }


@dataclass(frozen=True)
class ClassificationReport:
    """Catalog match of a Betti table."""

    label: str
    clifford_index: int
    k_g15: int | None = None
    notes: tuple[str, ...] = ()
    nearest: str | None = None
    distance: int = 0

    @property
    def recognized(self) -> bool:
        return self.label != "unrecognized"

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "label": self.label,
            "clifford_index": self.clifford_index,
            "k_g15": self.k_g15,
            "notes": list(self.notes),
            "nearest": self.nearest,
            "distance": self.distance,
        }


@dataclass(frozen=True)
class CoincidenceReport:
    """Whether a (5,5) model carries a third pencil and whether two pencils coincide."""

    has_third: bool
    coincides_with: str | None = None
    base_point: tuple[int, ...] | None = None
    component: bool = False
    notes: tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "has_third": self.has_third,
            "coincides_with": self.coincides_with,
            "base_point": list(self.base_point) if self.base_point else None,
            "component": self.component,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class ReproduceRow:
    """One recipe run of a reproduction matrix."""

    recipe: str
    seed: int
    expected: str
    label: str
    beta45: int
    seconds: float
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and self.label == self.expected

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "recipe": self.recipe,
            "seed": self.seed,
            "expected": self.expected,
            "label": self.label,
            "beta45": self.beta45,
            "passed": self.passed,
            "error": self.error,
        }


@dataclass(frozen=True)
class ConsistencyReport:
    """Cross-checks of a Betti table against auxiliary invariants."""

    checks: tuple[str, ...] = ()
    contradictions: tuple[str, ...] = ()

    @property
    def consistent(self) -> bool:
        return not self.contradictions

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "consistent": self.consistent,
            "checks": list(self.checks),
            "contradictions": list(self.contradictions),
        }
