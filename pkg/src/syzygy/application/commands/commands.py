"""Command definitions.

Every run is reproducible from its command: inputs are paths or value
objects, and anything random is driven by an explicit seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from syzygy.domain.valueobjects import (
    DivisorClass,
    FieldSpec,
    MonomialOrder,
    PencilTag,
    PsiTag,
    Recipe,
    ScrollType,
    SurfaceBase,
)


@dataclass
class Command:
    """Base class for commands."""

    pass


@dataclass
class GroebnerCommand(Command):
    """Compute a reduced Groebner basis of an ideal file."""

    ideal_path: Path
    order: MonomialOrder = field(default_factory=MonomialOrder.grevlex)
    max_degree: int | None = None
    output: Path | None = None


@dataclass
class BettiCommand(Command):
    """Betti table of an ideal file via Koszul homology."""

    ideal_path: Path
    max_row: int | None = None
    linear_sections: int = 0
    seed: int | None = None
    output: Path | None = None


@dataclass
class ResolveCommand(Command):
    """Build a graded free resolution and minimalize it."""

    ideal_path: Path
    max_len: int | None = None
    max_deg: int | None = None
    output: Path | None = None


@dataclass
class ScrollCommand(Command):
    """Scroll matrix, ideal and Eagon-Northcott prediction."""

    scroll_type: ScrollType
    field: FieldSpec
    verify: bool = False
    output: Path | None = None


@dataclass
class PsiRankCommand(Command):
    """Rank of the wedge map of a 4x4 skew normal form."""

    tag: PsiTag
    field: FieldSpec


@dataclass
class AmplenessCommand(Command):
    """Reider-type i-very ampleness check for a curve class on a blown-up surface."""

    base: SurfaceBase
    curve: DivisorClass
    i: int
    near: tuple[tuple[int, int], ...] = ()
    num_points: int | None = None


@dataclass
class GenerateCommand(Command):
    """Draw a curve model for a recipe and write its canonical ideal."""

    recipe: Recipe
    field: FieldSpec
    seed: int
    output_dir: Path | None = None
    with_ideal: bool = True


@dataclass
class ClassifyCommand(Command):
    """Classify an ideal file (or Betti triples) against the catalog."""

    path: Path
    triples: bool = False
    characteristic: int | None = None
    model_stem: Path | None = None
    pencil: PencilTag | None = None


@dataclass
class ReproduceCommand(Command):
    """Run recipes end to end and compare with their expected tables."""

    recipes: tuple[Recipe, ...]
    field: FieldSpec
    seed: int
    workers: int = 1
    output_dir: Path | None = None
