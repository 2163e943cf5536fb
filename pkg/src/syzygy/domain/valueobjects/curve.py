"""Curve construction value objects."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Self


class Ambient(str, Enum):
    """Surface carrying a curve model."""

    PLANE = "plane"
    QUADRIC = "quadric"
    CONE = "cone"

    @property
    def n_vars(self) -> int:
        return 3 if self is Ambient.PLANE else 4


class Recipe(str, Enum):
    """Constructions realizing each stratum of genus-9 canonical curves."""

    GENERAL = "general"
    ONE_G15 = "one_g15"
    TWO_G15 = "two_g15"
    THREE_G15 = "three_g15"
    G72 = "g72"
    G14 = "g14"
    G14_X_G15 = "g14_x_g15"
    G62 = "g62"
    G13 = "g13"
    MULT2_G15 = "mult2_g15"
    MULT3_G15 = "mult3_g15"
    MULT2_PLUS_ORDINARY = "mult2_plus_ordinary"

    @classmethod
    def from_string(cls, value: str) -> Recipe:
        try:
            return cls(value.strip().lower())
        except ValueError as e:
            raise ValueError(f"Unknown recipe: {value!r}") from e

    @property
    def ambient(self) -> Ambient:
        if self in (Recipe.TWO_G15, Recipe.THREE_G15):
            return Ambient.QUADRIC
        if self in (Recipe.MULT2_G15, Recipe.MULT3_G15, Recipe.MULT2_PLUS_ORDINARY):
            return Ambient.CONE
        return Ambient.PLANE

    @property
    def expected_label(self) -> str:
        """Catalog label the canonical curve of this recipe classifies as."""
        return {
            Recipe.MULT2_G15: "two_g15",
            Recipe.MULT3_G15: "three_g15",
            Recipe.MULT2_PLUS_ORDINARY: "three_g15",
        }.get(self, self.value)


class PencilTag(str, Enum):
    """Pencils whose partitions h0(K - iD) determine a scroll type."""

    LINES = "lines"  # lines through the first singular point of a plane model
    RULING_A = "ruling_a"
    RULING_B = "ruling_b"
    CONE_RULING = "cone_ruling"

    @classmethod
    def from_string(cls, value: str) -> PencilTag:
        try:
            return cls(value.strip().lower())
        except ValueError as e:
            raise ValueError(f"Unknown pencil: {value!r}") from e


@dataclass(frozen=True, slots=True)
class SingularPoint:
    """An ordinary singular point, or a Galois orbit of them.

    Each coordinate is an element of F_{p^degree} written as a coefficient
    tuple; rational points have ``degree == 1`` and one-entry tuples. An orbit
    stands for ``degree`` conjugate points of the same multiplicity.
    """

    coords: tuple[tuple[int, ...], ...]
    multiplicity: int
    degree: int = 1

    def __post_init__(self) -> None:
        if self.multiplicity < 2:
            raise ValueError("Singular points have multiplicity at least 2")
        if self.degree < 1:
            raise ValueError("Orbit degree must be positive")
        if any(len(c) != self.degree for c in self.coords):
            raise ValueError("Every coordinate needs one entry per extension degree")

    @classmethod
    def rational(cls, coords: tuple[int, ...] | list[int], multiplicity: int) -> Self:
        return cls(coords=tuple((int(c),) for c in coords), multiplicity=multiplicity)

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    @property
    def rational_coords(self) -> tuple[int, ...]:
        if not self.is_rational:
            raise ValueError("Point is not defined over the prime field")
        return tuple(c[0] for c in self.coords)

    @property
    def count(self) -> int:
        """Number of geometric points represented."""
        return self.degree

    @property
    def kind(self) -> str:
        names = {2: "node", 3: "triple", 4: "quadruple"}
        return names.get(self.multiplicity, f"m{self.multiplicity}")

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        if self.is_rational:
            return {"coords": list(self.rational_coords), "multiplicity": self.multiplicity}
        return {
            "coords": [list(c) for c in self.coords],
            "multiplicity": self.multiplicity,
            "degree": self.degree,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Self:
        degree = int(data.get("degree", 1))
        if degree == 1:
            return cls.rational(data["coords"], int(data["multiplicity"]))
        return cls(
            coords=tuple(tuple(int(x) for x in c) for c in data["coords"]),
            multiplicity=int(data["multiplicity"]),
            degree=degree,
        )
