"""Exterior algebra bases and skew-symmetric matrix shapes."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cache
from itertools import combinations
from typing import Self

from syzygy.domain.valueobjects.field import FieldSpec

LinearForm = tuple[int, ...]

# Upper-triangular slots of a 4x4 skew block, in this order.
SLOT_PAIRS: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


@cache
def _monomials(m: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(m), k))


@cache
def _positions(m: int, k: int) -> dict[tuple[int, ...], int]:
    return {mon: i for i, mon in enumerate(_monomials(m, k))}


@dataclass(frozen=True, slots=True)
class SkewBasis:
    """Generators f1..fm of an exterior algebra over ``field``.

    Wedge monomials of degree k are strictly increasing index tuples, ordered
    lexicographically.
    """

    field: FieldSpec
    m: int = 5

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError("An exterior algebra basis needs at least two generators")

    @property
    def generators(self) -> tuple[str, ...]:
        return tuple(f"f{i + 1}" for i in range(self.m))

    def monomials(self, k: int) -> tuple[tuple[int, ...], ...]:
        return _monomials(self.m, k)

    def index(self, monomial: tuple[int, ...]) -> int:
        """Position of an increasing index tuple within its degree."""
        return _positions(self.m, len(monomial))[monomial]

    def wedge(self, left: tuple[int, ...], right: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
        """Wedge two basis monomials: returns (sign, monomial), sign 0 when they share a factor."""
        if set(left) & set(right):
            return 0, ()
        merged = list(left + right)
        sign = 1
        # bubble sort parity
        for i in range(len(merged)):
            for j in range(len(merged) - 1 - i):
                if merged[j] > merged[j + 1]:
                    merged[j], merged[j + 1] = merged[j + 1], merged[j]
                    sign = -sign
        return sign, tuple(merged)


class PsiTag(str, Enum):
    """Normal forms of the 4x4 block of the skew matrix."""

    A = "A"
    B = "B"
    C = "C"
    D = "D"

    @classmethod
    def from_string(cls, value: str) -> PsiTag:
        try:
            return cls(value.strip().upper())
        except ValueError as e:
            raise ValueError(f"Unknown psi type: {value!r}") from e


def basis_form(index: int, m: int = 5) -> LinearForm:
    """The linear form f_index (1-based); index 0 gives the zero form."""
    coeffs = [0] * m
    if index:
        coeffs[index - 1] = 1
    return tuple(coeffs)


# Slot patterns as 1-based generator indices (0 for an empty slot).
PSI_SHAPES: dict[PsiTag, tuple[int, ...]] = {
    PsiTag.A: (1, 2, 3, 4, 5, 1),
    PsiTag.B: (1, 2, 3, 4, 5, 0),
    PsiTag.C: (0, 2, 3, 4, 5, 0),
    PsiTag.D: (1, 2, 3, 4, 2, 0),
}


@dataclass(frozen=True, slots=True)
class PsiType:
    """A 4x4 skew block given by six linear forms in f1..f5, one per upper slot."""

    slots: tuple[LinearForm, ...]
    tag: PsiTag | None = None

    def __post_init__(self) -> None:
        if len(self.slots) != len(SLOT_PAIRS):
            raise ValueError("A 4x4 skew block has exactly six upper slots")
        width = {len(form) for form in self.slots}
        if len(width) != 1:
            raise ValueError("All slot forms must use the same number of generators")

    @classmethod
    def catalog(cls, tag: PsiTag) -> Self:
        return cls(slots=tuple(basis_form(i) for i in PSI_SHAPES[tag]), tag=tag)

    @classmethod
    def from_indices(cls, indices: tuple[int, ...], m: int = 5) -> Self:
        return cls(slots=tuple(basis_form(i, m) for i in indices))

    @property
    def m(self) -> int:
        return len(self.slots[0])

    def entry(self, row: int, col: int) -> LinearForm:
        """Entry (row, col) of the skew block; the lower half is the negated upper half."""
        if row == col:
            return (0,) * self.m
        if row < col:
            return self.slots[SLOT_PAIRS.index((row, col))]
        return tuple(-c for c in self.slots[SLOT_PAIRS.index((col, row))])

    def __str__(self) -> str:
        return self.tag.value if self.tag else "custom"
