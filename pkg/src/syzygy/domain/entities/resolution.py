"""Graded free complexes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from syzygy.domain.entities.betti_table import BettiTable
from syzygy.domain.valueobjects import GradedPolynomial, RingSpec

PolyMatrix = list[list[GradedPolynomial]]


@dataclass
class FreeComplex:
    """F_0 <- F_1 <- ... <- F_n with F_k = sum S(-twists[k][c]).

    ``differentials[k - 1]`` is the matrix of d_k : F_k -> F_{k-1}, with
    ``len(twists[k-1])`` rows and ``len(twists[k])`` columns.
    """

    ring: RingSpec
    twists: list[list[int]]
    differentials: list[PolyMatrix] = field(default_factory=list)

    def __post_init__(self) -> None:
        if len(self.differentials) != max(len(self.twists) - 1, 0):
            raise ValueError("A complex with n+1 modules needs n differentials")
        for k, matrix in enumerate(self.differentials, start=1):
            rows, cols = len(self.twists[k - 1]), len(self.twists[k])
            if len(matrix) != rows or any(len(r) != cols for r in matrix):
                raise ValueError(f"d_{k} must be a {rows}x{cols} matrix")

    @property
    def length(self) -> int:
        """Index of the last nonzero module."""
        last = 0
        for k, tw in enumerate(self.twists):
            if tw:
                last = k
        return last

    def rank(self, k: int) -> int:
        return len(self.twists[k]) if k < len(self.twists) else 0

    def entry_degree_ok(self) -> bool:
        """Every nonzero entry of d_k at (r, c) has degree twists[k][c] - twists[k-1][r]."""
        for k, matrix in enumerate(self.differentials, start=1):
            for r, row in enumerate(matrix):
                for c, entry in enumerate(row):
                    if entry.is_zero():
                        continue
                    expected = self.twists[k][c] - self.twists[k - 1][r]
                    if not entry.is_homogeneous() or entry.degree != expected:
                        return False
        return True

    def composes_to_zero(self) -> bool:
        """d_{k} * d_{k+1} = 0 for all consecutive pairs."""
        for k in range(1, len(self.differentials)):
            left, right = self.differentials[k - 1], self.differentials[k]
            inner = len(self.twists[k])
            for r in range(len(left)):
                for c in range(len(right[0]) if right else 0):
                    total = GradedPolynomial.zero(self.ring)
                    for m in range(inner):
                        total = total + left[r][m] * right[m][c]
                    if not total.is_zero():
                        return False
        return True

    def is_minimal(self) -> bool:
        """No differential has a nonzero constant entry."""
        return all(
            not entry.is_constant() or entry.is_zero()
            for matrix in self.differentials
            for row in matrix
            for entry in row
        )

    def betti_table(self) -> BettiTable:
        entries: dict[tuple[int, int], int] = {}
        for k, tw in enumerate(self.twists):
            for j in tw:
                entries[(k, j)] = entries.get((k, j), 0) + 1
        return BettiTable(entries=entries, num_vars=self.ring.n_vars)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "ring": str(self.ring),
            "twists": self.twists,
            "differentials": [
                [[e.to_string() for e in row] for row in matrix] for matrix in self.differentials
            ],
        }
