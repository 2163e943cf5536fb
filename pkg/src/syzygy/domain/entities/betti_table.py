"""Graded Betti table entity."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers beta_{i,j} of S/I.

    Only nonzero entries are stored; everything else reads as zero. Rows of the
    printed grid are indexed by j - i, columns by i.
    """

    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)
    num_vars: int = 0
    codim_hint: int | None = None

    def __post_init__(self) -> None:
        clean: dict[tuple[int, int], int] = {}
        for (i, j), value in dict(self.entries).items():
            if value < 0:
                raise ValueError(f"Betti number beta_{i},{j} is negative")
            if i < 0:
                raise ValueError("Homological index must be nonnegative")
            if value:
                clean[(int(i), int(j))] = int(value)
        object.__setattr__(self, "entries", MappingProxyType(dict(sorted(clean.items()))))

    @classmethod
    def from_rows(
        cls, rows: Mapping[int, Mapping[int, int]], num_vars: int = 0, codim_hint: int | None = None
    ) -> BettiTable:
        """Build from ``{row: {column: value}}`` with row = j - i and column = i."""
        entries = {(i, i + r): v for r, cols in rows.items() for i, v in cols.items()}
        return cls(entries=entries, num_vars=num_vars, codim_hint=codim_hint)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def __iter__(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(self.entries.items())

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return dict(self.entries) == dict(other.entries)

    def __hash__(self) -> int:
        return hash(frozenset(self.entries.items()))

    @property
    def max_column(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def max_row(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    @property
    def min_row(self) -> int:
        return min((j - i for i, j in self.entries), default=0)

    def row(self, r: int) -> list[int]:
        """Values of row r for columns 0..max_column."""
        return [self.get(i, i + r) for i in range(self.max_column + 1)]

    def column_sum(self, i: int) -> int:
        return sum(v for (c, _), v in self.entries.items() if c == i)

    def triples(self) -> list[tuple[int, int, int]]:
        """(i, j, beta) for nonzero entries, sorted lexicographically."""
        return [(i, j, v) for (i, j), v in sorted(self.entries.items())]

    def l1_distance(self, other: BettiTable) -> int:
        keys = set(self.entries) | set(other.entries)
        return sum(abs(self[k] - other[k]) for k in keys)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "num_vars": self.num_vars,
            "entries": [list(t) for t in self.triples()],
        }
