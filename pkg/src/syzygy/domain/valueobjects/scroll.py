"""Rational normal scroll value objects."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Self


@dataclass(frozen=True, slots=True)
class ScrollType:
    """Type S(e1, ..., ed) of a rational normal scroll, e1 >= ... >= ed >= 0."""

    e: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.e:
            raise ValueError("A scroll type needs at least one block")
        if any(x < 0 for x in self.e):
            raise ValueError("Scroll block sizes must be nonnegative")
        if any(a < b for a, b in zip(self.e, self.e[1:])):
            raise ValueError(f"Scroll type must be nonincreasing, got {self.e}")
        if sum(self.e) < 2:
            raise ValueError("A scroll type needs f = sum(e) >= 2")

    @classmethod
    def from_string(cls, value: str) -> Self:
        """Parse ``2,1,1,1`` or ``S(2,1,1,1)``."""
        text = value.strip()
        if text.upper().startswith("S(") and text.endswith(")"):
            text = text[2:-1]
        try:
            return cls(e=tuple(int(part) for part in text.split(",") if part.strip()))
        except ValueError as e:
            raise ValueError(f"Invalid scroll type: {value!r}") from e

    @property
    def f(self) -> int:
        """Degree of the scroll, which is also the number of matrix columns."""
        return sum(self.e)

    @property
    def dim(self) -> int:
        return len(self.e)

    @property
    def ambient(self) -> int:
        """Dimension of the projective space spanned by the scroll."""
        return self.f + self.dim - 1

    @property
    def is_cone(self) -> bool:
        return self.e[-1] == 0

    def __str__(self) -> str:
        return f"S({','.join(str(x) for x in self.e)})"


@dataclass(frozen=True, slots=True)
class SectionPartition:
    """The sequence h0(K - iD) for i = 0, 1, 2, ... of a pencil D on a curve.

    Values decrease strictly until they reach zero and stay zero afterwards.
    A trailing zero may be omitted.
    """

    h0: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.h0 or self.h0[0] <= 0:
            raise ValueError("h0 sequence must start with a positive value")
        if any(x < 0 for x in self.h0):
            raise ValueError("h0 values must be nonnegative")
        for a, b in zip(self.h0, self.h0[1:]):
            if a == 0 and b != 0:
                raise ValueError(f"h0 sequence must stay zero once it reaches zero: {self.h0}")
            if a > 0 and b >= a:
                raise ValueError(f"h0 sequence must decrease strictly: {self.h0}")

    @classmethod
    def from_string(cls, value: str) -> Self:
        return cls(h0=tuple(int(part) for part in value.split(",") if part.strip()))

    @property
    def differences(self) -> tuple[int, ...]:
        """The parts d_i = h0(K - iD) - h0(K - (i+1)D) that are positive."""
        values = [*self.h0, 0]
        return tuple(a - b for a, b in zip(values, values[1:]) if a - b > 0)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.h0)
