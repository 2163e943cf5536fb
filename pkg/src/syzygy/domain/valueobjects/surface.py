"""Picard lattices of blown-up rational surfaces and their divisor classes."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Self


class SurfaceBase(str, Enum):
    """The base surfaces that get blown up."""

    P2 = "p2"
    P1XP1 = "p1xp1"
    F2 = "f2"

    @classmethod
    def from_string(cls, value: str) -> SurfaceBase:
        text = value.strip().lower().replace("×", "x")
        aliases = {"p2": cls.P2, "p1xp1": cls.P1XP1, "p1p1": cls.P1XP1, "f2": cls.F2}
        try:
            return aliases[text]
        except KeyError as e:
            raise ValueError(f"Unknown surface: {value!r}") from e

    @property
    def rank(self) -> int:
        """Rank of the Picard group of the base surface."""
        return 1 if self is SurfaceBase.P2 else 2

    @property
    def base_names(self) -> tuple[str, ...]:
        return {
            SurfaceBase.P2: ("H",),
            SurfaceBase.P1XP1: ("A", "B"),
            SurfaceBase.F2: ("H", "R"),
        }[self]


@dataclass(frozen=True, slots=True)
class SurfaceLattice:
    """Picard lattice of a base surface blown up in s points.

    ``infinitely_near`` holds 1-based pairs (k, k+1): the point p_{k+1} lies on
    the exceptional curve over p_k. Every point has at most one successor.
    """

    base: SurfaceBase
    num_exceptional: int = 0
    infinitely_near: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.num_exceptional < 0:
            raise ValueError("Number of blown-up points must be nonnegative")
        object.__setattr__(self, "infinitely_near", frozenset(self.infinitely_near))
        for k, nxt in self.infinitely_near:
            if nxt != k + 1:
                raise ValueError(f"Infinitely near pairs must be consecutive, got ({k}, {nxt})")
            if not 1 <= k < self.num_exceptional:
                raise ValueError(f"Pair ({k}, {nxt}) is out of range for s={self.num_exceptional}")

    @property
    def rank(self) -> int:
        return self.base.rank + self.num_exceptional

    def with_near_pair(self, k: int) -> SurfaceLattice:
        """Return the lattice with p_{k+1} additionally infinitely near p_k."""
        return SurfaceLattice(
            base=self.base,
            num_exceptional=self.num_exceptional,
            infinitely_near=self.infinitely_near | {(k, k + 1)},
        )

    def __str__(self) -> str:
        near = ",".join(f"{a}>{b}" for a, b in sorted(self.infinitely_near))
        suffix = f" near={near}" if near else ""
        return f"{self.base.value} blown up in {self.num_exceptional} points{suffix}"


_CLASS = re.compile(r"^\s*(?P<base>-?\d+(?:\s*,\s*-?\d+)?)\s*(?::\s*(?P<exc>.*))?$")


@dataclass(frozen=True, slots=True)
class DivisorClass:
    """A divisor class given by base coordinates and exceptional coefficients.

    ``exc_coords[k]`` is the coefficient of E_{k+1}, so the curve class
    7H - 2E1 - ... - 2E6 has ``exc_coords == (-2,) * 6``.
    """

    base_coords: tuple[int, ...]
    exc_coords: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.base_coords) not in (1, 2):
            raise ValueError("A divisor class has one or two base coordinates")

    @classmethod
    def from_string(cls, value: str) -> Self:
        """Parse ``7:2^6``, ``5,5:2^7`` or ``8:3,2^9``.

        Base coordinates come first; after the colon come the multiplicities
        of the subtracted exceptional curves, ``m^k`` repeating m k times.
        """
        match = _CLASS.match(value)
        if not match:
            raise ValueError(f"Invalid divisor class: {value!r}")
        base = tuple(int(part) for part in match.group("base").split(","))
        exc: list[int] = []
        for chunk in (match.group("exc") or "").split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            mult, _, count = chunk.partition("^")
            try:
                exc.extend([-int(mult)] * (int(count) if count else 1))
            except ValueError as e:
                raise ValueError(f"Invalid divisor class: {value!r}") from e
        return cls(base_coords=base, exc_coords=tuple(exc))

    @classmethod
    def exceptional(cls, base_rank: int, s: int, k: int) -> Self:
        """The class E_k (1-based) in a lattice with s exceptional curves."""
        exc = [0] * s
        exc[k - 1] = 1
        return cls(base_coords=(0,) * base_rank, exc_coords=tuple(exc))

    def padded(self, s: int) -> DivisorClass:
        """Extend the exceptional coordinates with zeros up to length s."""
        if len(self.exc_coords) > s:
            raise ValueError(
                f"Class has {len(self.exc_coords)} exceptional coordinates, lattice has {s}"
            )
        return DivisorClass(self.base_coords, self.exc_coords + (0,) * (s - len(self.exc_coords)))

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(
            tuple(a + b for a, b in zip(self.base_coords, other.base_coords, strict=True)),
            tuple(a + b for a, b in zip(self.exc_coords, other.exc_coords, strict=True)),
        )

    def __neg__(self) -> DivisorClass:
        return DivisorClass(tuple(-a for a in self.base_coords), tuple(-a for a in self.exc_coords))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return self + (-other)

    def __mul__(self, n: int) -> DivisorClass:
        return DivisorClass(
            tuple(n * a for a in self.base_coords), tuple(n * a for a in self.exc_coords)
        )

    __rmul__ = __mul__

    @property
    def coords(self) -> tuple[int, ...]:
        """All coordinates, base first; used for lexicographic ordering."""
        return self.base_coords + self.exc_coords

    def format(self, base: SurfaceBase) -> str:
        """Render as e.g. ``7H-2E1-2E2`` or ``(5,5)-E1``."""
        text = ""
        if base is SurfaceBase.P1XP1:
            if any(self.base_coords):
                text = f"({self.base_coords[0]},{self.base_coords[1]})"
        else:
            for c, name in zip(self.base_coords, base.base_names):
                text += _term(c, name, first=not text)
        for k, c in enumerate(self.exc_coords, start=1):
            text += _term(c, f"E{k}", first=not text)
        return text or "0"


def _term(c: int, name: str, *, first: bool) -> str:
    if c == 0:
        return ""
    sign = "-" if c < 0 else ("" if first else "+")
    magnitude = abs(c)
    return f"{sign}{'' if magnitude == 1 else magnitude}{name}"
