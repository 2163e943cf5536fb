"""Ideal and Groebner basis entities."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from syzygy.domain.errors import NotHomogeneousError, RingMismatchError
from syzygy.domain.valueobjects import GradedPolynomial, Monomial, MonomialOrder, RingSpec


@dataclass(frozen=True)
class Ideal:
    """A homogeneous ideal given by nonzero generators."""

    ring: RingSpec
    generators: tuple[GradedPolynomial, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatchError(f"Generator {g} does not live in {self.ring}")
            if g.is_zero():
                raise ValueError("Ideal generators must be nonzero")
            if not g.is_homogeneous():
                raise NotHomogeneousError(f"Generator {g} is not homogeneous")

    @classmethod
    def of(cls, ring: RingSpec, polynomials: Iterable[GradedPolynomial]) -> Ideal:
        """Build from polynomials, dropping zeros."""
        return cls(ring=ring, generators=tuple(p for p in polynomials if not p.is_zero()))

    @classmethod
    def zero(cls, ring: RingSpec) -> Ideal:
        return cls(ring=ring)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def degrees(self) -> list[int]:
        return [g.degree for g in self.generators]

    def __len__(self) -> int:
        return len(self.generators)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "ring": str(self.ring),
            "generators": [g.to_string() for g in self.generators],
        }


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis of an ideal for a monomial order.

    When ``truncated_at`` is set only S-pairs of degree at most that bound were
    processed, so the basis is exact in degrees up to the bound.
    """

    ideal: Ideal
    order: MonomialOrder
    elements: tuple[GradedPolynomial, ...]
    truncated_at: int | None = None
    stats: dict[str, int] = field(default_factory=dict, compare=False)

    @property
    def ring(self) -> RingSpec:
        return self.ideal.ring

    @cached_property
    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.leading_monomial(self.order) for g in self.elements)

    def is_exact_through(self, d: int) -> bool:
        return self.truncated_at is None or d <= self.truncated_at

    def __len__(self) -> int:
        return len(self.elements)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "ring": str(self.ring),
            "order": str(self.order),
            "truncated_at": self.truncated_at,
            "elements": [g.to_string(self.order) for g in self.elements],
        }
