"""Curve model entities produced by the generator."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from syzygy.domain.entities.ideal import Ideal
from syzygy.domain.valueobjects import Ambient, GradedPolynomial, Recipe, RingSpec, SingularPoint


@dataclass(frozen=True)
class CurveModel:
    """A singular model of a genus-9 curve on a rational surface.

    Plane models are a single form on P2. Quadric and cone models are the
    pair (Q, F) in P3: the surface equation, then the quintic cutting the curve.
    """

    ambient: Ambient
    ring: RingSpec
    defining_forms: tuple[GradedPolynomial, ...]
    singular_points: tuple[SingularPoint, ...]
    seed: int = 0
    recipe: Recipe | None = None
    attempt: int = 1
    marked_points: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "defining_forms", tuple(self.defining_forms))
        object.__setattr__(self, "singular_points", tuple(self.singular_points))
        object.__setattr__(self, "marked_points", tuple(tuple(p) for p in self.marked_points))
        expected = 1 if self.ambient is Ambient.PLANE else 2
        if len(self.defining_forms) != expected:
            raise ValueError(f"A {self.ambient.value} model has {expected} defining forms")
        if self.ring.n_vars != self.ambient.n_vars:
            raise ValueError(
                f"A {self.ambient.value} model lives in {self.ambient.n_vars} variables"
            )

    @property
    def curve_form(self) -> GradedPolynomial:
        return self.defining_forms[-1]

    @property
    def surface_form(self) -> GradedPolynomial | None:
        return None if self.ambient is Ambient.PLANE else self.defining_forms[0]

    @property
    def degree(self) -> int:
        """Degree of the curve form: d for plane models, 5 for surface models."""
        return self.curve_form.degree

    @property
    def arithmetic_genus(self) -> int:
        if self.ambient is Ambient.PLANE:
            d = self.degree
            return (d - 1) * (d - 2) // 2
        # (2, d) complete intersection in P3
        return 1 + 2 * self.degree * (2 + self.degree - 4) // 2

    @property
    def delta(self) -> int:
        """Sum of m(m-1)/2 over all geometric singular points."""
        return sum(
            pt.count * pt.multiplicity * (pt.multiplicity - 1) // 2 for pt in self.singular_points
        )

    @property
    def genus(self) -> int:
        return self.arithmetic_genus - self.delta

    @property
    def uses_orbits(self) -> bool:
        return any(not pt.is_rational for pt in self.singular_points)

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.defining_forms)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "recipe": self.recipe.value if self.recipe else None,
            "ambient": self.ambient.value,
            "field": str(self.ring.field),
            "variables": list(self.ring.var_names),
            "seed": self.seed,
            "attempt": self.attempt,
            "genus": self.genus,
            "defining_forms": [f.to_string() for f in self.defining_forms],
            "singular_points": [pt.to_dict() for pt in self.singular_points],
            "marked_points": [list(p) for p in self.marked_points],
        }


@dataclass(frozen=True)
class AdjointBasis:
    """Forms of a common degree cutting out the canonical series."""

    forms: tuple[GradedPolynomial, ...]
    degree: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "forms", tuple(self.forms))
        if any(f.degree != self.degree for f in self.forms):
            raise ValueError(f"Adjoint forms must all have degree {self.degree}")

    @property
    def dimension(self) -> int:
        return len(self.forms)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "degree": self.degree,
            "dimension": self.dimension,
            "forms": [f.to_string() for f in self.forms],
        }
