"""Graded polynomial value object."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from fractions import Fraction
from types import MappingProxyType
from typing import Self

from syzygy.domain.errors import RingMismatchError
from syzygy.domain.valueobjects.field import FieldElement
from syzygy.domain.valueobjects.ring import Monomial, MonomialOrder, RingSpec

_GREVLEX = MonomialOrder.grevlex()


class GradedPolynomial:
    """An immutable polynomial over an exact field.

    Terms map exponent tuples to nonzero canonical coefficients. Homogeneity
    is not enforced here; ideals check it where they need it.
    """

    __slots__ = ("_ring", "_terms", "_hash")

    def __init__(
        self,
        ring: RingSpec,
        terms: Mapping[Monomial, int | Fraction] | None = None,
        *,
        normalized: bool = False,
    ) -> None:
        self._ring = ring
        self._hash: int | None = None
        if normalized:
            self._terms: dict[Monomial, FieldElement] = dict(terms or {})
            return
        field = ring.field
        clean: dict[Monomial, FieldElement] = {}
        for mon, coeff in (terms or {}).items():
            mon = tuple(mon)
            if len(mon) != ring.n_vars or any(e < 0 for e in mon):
                raise ValueError(f"Exponent vector {mon} does not fit {ring}")
            value = field.add(clean.get(mon, field.zero), field.element(coeff))
            if value:
                clean[mon] = value
            else:
                clean.pop(mon, None)
        self._terms = clean

    @classmethod
    def zero(cls, ring: RingSpec) -> Self:
        return cls(ring, {}, normalized=True)

    @classmethod
    def constant(cls, ring: RingSpec, value: int | Fraction) -> Self:
        return cls(ring, {(0,) * ring.n_vars: value})

    @classmethod
    def monomial(cls, ring: RingSpec, exponents: Monomial, coeff: int | Fraction = 1) -> Self:
        return cls(ring, {tuple(exponents): coeff})

    @classmethod
    def variable(cls, ring: RingSpec, index: int) -> Self:
        exps = [0] * ring.n_vars
        exps[index] = 1
        return cls(ring, {tuple(exps): 1})

    @classmethod
    def linear_form(
        cls, ring: RingSpec, coeffs: list[FieldElement] | tuple[FieldElement, ...]
    ) -> Self:
        """Build sum(coeffs[i] * x_i)."""
        terms: dict[Monomial, FieldElement] = {}
        for i, c in enumerate(coeffs):
            exps = [0] * ring.n_vars
            exps[i] = 1
            terms[tuple(exps)] = c
        return cls(ring, terms)

    @property
    def ring(self) -> RingSpec:
        return self._ring

    @property
    def terms(self) -> Mapping[Monomial, FieldElement]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, FieldElement]]:
        return iter(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return len(self._terms) == 1 and not any(next(iter(self._terms)))

    @property
    def degree(self) -> int:
        """Largest weighted degree of a term; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(self._ring.degree(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({self._ring.degree(m) for m in self._terms}) <= 1

    def variables_used(self) -> set[int]:
        return {i for m in self._terms for i, e in enumerate(m) if e}

    def _check(self, other: GradedPolynomial) -> None:
        if other._ring != self._ring:
            raise RingMismatchError(f"Ring mismatch: {self._ring} vs {other._ring}")

    def __add__(self, other: GradedPolynomial | int) -> GradedPolynomial:
        if isinstance(other, int):
            other = GradedPolynomial.constant(self._ring, other)
        self._check(other)
        field = self._ring.field
        terms = dict(self._terms)
        for mon, c in other._terms.items():
            value = field.add(terms.get(mon, field.zero), c)
            if value:
                terms[mon] = value
            else:
                terms.pop(mon, None)
        return GradedPolynomial(self._ring, terms, normalized=True)

    __radd__ = __add__

    def __neg__(self) -> GradedPolynomial:
        field = self._ring.field
        return GradedPolynomial(
            self._ring, {m: field.neg(c) for m, c in self._terms.items()}, normalized=True
        )

    def __sub__(self, other: GradedPolynomial | int) -> GradedPolynomial:
        if isinstance(other, int):
            other = GradedPolynomial.constant(self._ring, other)
        return self + (-other)

    def __rsub__(self, other: int) -> GradedPolynomial:
        return GradedPolynomial.constant(self._ring, other) - self

    def scale(self, c: int | Fraction) -> GradedPolynomial:
        field = self._ring.field
        factor = field.element(c)
        if not factor:
            return GradedPolynomial.zero(self._ring)
        return GradedPolynomial(
            self._ring, {m: field.mul(v, factor) for m, v in self._terms.items()}, normalized=True
        )

    def mul_term(self, monomial: Monomial, coeff: FieldElement) -> GradedPolynomial:
        """Multiply by the single term ``coeff * x^monomial``."""
        field = self._ring.field
        if not coeff:
            return GradedPolynomial.zero(self._ring)
        return GradedPolynomial(
            self._ring,
            {
                tuple(a + b for a, b in zip(m, monomial)): field.mul(v, coeff)
                for m, v in self._terms.items()
            },
            normalized=True,
        )

    def __mul__(self, other: GradedPolynomial | int | Fraction) -> GradedPolynomial:
        if not isinstance(other, GradedPolynomial):
            return self.scale(other)
        self._check(other)
        field = self._ring.field
        terms: dict[Monomial, FieldElement] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mon = tuple(a + b for a, b in zip(m1, m2))
                terms[mon] = field.add(terms.get(mon, field.zero), field.mul(c1, c2))
        return GradedPolynomial(
            self._ring, {m: c for m, c in terms.items() if c}, normalized=True
        )

    def __rmul__(self, other: int | Fraction) -> GradedPolynomial:
        return self.scale(other)

    def __pow__(self, exponent: int) -> GradedPolynomial:
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        result = GradedPolynomial.constant(self._ring, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def sorted_terms(
        self, order: MonomialOrder | None = None
    ) -> list[tuple[Monomial, FieldElement]]:
        """Terms sorted from largest to smallest in ``order`` (grevlex by default)."""
        key = (order or _GREVLEX).sort_key(self._ring.var_weights)
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder | None = None) -> Monomial:
        if not self._terms:
            raise ValueError("The zero polynomial has no leading monomial")
        key = (order or _GREVLEX).sort_key(self._ring.var_weights)
        return max(self._terms, key=key)

    def leading_coefficient(self, order: MonomialOrder | None = None) -> FieldElement:
        return self._terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder | None = None) -> GradedPolynomial:
        if not self._terms:
            return self
        return self.scale(self._ring.field.inv(self.leading_coefficient(order)))

    def coefficient(self, monomial: Monomial) -> FieldElement:
        return self._terms.get(tuple(monomial), self._ring.field.zero)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self._ring == other._ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._ring, frozenset(self._terms.items())))
        return self._hash

    def to_string(self, order: MonomialOrder | None = None) -> str:
        """Render in the ``c*x0^2*x1 - x2`` grammar understood by the parser."""
        if not self._terms:
            return "0"
        field = self._ring.field
        names = self._ring.var_names
        parts: list[str] = []
        for mon, coeff in self.sorted_terms(order):
            value = field.signed(coeff)
            sign = "-" if value < 0 else "+"
            magnitude = -value if value < 0 else value
            factors = [
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, mon) if e
            ]
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude), *factors])
            parts.append(f"{sign}{body}")
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"GradedPolynomial({self.to_string()!r} in {self._ring})"
