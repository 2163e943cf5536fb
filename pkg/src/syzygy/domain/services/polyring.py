"""Graded polynomial arithmetic: products, graded pieces, evaluation, derivatives, parsing."""

from __future__ import annotations

import re
from collections.abc import Sequence
from fractions import Fraction
from functools import cache
from itertools import product as cartesian
from math import comb

from syzygy.domain.errors import ParseError, RingMismatchError
from syzygy.domain.services.exactalg import GaloisField, GFElement
from syzygy.domain.valueobjects.field import FieldElement, FieldSpec
from syzygy.domain.valueobjects.polynomial import GradedPolynomial
from syzygy.domain.valueobjects.ring import Monomial, MonomialOrder, RingSpec


def multiply(f: GradedPolynomial, g: GradedPolynomial) -> GradedPolynomial:
    """Product of two polynomials of the same ring."""
    if f.ring != g.ring:
        raise RingMismatchError(f"Ring mismatch: {f.ring} vs {g.ring}")
    return f * g


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_product(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


@cache
def _weighted_monomials(weights: tuple[int, ...], d: int) -> tuple[Monomial, ...]:
    if not weights:
        return ((),) if d == 0 else ()
    head, rest = weights[0], weights[1:]
    out: list[Monomial] = []
    for e in range(d // head, -1, -1):
        for tail in _weighted_monomials(rest, d - e * head):
            out.append((e, *tail))
    return tuple(out)


def graded_piece_basis(
    ring: RingSpec, d: int, order: MonomialOrder | None = None
) -> list[Monomial]:
    """All monomials of weighted degree d, largest first in ``order`` (grevlex by default)."""
    if d < 0:
        raise ValueError("Degree must be nonnegative")
    key = (order or MonomialOrder.grevlex()).sort_key(ring.var_weights)
    return sorted(_weighted_monomials(ring.var_weights, d), key=key, reverse=True)


def evaluate(f: GradedPolynomial, point: Sequence[FieldElement]) -> FieldElement:
    """Evaluate f at a point with coordinates in the base field."""
    ring = f.ring
    if len(point) != ring.n_vars:
        raise ValueError(f"Point has {len(point)} coordinates, ring has {ring.n_vars} variables")
    field = ring.field
    coords = [field.element(c) for c in point]
    total = field.zero
    for mon, coeff in f:
        term = coeff
        for c, e in zip(coords, mon):
            if e:
                term = field.mul(term, field.power(c, e))
        total = field.add(total, term)
    return total


def evaluate_extension(
    f: GradedPolynomial, point: Sequence[GFElement], gf: GaloisField
) -> GFElement:
    """Evaluate f (coefficients in F_p) at a point with coordinates in F_{p^k}."""
    if len(point) != f.ring.n_vars:
        raise ValueError("Point dimension does not match the ring")
    powers: dict[tuple[int, int], GFElement] = {}
    total = gf.zero
    for mon, coeff in f:
        term = gf.embed(int(coeff))
        for i, e in enumerate(mon):
            if e:
                key = (i, e)
                if key not in powers:
                    powers[key] = gf.power(point[i], e)
                term = gf.mul(term, powers[key])
        total = gf.add(total, term)
    return total


def partial_derivative(f: GradedPolynomial, var_index: int) -> GradedPolynomial:
    """Formal partial derivative; in characteristic p exponents divisible by p vanish."""
    terms: dict[Monomial, int | Fraction] = {}
    for mon, coeff in f:
        e = mon[var_index]
        if e == 0:
            continue
        lowered = list(mon)
        lowered[var_index] -= 1
        terms[tuple(lowered)] = f.ring.field.mul(coeff, f.ring.field.element(e))
    return GradedPolynomial(f.ring, terms)


def hasse_derivative(f: GradedPolynomial, alpha: Monomial) -> GradedPolynomial:
    """Hasse derivative D^alpha: x^m -> prod binom(m_i, alpha_i) x^(m - alpha)."""
    field = f.ring.field
    terms: dict[Monomial, int | Fraction] = {}
    for mon, coeff in f:
        if not monomial_divides(alpha, mon):
            continue
        factor = 1
        for m, a in zip(mon, alpha):
            factor *= comb(m, a)
        terms[monomial_quotient(mon, alpha)] = field.mul(coeff, field.element(factor))
    return GradedPolynomial(f.ring, terms)


def derivative_multi_indices(n_vars: int, max_order: int) -> list[Monomial]:
    """Multi-indices alpha with |alpha| <= max_order."""
    return [
        alpha
        for alpha in cartesian(range(max_order + 1), repeat=n_vars)
        if sum(alpha) <= max_order
    ]


def _point_power(point: Sequence[FieldElement], mon: Monomial, field: FieldSpec) -> FieldElement:
    value = field.one
    for c, e in zip(point, mon):
        if e:
            value = field.mul(value, field.power(c, e))
    return value


def hasse_derivative_row(
    basis: Sequence[Monomial], alpha: Monomial, point: Sequence[FieldElement], field: FieldSpec
) -> list[FieldElement]:
    """Row of the linear condition D^alpha F(point) = 0 in the monomial basis."""
    row: list[FieldElement] = []
    for mon in basis:
        if not monomial_divides(alpha, mon):
            row.append(field.zero)
            continue
        factor = 1
        for m, a in zip(mon, alpha):
            factor *= comb(m, a)
        shifted = _point_power(point, monomial_quotient(mon, alpha), field)
        row.append(field.mul(field.element(factor), shifted))
    return row


def hasse_derivative_row_extension(
    basis: Sequence[Monomial], alpha: Monomial, point: Sequence[GFElement], gf: GaloisField
) -> list[list[int]]:
    """The F_{p^k} condition D^alpha F(point) = 0 split into k rows over F_p."""
    values: list[GFElement] = []
    powers: dict[tuple[int, int], GFElement] = {}
    for mon in basis:
        if not monomial_divides(alpha, mon):
            values.append(gf.zero)
            continue
        factor = 1
        for m, a in zip(mon, alpha):
            factor *= comb(m, a)
        value = gf.embed(factor)
        for i, e in enumerate(monomial_quotient(mon, alpha)):
            if e:
                key = (i, e)
                if key not in powers:
                    powers[key] = gf.power(point[i], e)
                value = gf.mul(value, powers[key])
        values.append(value)
    return [[v[j] for v in values] for j in range(gf.k)]


def from_coefficients(
    ring: RingSpec, basis: Sequence[Monomial], coeffs: Sequence[FieldElement]
) -> GradedPolynomial:
    """The polynomial sum(coeffs[i] * basis[i])."""
    return GradedPolynomial(ring, {m: c for m, c in zip(basis, coeffs) if c})


def coefficient_vector(f: GradedPolynomial, basis: Sequence[Monomial]) -> list[FieldElement]:
    """Coordinates of f in a monomial basis; terms outside the basis are an error."""
    index = {m: i for i, m in enumerate(basis)}
    vector = [f.ring.field.zero] * len(basis)
    for mon, coeff in f:
        try:
            vector[index[mon]] = coeff
        except KeyError as e:
            raise ValueError(f"Monomial {mon} is not in the given basis") from e
    return vector


def substitute(
    f: GradedPolynomial, images: Sequence[GradedPolynomial], target_ring: RingSpec
) -> GradedPolynomial:
    """Apply the ring map x_i -> images[i]."""
    if len(images) != f.ring.n_vars:
        raise ValueError("One image per source variable is required")
    if any(g.ring != target_ring for g in images):
        raise RingMismatchError("Images must live in the target ring")
    powers: dict[tuple[int, int], GradedPolynomial] = {}

    def power(i: int, e: int) -> GradedPolynomial:
        if (i, e) not in powers:
            powers[(i, e)] = images[i] if e == 1 else power(i, e - 1) * images[i]
        return powers[(i, e)]

    result = GradedPolynomial.zero(target_ring)
    for mon, coeff in f:
        term = GradedPolynomial.constant(target_ring, coeff)
        for i, e in enumerate(mon):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


def hyperplane_ring(ring: RingSpec, coeffs: Sequence[FieldElement]) -> tuple[RingSpec, int]:
    """Ring of the hyperplane sum(coeffs[i] x_i) = 0 and the index of the eliminated variable."""
    nonzero = [i for i, c in enumerate(coeffs) if c]
    if not nonzero or len(coeffs) != ring.n_vars:
        raise ValueError("A hyperplane needs a nonzero linear form on the ring's variables")
    if any(ring.var_weights[i] != 1 for i in nonzero):
        raise ValueError("Hyperplane sections need a linear form in degree-1 variables")
    drop = nonzero[-1]
    names = tuple(n for i, n in enumerate(ring.var_names) if i != drop)
    weights = tuple(w for i, w in enumerate(ring.var_weights) if i != drop)
    return RingSpec(field=ring.field, var_names=names, var_weights=weights), drop


def restrict_to_hyperplane(
    f: GradedPolynomial, coeffs: Sequence[FieldElement], target: RingSpec | None = None
) -> GradedPolynomial:
    """Restrict f to the hyperplane sum(coeffs[i] x_i) = 0.

    The last variable with a nonzero coefficient is eliminated.
    """
    ring = f.ring
    field = ring.field
    new_ring, drop = hyperplane_ring(ring, coeffs)
    if target is not None:
        if target.var_names != new_ring.var_names:
            raise RingMismatchError("Target ring does not match the hyperplane")
        new_ring = target
    scale = field.neg(field.inv(field.element(coeffs[drop])))
    images: list[GradedPolynomial] = []
    for i in range(ring.n_vars):
        if i == drop:
            images.append(
                GradedPolynomial.linear_form(
                    new_ring,
                    [field.mul(scale, field.element(c)) for j, c in enumerate(coeffs) if j != drop],
                )
            )
        else:
            images.append(GradedPolynomial.variable(new_ring, i if i < drop else i - 1))
    return substitute(f, images, new_ring)


_NUMBER = re.compile(r"\d+(?:/\d+)?")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_DIGITS = re.compile(r"\d+")


def _split_names(token: str, names: tuple[str, ...]) -> list[str]:
    """Split juxtaposed variable names greedily by longest prefix."""
    if token in names:
        return [token]
    for name in sorted(names, key=len, reverse=True):
        if token.startswith(name):
            return [name, *_split_names(token[len(name) :], names)]
    raise ParseError(f"Unknown variable {token!r}")


def parse_polynomial(text: str, ring: RingSpec) -> GradedPolynomial:
    """Parse the textual grammar printed by ``GradedPolynomial.to_string``.

    Terms are joined by ``+``/``-``; coefficients are integers or ``a/b``;
    ``^`` (or ``**``) marks powers and ``*`` between factors is optional.
    """
    source = text.strip()
    if not source:
        raise ParseError("Empty polynomial")
    field = ring.field
    pos = 0
    terms: dict[Monomial, FieldElement] = {}

    def skip_spaces() -> None:
        nonlocal pos
        while pos < len(source) and source[pos].isspace():
            pos += 1

    expect_term = True
    sign = 1
    while True:
        skip_spaces()
        if pos >= len(source):
            break
        ch = source[pos]
        if ch in "+-":
            sign = sign * (-1 if ch == "-" else 1)
            pos += 1
            expect_term = True
            continue
        if not expect_term:
            raise ParseError(f"Expected '+' or '-' at position {pos} in {text!r}")
        coeff: Fraction = Fraction(1)
        exps = [0] * ring.n_vars
        seen_factor = False
        while True:
            skip_spaces()
            if pos >= len(source) or source[pos] in "+-":
                break
            if source[pos] == "*":
                pos += 1
                continue
            number = _NUMBER.match(source, pos)
            if number:
                coeff *= Fraction(number.group())
                pos = number.end()
                seen_factor = True
                continue
            name = _NAME.match(source, pos)
            if not name:
                raise ParseError(f"Unexpected character {source[pos]!r} in {text!r}")
            pos = name.end()
            power = 1
            skip_spaces()
            caret = next((op for op in ("^", "**") if source.startswith(op, pos)), "")
            if caret:
                pos += len(caret)
                skip_spaces()
                exponent = _DIGITS.match(source, pos)
                if not exponent:
                    raise ParseError(f"Missing exponent in {text!r}")
                power = int(exponent.group())
                pos = exponent.end()
            parts = _split_names(name.group(), ring.var_names)
            for part in parts[:-1]:
                exps[ring.index(part)] += 1
            exps[ring.index(parts[-1])] += power
            seen_factor = True
        if not seen_factor:
            raise ParseError(f"Dangling sign in {text!r}")
        try:
            value = field.element(coeff * sign)
        except ZeroDivisionError as e:
            raise ParseError(str(e)) from e
        mon = tuple(exps)
        terms[mon] = field.add(terms.get(mon, field.zero), value)
        sign = 1
        expect_term = False
    if expect_term:
        raise ParseError(f"Polynomial ends with a sign: {text!r}")
    return GradedPolynomial(ring, {m: c for m, c in terms.items() if c})
