"""Buchberger's algorithm, normal forms, graded quotient dimensions and ring-map kernels."""

from __future__ import annotations

import heapq
from collections.abc import Callable, Sequence
from typing import Literal

import structlog

from syzygy.domain.entities.ideal import GroebnerBasis, Ideal
from syzygy.domain.errors import (
    DimensionMismatchError,
    NotHomogeneousError,
    RingMismatchError,
    TruncationExceededError,
)
from syzygy.domain.services.exactalg import ExactMatrix, kernel_basis, select_independent
from syzygy.domain.services.polyring import (
    coefficient_vector,
    graded_piece_basis,
    monomial_divides,
    monomial_lcm,
    monomial_product,
    monomial_quotient,
)
from syzygy.domain.valueobjects import (
    FieldElement,
    FieldSpec,
    GradedPolynomial,
    Monomial,
    MonomialOrder,
    RingSpec,
)

logger = structlog.get_logger(__name__)

Terms = dict[Monomial, FieldElement]
SortKey = Callable[[Monomial], tuple[int, ...]]


def _reduce(
    terms: Terms,
    basis: Sequence[tuple[Monomial, Terms]],
    key: SortKey,
    field: FieldSpec,
    *,
    full: bool = True,
) -> Terms:
    """Divide by monic basis elements; with ``full`` also reduce the tail."""
    f = dict(terms)
    remainder: Terms = {}
    while f:
        lm = max(f, key=key)
        c = f[lm]
        divisor = next((g for g in basis if monomial_divides(g[0], lm)), None)
        if divisor is None:
            if not full:
                remainder.update(f)
                return remainder
            remainder[lm] = c
            del f[lm]
            continue
        shift = monomial_quotient(lm, divisor[0])
        for mon, gc in divisor[1].items():
            target = monomial_product(mon, shift)
            value = field.sub(f.get(target, field.zero), field.mul(c, gc))
            if value:
                f[target] = value
            else:
                f.pop(target, None)
    return remainder


def _monic(terms: Terms, key: SortKey, field: FieldSpec) -> tuple[Monomial, Terms]:
    lm = max(terms, key=key)
    inv = field.inv(terms[lm])
    return lm, {m: field.mul(c, inv) for m, c in terms.items()}


def _spoly(f: tuple[Monomial, Terms], g: tuple[Monomial, Terms], field: FieldSpec) -> Terms:
    lcm = monomial_lcm(f[0], g[0])
    out: Terms = {}
    shift_f = monomial_quotient(lcm, f[0])
    for mon, c in f[1].items():
        out[monomial_product(mon, shift_f)] = c
    shift_g = monomial_quotient(lcm, g[0])
    for mon, c in g[1].items():
        target = monomial_product(mon, shift_g)
        value = field.sub(out.get(target, field.zero), c)
        if value:
            out[target] = value
        else:
            out.pop(target, None)
    return out


class _PairQueue:
    """Critical pairs ordered by (sugar degree, insertion index) with lazy deletion."""

    def __init__(self) -> None:
        self._heap: list[tuple[int, int, int, int]] = []
        self._live: set[tuple[int, int]] = set()
        self._counter = 0

    def push(self, degree: int, i: int, j: int) -> None:
        heapq.heappush(self._heap, (degree, self._counter, i, j))
        self._counter += 1
        self._live.add((i, j))

    def discard(self, pair: tuple[int, int]) -> None:
        self._live.discard(pair)

    def pop(self) -> tuple[int, int, int] | None:
        while self._heap:
            degree, _, i, j = heapq.heappop(self._heap)
            if (i, j) in self._live:
                self._live.remove((i, j))
                return degree, i, j
        return None

    def live(self) -> set[tuple[int, int]]:
        return set(self._live)

    @property
    def pushed(self) -> int:
        return self._counter


def _update(
    lms: list[Monomial],
    queue: _PairQueue,
    lmf: Monomial,
    key: SortKey,
    degree_of: Callable[[Monomial], int],
) -> None:
    """Gebauer-Moeller update for a new basis element with leading monomial ``lmf``."""
    t = len(lms)
    for i, j in queue.live():
        lij = monomial_lcm(lms[i], lms[j])
        if (
            monomial_divides(lmf, lij)
            and lij != monomial_lcm(lms[i], lmf)
            and lij != monomial_lcm(lms[j], lmf)
        ):
            queue.discard((i, j))
    groups: dict[Monomial, list[int]] = {}
    for i, lm in enumerate(lms):
        groups.setdefault(monomial_lcm(lm, lmf), []).append(i)
    kept: list[Monomial] = []
    for lcm in sorted(groups, key=key):
        if all(not monomial_divides(other, lcm) for other in kept):
            kept.append(lcm)
    for lcm in kept:
        members = groups[lcm]
        # coprime leading monomials: the pair reduces to zero
        if any(lcm == monomial_product(lms[i], lmf) for i in members):
            continue
        queue.push(degree_of(lcm), min(members), t)


def buchberger(
    ideal: Ideal, order: MonomialOrder | None = None, *, max_degree: int | None = None
) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal``.

    S-pairs are processed by ascending sugar degree, ties by creation index,
    after discarding pairs with the coprime and chain criteria. With
    ``max_degree`` pairs above that degree are skipped and the result is exact
    only in degrees up to the bound.
    """
    order = order or MonomialOrder.grevlex()
    ring = ideal.ring
    field = ring.field
    key = order.sort_key(ring.var_weights)
    degree_of = ring.degree

    basis: list[tuple[Monomial, Terms]] = []
    lms: list[Monomial] = []
    queue = _PairQueue()
    reductions = 0
    zero_reductions = 0

    def add(terms: Terms) -> None:
        element = _monic(terms, key, field)
        _update(lms, queue, element[0], key, degree_of)
        basis.append(element)
        lms.append(element[0])

    for g in sorted(ideal.generators, key=lambda h: (h.degree, key(h.leading_monomial(order)))):
        reduced = _reduce(dict(g.terms), basis, key, field)
        if reduced:
            add(reduced)

    while True:
        item = queue.pop()
        if item is None:
            break
        degree, i, j = item
        if max_degree is not None and degree > max_degree:
            continue
        s = _spoly(basis[i], basis[j], field)
        reduced = _reduce(s, basis, key, field) if s else {}
        reductions += 1
        if reduced:
            add(reduced)
        else:
            zero_reductions += 1

    # minimalize, then interreduce
    minimal: list[tuple[Monomial, Terms]] = []
    for element in sorted(basis, key=lambda e: key(e[0])):
        if all(not monomial_divides(m[0], element[0]) for m in minimal):
            minimal.append(element)
    reduced_basis: list[GradedPolynomial] = []
    for idx, element in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        tail = _reduce(element[1], others, key, field)
        reduced_basis.append(GradedPolynomial(ring, _monic(tail, key, field)[1], normalized=True))

    stats = {
        "pairs": queue.pushed,
        "reductions": reductions,
        "zero_reductions": zero_reductions,
        "size": len(reduced_basis),
    }
    logger.debug(
        "groebner_basis_computed",
        ring=str(ring),
        order=str(order),
        max_degree=max_degree,
        **stats,
    )
    return GroebnerBasis(
        ideal=ideal,
        order=order,
        elements=tuple(reduced_basis),
        truncated_at=max_degree,
        stats=stats,
    )


def _check_degree(gb: GroebnerBasis, d: int) -> None:
    if not gb.is_exact_through(d):
        raise TruncationExceededError(
            f"Groebner basis truncated at degree {gb.truncated_at}, degree {d} requested"
        )


def _basis_terms(gb: GroebnerBasis) -> list[tuple[Monomial, Terms]]:
    return [(lm, dict(g.terms)) for lm, g in zip(gb.leading_monomials, gb.elements)]


def normal_form(f: GradedPolynomial, gb: GroebnerBasis) -> GradedPolynomial:
    """Fully reduced remainder of f; zero exactly when f lies in the ideal."""
    if f.ring != gb.ring:
        raise RingMismatchError(f"Ring mismatch: {f.ring} vs {gb.ring}")
    if f.is_zero():
        return f
    _check_degree(gb, f.degree)
    key = gb.order.sort_key(gb.ring.var_weights)
    remainder = _reduce(dict(f.terms), _basis_terms(gb), key, gb.ring.field)
    return GradedPolynomial(gb.ring, remainder, normalized=True)


def reducer(gb: GroebnerBasis) -> Callable[[Terms], Terms]:
    """A normal-form function on raw term dicts, reusing the basis preprocessing."""
    key = gb.order.sort_key(gb.ring.var_weights)
    basis = _basis_terms(gb)
    field = gb.ring.field
    return lambda terms: _reduce(terms, basis, key, field)


def standard_monomials(gb: GroebnerBasis, d: int) -> list[Monomial]:
    """Degree-d monomials divisible by no leading monomial of the basis."""
    _check_degree(gb, d)
    lms = gb.leading_monomials
    return [
        m
        for m in graded_piece_basis(gb.ring, d, gb.order)
        if not any(monomial_divides(lm, m) for lm in lms)
    ]


def quotient_piece_dim(gb: GroebnerBasis, d: int) -> int:
    """dim_k (S/I)_d."""
    if d < 0:
        raise ValueError("Degree must be nonnegative")
    return len(standard_monomials(gb, d))


def _check_forms(forms: Sequence[GradedPolynomial], source: RingSpec, target: RingSpec) -> int:
    if len(forms) < 2:
        raise DimensionMismatchError("A ring map needs at least two forms")
    if len(forms) != target.n_vars:
        raise DimensionMismatchError(
            f"{len(forms)} forms for a target ring with {target.n_vars} variables"
        )
    if any(g.ring != source for g in forms):
        raise RingMismatchError("Forms must live in the source ring")
    if not all(g.is_homogeneous() and not g.is_zero() for g in forms):
        raise NotHomogeneousError("Forms must be nonzero and homogeneous")
    degrees = {g.degree for g in forms}
    if len(degrees) != 1:
        raise NotHomogeneousError(f"Forms must share one degree, got {sorted(degrees)}")
    if not target.is_standard_graded:
        raise ValueError("The target ring must be standard graded")
    return degrees.pop()


def _kernel_by_elimination(
    source_ideal: Ideal,
    forms: Sequence[GradedPolynomial],
    target: RingSpec,
    delta: int,
    max_degree: int | None,
) -> list[GradedPolynomial]:
    source = source_ideal.ring
    n = source.n_vars
    names = [n_ if n_ not in source.var_names else f"y_{n_}" for n_ in target.var_names]
    graph = RingSpec(
        field=source.field,
        var_names=source.var_names + tuple(names),
        var_weights=source.var_weights + (delta,) * target.n_vars,
    )
    pad = (0,) * target.n_vars

    def lift(g: GradedPolynomial) -> GradedPolynomial:
        return GradedPolynomial(graph, {m + pad: c for m, c in g}, normalized=True)

    generators = [lift(g) for g in source_ideal.generators]
    for j, g in enumerate(forms):
        y = [0] * (n + target.n_vars)
        y[n + j] = 1
        generators.append(GradedPolynomial.monomial(graph, tuple(y)) - lift(g))
    gb = buchberger(
        Ideal(graph, tuple(generators)),
        MonomialOrder.block_elim(n),
        max_degree=None if max_degree is None else max_degree * delta,
    )
    kernel = []
    for g in gb.elements:
        if all(not any(m[:n]) for m, _ in g):
            kernel.append(GradedPolynomial(target, {m[n:]: c for m, c in g}, normalized=True))
    return sorted(kernel, key=lambda h: h.degree)


def _kernel_by_linear_algebra(
    source_ideal: Ideal,
    forms: Sequence[GradedPolynomial],
    target: RingSpec,
    delta: int,
    max_degree: int,
) -> list[GradedPolynomial]:
    source = source_ideal.ring
    field = source.field
    gb = buchberger(source_ideal, max_degree=max_degree * delta)
    normal = reducer(gb)
    images: dict[Monomial, Terms] = {(0,) * target.n_vars: {(0,) * source.n_vars: field.one}}
    generators: list[GradedPolynomial] = []
    previous: list[GradedPolynomial] = []
    for e in range(1, max_degree + 1):
        basis = graded_piece_basis(target, e)
        columns: list[Terms] = []
        for mon in basis:
            j = next(i for i, x in enumerate(mon) if x)
            lower = list(mon)
            lower[j] -= 1
            prod = GradedPolynomial(source, images[tuple(lower)], normalized=True) * forms[j]
            images[mon] = normal(dict(prod.terms))
            columns.append(images[mon])
        support = sorted({m for col in columns for m in col})
        row_index = {m: i for i, m in enumerate(support)}
        rows = [[field.zero] * len(basis) for _ in support]
        for c, col in enumerate(columns):
            for m, value in col.items():
                rows[row_index[m]][c] = value
        if support:
            kernel = kernel_basis(ExactMatrix.from_rows(field, rows, cols=len(basis)))
        else:
            kernel = [
                tuple(field.one if i == c else field.zero for i in range(len(basis)))
                for c in range(len(basis))
            ]
        current = [
            GradedPolynomial(target, {m: v for m, v in zip(basis, vec) if v}, normalized=True)
            for vec in kernel
        ]
        lower_part = [
            coefficient_vector(GradedPolynomial.variable(target, i) * k, basis)
            for k in previous
            for i in range(target.n_vars)
        ]
        candidates = [coefficient_vector(k, basis) for k in current]
        fresh = select_independent(field, lower_part, candidates)
        generators.extend(current[i] for i in fresh)
        logger.debug(
            "ring_map_kernel_degree",
            degree=e,
            kernel_dim=len(current),
            new_generators=len(fresh),
        )
        previous = current
    return generators


def ring_map_kernel(
    source_ideal: Ideal,
    forms: Sequence[GradedPolynomial],
    target_ring: RingSpec,
    *,
    method: Literal["elimination", "linear"] = "elimination",
    max_degree: int | None = None,
) -> Ideal:
    """Ideal of relations among ``forms`` modulo ``source_ideal``.

    ``elimination`` builds the graph ideal {y_j - g_j} + I with the y-variables
    weighted by the common degree of the forms and eliminates the source
    variables. ``linear`` finds the kernel degree by degree from normal forms
    modulo I and returns minimal generators of degree at most ``max_degree``
    (3 by default).
    """
    delta = _check_forms(forms, source_ideal.ring, target_ring)
    if target_ring.field != source_ideal.ring.field:
        raise RingMismatchError("Source and target rings must share the base field")
    if method == "elimination":
        generators = _kernel_by_elimination(source_ideal, forms, target_ring, delta, max_degree)
    elif method == "linear":
        generators = _kernel_by_linear_algebra(
            source_ideal, forms, target_ring, delta, max_degree or 3
        )
    else:
        raise ValueError(f"Unknown kernel method: {method!r}")
    logger.info(
        "ring_map_kernel_computed",
        method=method,
        forms=len(forms),
        form_degree=delta,
        generators=len(generators),
        degrees=[g.degree for g in generators],
    )
    return Ideal(target_ring, tuple(generators))
