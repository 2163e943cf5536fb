"""Graded Betti tables via Koszul homology and via explicit free resolutions."""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass
from functools import reduce
from math import comb

import structlog

from syzygy.domain.entities.betti_table import BettiTable
from syzygy.domain.entities.ideal import Ideal
from syzygy.domain.entities.reports import BettiInvariants, StrandRecord
from syzygy.domain.entities.resolution import FreeComplex, PolyMatrix
from syzygy.domain.errors import ResourceCeilingError
from syzygy.domain.services.exactalg import ExactMatrix, kernel_basis, rank, select_independent
from syzygy.domain.services.groebner import buchberger, reducer, standard_monomials
from syzygy.domain.services.polyring import (
    graded_piece_basis,
    hyperplane_ring,
    monomial_lcm,
    monomial_product,
    restrict_to_hyperplane,
)
from syzygy.domain.valueobjects import FieldElement, GradedPolynomial, Monomial, SkewBasis

logger = structlog.get_logger(__name__)

DEFAULT_MAX_MATRIX_DIM = 4000


def cut_by_linear_sections(ideal: Ideal, count: int, rng: random.Random) -> Ideal:
    """Restrict an ideal to ``count`` random hyperplanes, one variable less each time.

    Graded Betti numbers are preserved when the linear forms are a regular
    sequence on S/I, as for generic forms on a Cohen-Macaulay quotient.
    """
    current = ideal
    field = ideal.ring.field
    for _ in range(count):
        ring = current.ring
        if ring.n_vars <= 1:
            raise ValueError("Cannot cut a ring with a single variable")
        coeffs = [field.random_element(rng) for _ in range(ring.n_vars - 1)]
        coeffs.append(field.random_element(rng, nonzero=True))
        target, _ = hyperplane_ring(ring, coeffs)
        current = Ideal.of(
            target, (restrict_to_hyperplane(g, coeffs, target) for g in current.generators)
        )
    return current


@dataclass
class _Artinian:
    """Graded pieces of S/I and multiplication by variables between them."""

    bases: list[list[Monomial]]
    # mult[r][k] maps standard monomial index in degree r to a sparse vector in degree r + 1
    mult: list[list[list[dict[int, FieldElement]]]]


def _quotient_pieces(ideal: Ideal, top: int) -> _Artinian:
    ring = ideal.ring
    gb = buchberger(ideal, max_degree=top)
    normal = reducer(gb)
    bases = [standard_monomials(gb, d) for d in range(top + 1)]
    mult: list[list[list[dict[int, FieldElement]]]] = []
    for r in range(top):
        index = {m: i for i, m in enumerate(bases[r + 1])}
        per_var: list[list[dict[int, FieldElement]]] = []
        for k in range(ring.n_vars):
            shift = tuple(1 if t == k else 0 for t in range(ring.n_vars))
            images = []
            for m in bases[r]:
                nf = normal({monomial_product(m, shift): ring.field.one})
                images.append({index[b]: c for b, c in nf.items()})
            per_var.append(images)
        mult.append(per_var)
    return _Artinian(bases=bases, mult=mult)


def _koszul_map(
    pieces: _Artinian, wedge: SkewBasis, i: int, r: int, max_dim: int
) -> ExactMatrix | None:
    """Matrix of Lambda^i V (x) A_r -> Lambda^{i-1} V (x) A_{r+1}; None if a side is zero."""
    field = wedge.field
    if i == 0 or r + 1 >= len(pieces.bases):
        return None
    src_mons = wedge.monomials(i)
    tgt_mons = wedge.monomials(i - 1)
    a_src, a_tgt = len(pieces.bases[r]), len(pieces.bases[r + 1])
    cols, rows = len(src_mons) * a_src, len(tgt_mons) * a_tgt
    if not rows or not cols:
        return None
    if rows > max_dim or cols > max_dim:
        raise ResourceCeilingError(
            f"Koszul matrix {rows}x{cols} exceeds the ceiling {max_dim}"
        )
    m = ExactMatrix.zeros(field, rows, cols)
    for s, lam in enumerate(src_mons):
        for t, k in enumerate(lam):
            sign = field.one if t % 2 == 0 else field.neg(field.one)
            rest = wedge.index(lam[:t] + lam[t + 1 :])
            images = pieces.mult[r][k]
            for a in range(a_src):
                col = s * a_src + a
                for b, c in images[a].items():
                    row = rest * a_tgt + b
                    m.data[row, col] = field.add(m.data[row, col], field.mul(sign, c))
    return m


def koszul_strands(
    ideal: Ideal,
    *,
    max_row: int = 4,
    linear_sections: int = 0,
    seed: int = 0,
    max_matrix_dim: int = DEFAULT_MAX_MATRIX_DIM,
) -> list[StrandRecord]:
    """Koszul homology computations for every (i, j) with j - i <= max_row."""
    reduced = (
        cut_by_linear_sections(ideal, linear_sections, random.Random(seed))
        if linear_sections
        else ideal
    )
    ring = reduced.ring
    n = ring.n_vars
    if not ring.is_standard_graded:
        raise ValueError("Koszul homology needs a standard graded ring")
    pieces = _quotient_pieces(reduced, max_row + 1)
    wedge = SkewBasis(field=ring.field, m=n)
    ranks: dict[tuple[int, int], int] = {}

    def rank_out(i: int, r: int) -> int:
        if r < 0 or i > n:
            return 0
        if (i, r) not in ranks:
            matrix = _koszul_map(pieces, wedge, i, r, max_matrix_dim)
            ranks[(i, r)] = rank(matrix) if matrix is not None else 0
        return ranks[(i, r)]

    records: list[StrandRecord] = []
    for r in range(max_row + 1):
        for i in range(n + 1):
            middle = comb(n, i) * len(pieces.bases[r])
            if not middle:
                continue
            out_rank = rank_out(i, r)
            in_rank = rank_out(i + 1, r - 1)
            beta = middle - out_rank - in_rank
            records.append(StrandRecord(i, i + r, middle, out_rank, in_rank, beta))
    logger.debug(
        "koszul_strands_computed",
        ring=str(ring),
        sections=linear_sections,
        hilbert=[len(b) for b in pieces.bases],
        strands=len(records),
    )
    return records


def table_from_strands(records: Sequence[StrandRecord], num_vars: int) -> BettiTable:
    return BettiTable(entries={(s.i, s.j): s.beta for s in records if s.beta}, num_vars=num_vars)


def betti_via_koszul(
    ideal: Ideal,
    *,
    max_row: int = 4,
    linear_sections: int = 0,
    seed: int = 0,
    max_matrix_dim: int = DEFAULT_MAX_MATRIX_DIM,
) -> BettiTable:
    """Betti table of S/I from Koszul homology, rows 0..max_row.

    ``linear_sections`` generic hyperplanes (drawn from ``seed``) are cut first;
    this is exact for arithmetically Cohen-Macaulay quotients.
    """
    records = koszul_strands(
        ideal,
        max_row=max_row,
        linear_sections=linear_sections,
        seed=seed,
        max_matrix_dim=max_matrix_dim,
    )
    table = table_from_strands(records, ideal.ring.n_vars)
    logger.info("betti_table_computed", entries=len(table.entries), num_vars=table.num_vars)
    return table


def _vector_space_index(
    twists: list[int], ring_basis: dict[int, list[Monomial]], t: int
) -> dict[tuple[int, Monomial], int]:
    index: dict[tuple[int, Monomial], int] = {}
    for c, tw in enumerate(twists):
        for u in ring_basis.get(t - tw, []):
            index[(c, u)] = len(index)
    return index


def shift_bound(ideal: Ideal) -> int:
    """Largest degree j with some beta_ij(S/I) nonzero, bounded from above.

    Betti numbers only grow under passing to the initial ideal, and each shift
    of a monomial ideal is the degree of an lcm of its generators; so the lcm of
    all leading monomials of a Groebner basis bounds every shift. Redundant
    generators add their own degrees to F_1 and F_2.
    """
    if not ideal.generators:
        return 0
    ring = ideal.ring
    lead = buchberger(ideal).leading_monomials
    top = reduce(monomial_lcm, lead, (0,) * ring.n_vars)
    lcm_degree = sum(w * e for w, e in zip(ring.var_weights, top, strict=True))
    return max(lcm_degree, *ideal.degrees())


def free_resolution(
    ideal: Ideal,
    max_len: int | None = None,
    max_deg: int | None = None,
    *,
    max_matrix_dim: int = DEFAULT_MAX_MATRIX_DIM,
) -> FreeComplex:
    """A graded free resolution of S/I by degree-wise syzygy computation.

    F_1 uses the given generators as they are, so redundant generators give a
    non-minimal complex; higher syzygy modules get minimal generators. Every
    step searches degrees up to ``shift_bound(ideal)``, capped by ``max_deg``
    when given.
    """
    ring = ideal.ring
    field = ring.field
    n = ring.n_vars
    max_len = n if max_len is None else max_len
    bound = shift_bound(ideal)
    basis_cache: dict[int, list[Monomial]] = {}

    def piece(d: int) -> list[Monomial]:
        if d < 0:
            return []
        if d not in basis_cache:
            basis_cache[d] = graded_piece_basis(ring, d)
        return basis_cache[d]

    twists: list[list[int]] = [[0]]
    differentials: list[PolyMatrix] = []
    if ideal.generators:
        twists.append([g.degree for g in ideal.generators])
        differentials.append([list(ideal.generators)])

    while differentials and len(twists) - 1 < max_len and twists[-1]:
        prev = differentials[-1]
        src_tw, tgt_tw = twists[-1], twists[-2]
        new_cols: list[list[GradedPolynomial]] = []
        new_tw: list[int] = []
        kernel_prev: list[tuple[FieldElement, ...]] = []
        index_prev: dict[tuple[int, Monomial], int] = {}
        step = len(twists)
        top = bound if max_deg is None else min(bound, max_deg)
        for t in range(min(src_tw), top + 1):
            for d in range(t + 1):
                piece(d)
            col_index = _vector_space_index(src_tw, basis_cache, t)
            row_index = _vector_space_index(tgt_tw, basis_cache, t)
            if not col_index:
                kernel_prev, index_prev = [], col_index
                continue
            if len(col_index) > max_matrix_dim or len(row_index) > max_matrix_dim:
                raise ResourceCeilingError(
                    f"Syzygy matrix {len(row_index)}x{len(col_index)}"
                    f" exceeds the ceiling {max_matrix_dim}"
                )
            m = ExactMatrix.zeros(field, len(row_index), len(col_index))
            for (c, u), col in col_index.items():
                for r in range(len(tgt_tw)):
                    for mon, coeff in prev[r][c]:
                        row = row_index[(r, monomial_product(mon, u))]
                        m.data[row, col] = field.add(m.data[row, col], coeff)
            kernel = kernel_basis(m) if len(row_index) else [
                tuple(field.one if i == k else field.zero for i in range(len(col_index)))
                for k in range(len(col_index))
            ]
            lower: list[list[FieldElement]] = []
            for vec in kernel_prev:
                for var in range(n):
                    shift = tuple(1 if q == var else 0 for q in range(n))
                    lifted = [field.zero] * len(col_index)
                    for (c, u), pos in index_prev.items():
                        if vec[pos]:
                            lifted[col_index[(c, monomial_product(u, shift))]] = vec[pos]
                    lower.append(lifted)
            fresh = select_independent(field, lower, [list(v) for v in kernel])
            for k in fresh:
                vec = kernel[k]
                column: list[dict[Monomial, FieldElement]] = [{} for _ in src_tw]
                for (c, u), pos in col_index.items():
                    if vec[pos]:
                        column[c][u] = vec[pos]
                new_cols.append(
                    [GradedPolynomial(ring, terms, normalized=True) for terms in column]
                )
                new_tw.append(t)
            kernel_prev, index_prev = kernel, col_index
        if not new_tw:
            break
        matrix = [[new_cols[c][r] for c in range(len(new_tw))] for r in range(len(src_tw))]
        twists.append(new_tw)
        differentials.append(matrix)
        logger.debug("syzygy_module_computed", step=len(twists) - 1, rank=len(new_tw))
    return FreeComplex(ring=ring, twists=twists, differentials=differentials)


def _find_unit(c: FreeComplex) -> tuple[int, int, int] | None:
    for k, matrix in enumerate(c.differentials, start=1):
        for r, row in enumerate(matrix):
            for col, entry in enumerate(row):
                if entry.is_constant():
                    return k, r, col
    return None


def minimalize(c: FreeComplex) -> tuple[FreeComplex, BettiTable]:
    """Cancel unit entries until the complex is minimal; returns it with its Betti table."""
    twists = [list(t) for t in c.twists]
    diffs = [[list(row) for row in m] for m in c.differentials]
    ring = c.ring
    field = ring.field
    cancellations = 0
    while True:
        current = FreeComplex(ring=ring, twists=twists, differentials=diffs)
        found = _find_unit(current)
        if found is None:
            break
        k, r, col = found
        d = diffs[k - 1]
        unit = next(iter(d[r][col].terms.values()))
        inv = field.inv(unit)
        new_d = []
        for rr, row in enumerate(d):
            if rr == r:
                continue
            factor = row[col].scale(inv)
            new_d.append(
                [entry - factor * d[r][cc] for cc, entry in enumerate(row) if cc != col]
            )
        diffs[k - 1] = new_d
        if k < len(diffs):
            diffs[k] = [row for rr, row in enumerate(diffs[k]) if rr != col]
        if k >= 2:
            diffs[k - 2] = [[e for cc, e in enumerate(row) if cc != r] for row in diffs[k - 2]]
        del twists[k][col]
        del twists[k - 1][r]
        cancellations += 1
    while len(twists) > 1 and not twists[-1]:
        twists.pop()
        diffs.pop()
    result = FreeComplex(ring=ring, twists=twists, differentials=diffs)
    logger.debug("complex_minimalized", cancellations=cancellations, length=result.length)
    return result, result.betti_table()


def hilbert_from_betti(t: BettiTable, n: int, d: int) -> int:
    """H(d) = sum_i (-1)^i sum_j beta_ij binom(n + d - j, n), binom(a, n) = 0 for a < n."""
    total = 0
    for (i, j), beta in t:
        a = n + d - j
        if a >= n:
            total += (-1) ** i * beta * comb(a, n)
    return total


def invariants(t: BettiTable) -> BettiInvariants:
    """Regularity max(j - i), projective dimension, depth and Gorenstein symmetry."""
    if not t:
        return BettiInvariants(0, 0, t.num_vars, True)
    regularity = max(j - i for i, j in t.entries)
    pd = max(i for i, _ in t.entries)
    top = max(j for _, j in t.entries)
    symmetric = all(t.get(pd - i, top - j) == v for (i, j), v in t)
    return BettiInvariants(
        regularity=regularity,
        projective_dimension=pd,
        depth=t.num_vars - pd,
        is_gorenstein_symmetric=symmetric,
    )


def hilbert_values(t: BettiTable, degrees: range) -> list[int]:
    n = t.num_vars - 1
    return [hilbert_from_betti(t, n, d) for d in degrees]

