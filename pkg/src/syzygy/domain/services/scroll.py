"""Rational normal scrolls: minor ideals, section counts and Betti predictions."""

from __future__ import annotations

from math import comb

from syzygy.domain.entities.betti_table import BettiTable
from syzygy.domain.entities.ideal import Ideal
from syzygy.domain.errors import DimensionMismatchError, UnclassifiedError
from syzygy.domain.valueobjects import GradedPolynomial, RingSpec, ScrollType, SectionPartition

GENUS = 9
# beta_45 values with a genus-9 Betti table of the symmetric template.
TEMPLATE_BETA45 = frozenset({4, 8, 12, 24})
TEMPLATE_BETA45_CHAR3 = frozenset({6, 10})


def scroll_matrix(t: ScrollType, ring: RingSpec) -> list[list[GradedPolynomial]]:
    """The 2 x f matrix whose 2x2 minors cut out the scroll.

    Variables are consumed block by block in ring order: a block e uses e + 1
    variables and contributes columns (x_0..x_{e-1}) over (x_1..x_e).
    """
    if ring.n_vars != t.ambient + 1:
        raise DimensionMismatchError(
            f"{t} lives in P^{t.ambient}, the ring has {ring.n_vars} variables"
        )
    top: list[GradedPolynomial] = []
    bottom: list[GradedPolynomial] = []
    start = 0
    for e in t.e:
        for j in range(e):
            top.append(GradedPolynomial.variable(ring, start + j))
            bottom.append(GradedPolynomial.variable(ring, start + j + 1))
        start += e + 1
    return [top, bottom]


def scroll_ideal(t: ScrollType, ring: RingSpec) -> Ideal:
    """All binom(f, 2) maximal minors of the scroll matrix."""
    top, bottom = scroll_matrix(t, ring)
    minors = [
        top[a] * bottom[b] - top[b] * bottom[a]
        for a in range(t.f)
        for b in range(a + 1, t.f)
    ]
    return Ideal(ring, tuple(minors))


def eagon_northcott_betti(f: int, num_vars: int = 0) -> BettiTable:
    """beta_00 = 1 and beta_{i,i+1} = i * binom(f, i+1) for 1 <= i <= f - 1."""
    if f < 2:
        raise ValueError("Eagon-Northcott needs f >= 2")
    entries = {(0, 0): 1}
    entries.update({(i, i + 1): i * comb(f, i + 1) for i in range(1, f)})
    return BettiTable(entries=entries, num_vars=num_vars)


def h0_bundle(t: ScrollType, a: int, b: int) -> int:
    """h0(O(aH + bR)) on P(E), independent of the splitting type."""
    if a < 0:
        raise ValueError("The H-coefficient must be nonnegative")
    if b < -1:
        raise ValueError("The section count formula needs b >= -1")
    d = t.dim
    return t.f * comb(a + d - 1, d) + (b + 1) * comb(a + d - 1, d - 1)


def cb_term_rank(b: int, j: int, f: int) -> int:
    """Rank of the j-th term of C^b: Lambda^j F (x) S_{b-j} G or Lambda^{j+1} F (x) D_{j-b-1} G*."""
    if b < -1 or j < 0:
        raise ValueError("C^b terms need b >= -1 and j >= 0")
    if j <= b:
        return comb(f, j) * (b - j + 1)
    return comb(f, j + 1) * (j - b)


def type_from_partition(p: SectionPartition) -> ScrollType:
    """Dual partition of the section differences: e_i = #{j : d_j >= i} - 1."""
    d = p.differences
    if not d:
        raise ValueError("Section partition has no positive differences")
    e = tuple(sum(1 for x in d if x >= i) - 1 for i in range(1, d[0] + 1))
    return ScrollType(e=e)


def predict_betti(psi_beta45: int, characteristic: int = 0) -> BettiTable:
    """Genus-9 template table (1; 21, 64, 70, a; a, 70, 64, 21; 1) with a = beta_45."""
    allowed = TEMPLATE_BETA45 | (TEMPLATE_BETA45_CHAR3 if characteristic == 3 else frozenset())
    if psi_beta45 not in allowed:
        raise UnclassifiedError(f"No genus-{GENUS} template table with beta_45 = {psi_beta45}")
    a = psi_beta45
    rows = {
        0: {0: 1},
        1: {1: 21, 2: 64, 3: 70, 4: a},
        2: {3: a, 4: 70, 5: 64, 6: 21},
        3: {7: 1},
    }
    return BettiTable.from_rows(rows, num_vars=GENUS)
