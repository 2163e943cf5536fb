"""Wedge-multiplication maps in an exterior algebra on f1..fm and their ranks."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from enum import Enum

import structlog

from syzygy.domain.entities.reports import GammaKernelReport, PsiRankReport
from syzygy.domain.errors import DimensionMismatchError, UnclassifiedError
from syzygy.domain.services.exactalg import ExactMatrix, rank
from syzygy.domain.valueobjects import FieldSpec, PsiTag, PsiType, SkewBasis
from syzygy.domain.valueobjects.skew import SLOT_PAIRS, LinearForm

logger = structlog.get_logger(__name__)

WedgeMonomial = tuple[int, ...]
# A block vector: one {monomial: coefficient} mapping per block.
BlockVector = Sequence[Mapping[WedgeMonomial, int]]

RANK_TO_BETA45 = {40: 4, 36: 8, 32: 12}
RANK_TO_BETA45_CHAR3 = {38: 6, 34: 10, 32: 12}


class BetaCase(str, Enum):
    """Singular pencil configurations with their formal symbol assignments."""

    MULTIPLICITY2 = "multiplicity2"
    MULTIPLICITY3 = "multiplicity3"


# Upper slots of the 4x4 multiplier block. Multiplicity 2 uses
# f1..f5 = s.phi0, t.phi0, s.phi1, t.phi1, phi2; multiplicity 3 uses
# f1..f5 = s^2.phi0, st.phi0, t^2.phi0, phi1, phi2.
BETA_SLOTS: dict[BetaCase, tuple[int, ...]] = {
    BetaCase.MULTIPLICITY2: (5, 3, 4, 1, 2, 0),
    BetaCase.MULTIPLICITY3: (4, 2, 3, 1, 2, 0),
}


def wedge_block_matrix(
    grid: Sequence[Sequence[LinearForm]], basis: SkewBasis, degree: int = 2
) -> ExactMatrix:
    """Matrix of (x_j) -> (sum_j x_j ^ grid[j][k])_k on blocks of degree-``degree`` forms.

    Columns are indexed by (source block j, monomial), rows by (target block k,
    monomial of degree + 1), each block ordered lexicographically.
    """
    field = basis.field
    sources = len(grid)
    targets = len(grid[0]) if grid else 0
    if any(len(row) != targets for row in grid):
        raise DimensionMismatchError("Multiplier grid rows must have equal length")
    if any(len(form) != basis.m for row in grid for form in row):
        raise DimensionMismatchError(f"Linear forms must have {basis.m} coefficients")
    src = basis.monomials(degree)
    tgt_size = len(basis.monomials(degree + 1))
    m = ExactMatrix.zeros(field, targets * tgt_size, sources * len(src))
    for j, row in enumerate(grid):
        for k, form in enumerate(row):
            for l, coeff in enumerate(form):
                if not coeff:
                    continue
                c = field.element(coeff)
                for u_pos, u in enumerate(src):
                    sign, w = basis.wedge(u, (l,))
                    if not sign:
                        continue
                    r = k * tgt_size + basis.index(w)
                    col = j * len(src) + u_pos
                    m.data[r, col] = field.add(m.data[r, col], c if sign > 0 else field.neg(c))
    return m


def _psi_grid(t: PsiType) -> list[list[LinearForm]]:
    return [[t.entry(r, c) for c in range(4)] for r in range(4)]


def alpha_matrix(t: PsiType, field: FieldSpec) -> ExactMatrix:
    """The map x -> x ^ psi from four copies of Lambda^2 to four copies of Lambda^3."""
    return wedge_block_matrix(_psi_grid(t), SkewBasis(field=field, m=t.m))


def psi_rank(t: PsiType, field: FieldSpec) -> PsiRankReport:
    m = alpha_matrix(t, field)
    r = rank(m)
    logger.debug("psi_rank_computed", type=str(t), field=str(field), rank=r)
    return PsiRankReport(type_tag=str(t), field=str(field), rows=m.rows, cols=m.cols, rank=r)


def char3_kernel_dims() -> dict[str, int]:
    """Kernel dimensions of alpha over F_3 for the two types affected by characteristic 3."""
    f3 = FieldSpec.prime(3)
    return {
        tag.value: psi_rank(PsiType.catalog(tag), f3).kernel_dim for tag in (PsiTag.A, PsiTag.B)
    }


def gamma_kernel(
    omega: Sequence[Sequence[LinearForm]], field: FieldSpec, m: int = 5
) -> GammaKernelReport:
    """Kernel of (x1, x2) -> (x1^w12 + x2^w22, x1^w13 + x2^w23) on Lambda^2 blocks.

    ``omega`` is the 2x2 block ((w12, w13), (w22, w23)); the generic value is 4
    and anything larger is flagged degenerate.
    """
    if len(omega) != 2 or any(len(row) != 2 for row in omega):
        raise DimensionMismatchError("The omega block must be 2x2")
    matrix = wedge_block_matrix(omega, SkewBasis(field=field, m=m))
    dimension = matrix.cols - rank(matrix)
    logger.debug("gamma_kernel_computed", field=str(field), dimension=dimension)
    return GammaKernelReport(dimension=dimension, degenerate=dimension > 4)


def beta_matrix(case: BetaCase, field: FieldSpec) -> ExactMatrix:
    return alpha_matrix(PsiType.from_indices(BETA_SLOTS[case]), field)


def beta_kernel(case: BetaCase | str, field: FieldSpec) -> int:
    """Kernel dimension of the non-minimal map for a singular pencil: 4 resp. 8 generically."""
    case = BetaCase(case)
    matrix = beta_matrix(case, field)
    dimension = matrix.cols - rank(matrix)
    logger.debug("beta_kernel_computed", case=case.value, field=str(field), dimension=dimension)
    return dimension


def classify_rank(r: int, characteristic: int = 0) -> int:
    """Predicted beta_45 = 44 - rank(alpha) for ranks in the catalog."""
    table = RANK_TO_BETA45_CHAR3 if characteristic == 3 else RANK_TO_BETA45
    if r not in table:
        raise UnclassifiedError(
            f"Rank {r} of alpha is unclassified in characteristic {characteristic}"
        )
    return table[r]


def block_vector(basis: SkewBasis, blocks: BlockVector, degree: int = 2) -> list[int]:
    """Coordinates of a block vector in the column basis of ``wedge_block_matrix``.

    Monomials are 0-based index tuples in any order; each is sorted with the
    corresponding sign.
    """
    size = len(basis.monomials(degree))
    coords = [basis.field.zero] * (size * len(blocks))
    for j, block in enumerate(blocks):
        for mon, coeff in block.items():
            if len(mon) != degree:
                raise DimensionMismatchError(f"Expected a degree-{degree} monomial, got {mon}")
            if len(set(mon)) != len(mon):
                continue
            sign, ordered = basis.wedge((), tuple(mon))
            pos = j * size + basis.index(ordered)
            value = basis.field.element(coeff if sign > 0 else -coeff)
            coords[pos] = basis.field.add(coords[pos], value)
    return coords


def conjugate_psi(t: PsiType, p: Sequence[Sequence[int]], field: FieldSpec) -> PsiType:
    """P^T psi P for a scalar 4x4 matrix P, again a skew block."""
    if len(p) != 4 or any(len(row) != 4 for row in p):
        raise DimensionMismatchError("Conjugating matrix must be 4x4")
    grid = _psi_grid(t)
    slots: list[LinearForm] = []
    for r, c in SLOT_PAIRS:
        form = [0] * t.m
        for a in range(4):
            for b in range(4):
                scale = p[a][r] * p[b][c]
                if scale:
                    form = [x + scale * y for x, y in zip(form, grid[a][b], strict=True)]
        slots.append(tuple(int(field.element(x)) if field.is_prime else x for x in form))
    return PsiType(slots=tuple(slots), tag=t.tag)


def change_generators(t: PsiType, g: Sequence[Sequence[int]]) -> PsiType:
    """Substitute f_i -> sum_k g[k][i] f_k in every slot."""
    slots = tuple(
        tuple(sum(g[k][i] * form[i] for i in range(t.m)) for k in range(len(g)))
        for form in t.slots
    )
    return PsiType(slots=slots, tag=t.tag)
