"""Unit tests for wedge-multiplication maps."""

import random

import pytest

from syzygy.domain.errors import DimensionMismatchError, UnclassifiedError
from syzygy.domain.services.exactalg import rank
from syzygy.domain.services.exterior import (
    BetaCase,
    alpha_matrix,
    beta_kernel,
    block_vector,
    change_generators,
    char3_kernel_dims,
    classify_rank,
    conjugate_psi,
    gamma_kernel,
    psi_rank,
    wedge_block_matrix,
)
from syzygy.domain.valueobjects import FieldSpec, PsiTag, PsiType, SkewBasis
from syzygy.domain.valueobjects.skew import basis_form

F3 = FieldSpec.prime(3)
F10007 = FieldSpec.prime(10007)
F32003 = FieldSpec.prime(32003)
QQ = FieldSpec.rational()

EXPECTED_RANKS = {PsiTag.A: 40, PsiTag.B: 36, PsiTag.C: 32, PsiTag.D: 32}


def unit_triangular(size, rng, p):
    """An invertible matrix with ones on the diagonal and random entries above it."""
    return [
        [1 if r == c else (rng.randrange(p) if c > r else 0) for c in range(size)]
        for r in range(size)
    ]


class TestAlphaMatrix:
    """Test the rank of x -> x ^ psi."""

    def test_shape(self):
        """Test four copies of Lambda^2 map to four copies of Lambda^3."""
        m = alpha_matrix(PsiType.catalog(PsiTag.A), F10007)
        assert m.shape == (40, 40)

    @pytest.mark.parametrize("field", [F10007, F32003, QQ], ids=str)
    @pytest.mark.parametrize("tag", list(PsiTag))
    def test_catalog_ranks(self, tag, field):
        """Test ranks 40, 36, 32, 32 away from characteristic three."""
        assert psi_rank(PsiType.catalog(tag), field).rank == EXPECTED_RANKS[tag]

    def test_report(self):
        """Test the rank report dictionary."""
        report = psi_rank(PsiType.catalog(PsiTag.A), F10007)
        assert report.to_dict() == {
            "type": "A",
            "field": "F_10007",
            "size": [40, 40],
            "rank": 40,
            "kernel_dim": 0,
        }

    def test_type_b_kernel_vectors(self):
        """Test f2^f4 in block three and f3^f5 in block four are annihilated."""
        basis = SkewBasis(QQ)
        m = alpha_matrix(PsiType.catalog(PsiTag.B), QQ)
        for blocks in ([{}, {}, {(1, 3): 1}, {}], [{}, {}, {}, {(2, 4): 1}]):
            assert not any(m.apply(block_vector(basis, blocks)))
        assert psi_rank(PsiType.catalog(PsiTag.B), QQ).kernel_dim == 4

    def test_type_a_moves_type_b_vector(self):
        """Test f2^f4 in block three is not annihilated once slot (3,4) holds f1."""
        basis = SkewBasis(F10007)
        m = alpha_matrix(PsiType.catalog(PsiTag.A), F10007)
        assert any(m.apply(block_vector(basis, [{}, {}, {(1, 3): 1}, {}])))


class TestCharacteristicThree:
    """Test kernel dimensions over F_3."""

    def test_kernel_dims(self):
        """Test A and B gain kernel over F_3."""
        assert char3_kernel_dims() == {"A": 2, "B": 6}

    def test_type_c_unchanged(self):
        """Test type C keeps rank 32 over F_3."""
        assert psi_rank(PsiType.catalog(PsiTag.C), F3).kernel_dim == 8


class TestRankInvariance:
    """Test ranks are preserved under changes of coordinates."""

    @pytest.mark.parametrize("tag", list(PsiTag))
    def test_conjugation(self, tag):
        """Test P^T psi P has the same rank for invertible P."""
        rng = random.Random(17)
        t = PsiType.catalog(tag)
        p = unit_triangular(4, rng, 10007)
        p = [list(row) for row in zip(*p)]
        conjugated = conjugate_psi(t, p, F10007)
        assert psi_rank(conjugated, F10007).rank == EXPECTED_RANKS[tag]

    @pytest.mark.parametrize("tag", list(PsiTag))
    def test_change_of_generators(self, tag):
        """Test an invertible substitution of f1..f5 keeps the rank."""
        rng = random.Random(23)
        g = unit_triangular(5, rng, 10007)
        changed = change_generators(PsiType.catalog(tag), g)
        assert psi_rank(changed, F10007).rank == EXPECTED_RANKS[tag]

    def test_conjugation_needs_square_matrix(self):
        """Test the conjugating matrix must be 4x4."""
        with pytest.raises(DimensionMismatchError):
            conjugate_psi(PsiType.catalog(PsiTag.A), [[1, 0], [0, 1]], F10007)


class TestGammaKernel:
    """Test the kernel of the 2x2 omega block map."""

    @pytest.mark.parametrize("field", [F10007, QQ], ids=str)
    def test_independent_forms(self, field):
        """Test four independent forms give a four-dimensional kernel."""
        omega = [[basis_form(1), basis_form(2)], [basis_form(3), basis_form(4)]]
        report = gamma_kernel(omega, field)
        assert report.dimension == 4
        assert not report.degenerate

    def test_repeated_form_is_degenerate(self):
        """Test w12 = w22 enlarges the kernel."""
        omega = [[basis_form(1), basis_form(2)], [basis_form(1), basis_form(4)]]
        report = gamma_kernel(omega, F10007)
        assert report.dimension > 4
        assert report.to_dict() == {"dimension": report.dimension, "degenerate": True}

    def test_block_shape(self):
        """Test the omega block must be 2x2."""
        with pytest.raises(DimensionMismatchError):
            gamma_kernel([[basis_form(1)]], F10007)


class TestBetaKernel:
    """Test kernels for pencils with a singular member."""

    def test_multiplicity_two(self):
        """Test the multiplicity-two map has a four-dimensional kernel."""
        assert beta_kernel(BetaCase.MULTIPLICITY2, F10007) == 4

    def test_multiplicity_three(self):
        """Test the multiplicity-three map has an eight-dimensional kernel."""
        assert beta_kernel("multiplicity3", F10007) == 8

    def test_unknown_case(self):
        """Test unknown case names raise."""
        with pytest.raises(ValueError):
            beta_kernel("multiplicity4", F10007)


class TestClassifyRank:
    """Test beta_45 = 44 - rank."""

    @pytest.mark.parametrize(("r", "expected"), [(40, 4), (36, 8), (32, 12)])
    def test_catalog(self, r, expected):
        """Test the ranks of the four psi types."""
        assert classify_rank(r) == expected

    def test_characteristic_three(self):
        """Test ranks 38 and 34 only occur over F_3."""
        assert classify_rank(38, 3) == 6
        assert classify_rank(34, 3) == 10
        with pytest.raises(UnclassifiedError):
            classify_rank(38)

    def test_unknown_rank(self):
        """Test a rank outside the catalog raises."""
        with pytest.raises(UnclassifiedError):
            classify_rank(39)


class TestWedgeBlockMatrix:
    """Test the general block wedge map."""

    def test_single_form(self):
        """Test x -> x ^ f1 on Lambda^2 of five generators has rank 6."""
        basis = SkewBasis(F10007)
        m = wedge_block_matrix([[basis_form(1)]], basis)
        assert m.shape == (10, 10)
        assert rank(m) == 6

    def test_ragged_grid(self):
        """Test rows of different lengths are rejected."""
        basis = SkewBasis(F10007)
        with pytest.raises(DimensionMismatchError):
            wedge_block_matrix([[basis_form(1)], [basis_form(1), basis_form(2)]], basis)

    def test_form_width_checked(self):
        """Test forms must have one coefficient per generator."""
        basis = SkewBasis(F10007, m=6)
        with pytest.raises(DimensionMismatchError):
            wedge_block_matrix([[basis_form(1)]], basis)

    def test_block_vector_signs(self):
        """Test an unsorted monomial picks up a sign."""
        basis = SkewBasis(F10007)
        assert block_vector(basis, [{(3, 1): 1}]) == block_vector(basis, [{(1, 3): -1}])
