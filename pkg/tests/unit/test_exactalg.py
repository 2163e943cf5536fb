"""Unit tests for exact linear algebra and finite field extensions."""

import random
from fractions import Fraction

import pytest

from syzygy.domain.errors import DimensionMismatchError
from syzygy.domain.services.exactalg import (
    ExactMatrix,
    GaloisField,
    independent_columns,
    kernel_basis,
    rank,
    row_echelon,
    select_independent,
    solve,
    span_dimension,
)
from syzygy.domain.valueobjects import FieldSpec

F5 = FieldSpec.prime(5)
F7 = FieldSpec.prime(7)
F10007 = FieldSpec.prime(10007)
QQ = FieldSpec.rational()


class TestExactMatrix:
    """Test ExactMatrix construction and products."""

    def test_from_rows_reduces_entries(self):
        """Test entries are stored as canonical residues."""
        m = ExactMatrix.from_rows(F7, [[8, -1], [14, 3]])
        assert m.to_lists() == [[1, 6], [0, 3]]

    def test_ragged_rows_raise(self):
        """Test rows of different lengths are rejected."""
        with pytest.raises(DimensionMismatchError):
            ExactMatrix.from_rows(F7, [[1, 2], [3]])

    def test_from_entries_length_checked(self):
        """Test the entry count must match the shape."""
        with pytest.raises(DimensionMismatchError):
            ExactMatrix.from_entries(F7, 2, 2, [1, 2, 3])

    def test_empty_matrix_keeps_width(self):
        """Test an empty row list with explicit width."""
        m = ExactMatrix.from_rows(F7, [], cols=4)
        assert m.shape == (0, 4)

    def test_rational_entries(self):
        """Test rational matrices hold fractions."""
        m = ExactMatrix.from_rows(QQ, [[1, Fraction(1, 2)]])
        assert m.row(0) == (Fraction(1), Fraction(1, 2))

    def test_apply(self):
        """Test matrix-vector product modulo p."""
        m = ExactMatrix.from_rows(F7, [[1, 2], [3, 4]])
        assert m.apply([1, 1]) == (3, 0)

    def test_apply_wrong_length(self):
        """Test vector length must match the column count."""
        m = ExactMatrix.identity(F7, 3)
        with pytest.raises(DimensionMismatchError):
            m.apply([1, 2])

    def test_matmul_identity(self):
        """Test multiplication by the identity."""
        m = ExactMatrix.random(F10007, 3, 4, random.Random(1))
        assert ExactMatrix.identity(F10007, 3).matmul(m) == m

    def test_transpose_and_stack(self):
        """Test transpose, hstack and vstack shapes."""
        m = ExactMatrix.from_rows(F7, [[1, 2, 3]])
        assert m.transpose().shape == (3, 1)
        assert m.hstack(m).shape == (1, 6)
        assert m.vstack(m).shape == (2, 3)

    def test_equality_respects_field(self):
        """Test equal entries over different fields are different matrices."""
        assert ExactMatrix.identity(F5, 2) != ExactMatrix.identity(F7, 2)


class TestRank:
    """Test rank computations."""

    def test_empty(self):
        """Test the 0x0 matrix has rank 0."""
        assert rank(ExactMatrix.zeros(F7, 0, 0)) == 0

    def test_identity(self):
        """Test the identity has full rank."""
        assert rank(ExactMatrix.identity(F7, 3)) == 3

    def test_rank_depends_on_characteristic(self):
        """Test det = -2 is singular only in characteristic 2."""
        rows = [[1, 2], [3, 4]]
        assert rank(ExactMatrix.from_rows(FieldSpec.prime(2), rows)) == 1
        assert rank(ExactMatrix.from_rows(F7, rows)) == 2
        assert rank(ExactMatrix.from_rows(QQ, rows)) == 2

    def test_wide_matrix(self):
        """Test matrices with more columns than rows."""
        m = ExactMatrix.from_rows(F7, [[1, 2, 3, 4], [2, 4, 6, 1]])
        assert rank(m) == 2

    def test_row_operations_preserve_rank(self):
        """Test rank is invariant under row permutation and scaling."""
        rng = random.Random(5)
        m = ExactMatrix.random(F10007, 6, 8, rng)
        low = m.vstack(ExactMatrix.from_rows(F10007, [list(m.row(0))]))
        shuffled = [list(low.row(i)) for i in reversed(range(low.rows))]
        scaled = [[3 * x for x in row] for row in shuffled]
        assert rank(ExactMatrix.from_rows(F10007, scaled)) == rank(m) == 6

    def test_rank_plus_kernel(self):
        """Test rank + kernel dimension = number of columns."""
        rng = random.Random(11)
        for _ in range(5):
            a = ExactMatrix.random(F10007, 5, 3, rng)
            b = ExactMatrix.random(F10007, 3, 7, rng)
            m = a.matmul(b)
            assert rank(m) + len(kernel_basis(m)) == m.cols
            assert rank(m) == 3


class TestRowEchelon:
    """Test row reduction."""

    def test_reduced_form(self):
        """Test the reduced echelon form and pivot columns."""
        m = ExactMatrix.from_rows(QQ, [[2, 4, 2], [1, 3, 2]])
        reduced, pivots = row_echelon(m)
        assert pivots == (0, 1)
        assert reduced.row(0) == (1, 0, -1)
        assert reduced.row(1) == (0, 1, 1)

    def test_independent_columns(self):
        """Test the first maximal set of independent columns."""
        m = ExactMatrix.from_rows(F7, [[1, 2, 0], [2, 4, 1]])
        assert independent_columns(m) == (0, 2)


class TestKernel:
    """Test kernel bases."""

    def test_identity_kernel_is_empty(self):
        """Test an invertible matrix has no kernel."""
        assert kernel_basis(ExactMatrix.identity(F7, 4)) == []

    def test_rank_one(self):
        """Test a rank-one 2x2 matrix over F_5."""
        m = ExactMatrix.from_rows(F5, [[1, 1], [2, 2]])
        (v,) = kernel_basis(m)
        assert v == (4, 1)
        assert m.apply(v) == (0, 0)

    def test_kernel_vectors_annihilated(self):
        """Test every kernel vector maps to zero, over F_p and QQ."""
        for field in (F10007, QQ):
            m = ExactMatrix.random(field, 4, 9, random.Random(3))
            basis = kernel_basis(m)
            assert len(basis) == 5
            for v in basis:
                assert not any(m.apply(v))


class TestSolve:
    """Test linear system solving."""

    def test_identity(self):
        """Test solving with the identity returns the right-hand side."""
        assert solve(ExactMatrix.identity(F7, 3), [1, 2, 3]) == (1, 2, 3)

    def test_inconsistent(self):
        """Test the zero matrix with a nonzero right-hand side."""
        assert solve(ExactMatrix.zeros(F7, 2, 2), [1, 0]) is None

    def test_random_full_rank(self):
        """Test a random 20x20 system by its residual."""
        rng = random.Random(2)
        m = ExactMatrix.random(F10007, 20, 20, rng)
        rhs = [F10007.random_element(rng) for _ in range(20)]
        x = solve(m, rhs)
        assert x is not None
        assert m.apply(x) == tuple(rhs)

    def test_rhs_length_checked(self):
        """Test the right-hand side length must match the rows."""
        with pytest.raises(DimensionMismatchError):
            solve(ExactMatrix.identity(F7, 2), [1])


class TestSpan:
    """Test span helpers."""

    def test_select_independent(self):
        """Test candidates already in the base span are skipped."""
        base = [[1, 0, 0]]
        candidates = [[2, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]]
        assert select_independent(F7, base, candidates) == [1, 3]

    def test_select_without_candidates(self):
        """Test an empty candidate list."""
        assert select_independent(F7, [[1]], []) == []

    def test_span_dimension(self):
        """Test the dimension of a spanned subspace."""
        assert span_dimension(F7, [[1, 2], [2, 4], [0, 1]]) == 2
        assert span_dimension(F7, []) == 0


class TestGaloisField:
    """Test F_{p^k} arithmetic."""

    def test_modulus_is_first_irreducible(self):
        """Test x^2 + 1 is the first monic irreducible quadratic over F_3."""
        gf = GaloisField(3, 2)
        assert gf.modulus == [1, 0, 1]
        assert gf.order == 9

    def test_generator_squares_to_minus_one(self):
        """Test the generator is a root of the modulus."""
        gf = GaloisField(3, 2)
        assert gf.generator == (0, 1)
        assert gf.mul(gf.generator, gf.generator) == (2, 0)

    def test_inverse(self):
        """Test x * x^-1 = 1 for every nonzero element."""
        gf = GaloisField(5, 2)
        for a in range(5):
            for b in range(5):
                x = (a, b)
                if any(x):
                    assert gf.mul(x, gf.inv(x)) == gf.one

    def test_zero_has_no_inverse(self):
        """Test inverting zero raises."""
        with pytest.raises(ZeroDivisionError):
            GaloisField(5, 2).inv((0, 0))

    def test_frobenius_order(self):
        """Test Frobenius applied k times is the identity."""
        gf = GaloisField(7, 3)
        x = gf.random_element(random.Random(4))
        y = x
        for _ in range(3):
            y = gf.frobenius(y)
        assert y == x

    def test_generates(self):
        """Test prime-field elements lie in a proper subfield."""
        gf = GaloisField(3, 2)
        assert gf.generates(gf.generator)
        assert not gf.generates(gf.embed(2))

    def test_mul_matrix_matches_mul(self):
        """Test the multiplication matrix acts like multiplication."""
        gf = GaloisField(5, 3)
        rng = random.Random(8)
        c, y = gf.random_element(rng), gf.random_element(rng)
        matrix = ExactMatrix.from_rows(FieldSpec.prime(5), gf.mul_matrix(c))
        assert matrix.apply(y) == gf.mul(c, y)

    def test_degree_must_be_positive(self):
        """Test k = 0 is rejected."""
        with pytest.raises(ValueError):
            GaloisField(5, 0)
