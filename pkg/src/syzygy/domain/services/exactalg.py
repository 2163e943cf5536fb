"""Exact dense linear algebra over F_p and the rationals."""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product

import numpy as np
import structlog
from sympy import QQ
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_add, gf_irreducible_p, gf_mul, gf_rem, gf_sub
from sympy.polys.matrices import DomainMatrix

from syzygy.domain.errors import DimensionMismatchError
from syzygy.domain.valueobjects.field import FieldElement, FieldSpec

logger = structlog.get_logger(__name__)

Vector = tuple[FieldElement, ...]


@dataclass(frozen=True, eq=False)
class ExactMatrix:
    """A dense matrix over an exact field.

    Prime-field entries live in an int64 array of canonical residues; rational
    entries live in an object array of ``Fraction`` values.
    """

    field: FieldSpec
    data: np.ndarray

    def __post_init__(self) -> None:
        if self.data.ndim != 2:
            raise DimensionMismatchError(f"Matrix data must be 2-D, got shape {self.data.shape}")

    @classmethod
    def from_rows(
        cls, field: FieldSpec, rows: Sequence[Sequence[int | Fraction]], cols: int | None = None
    ) -> ExactMatrix:
        """Build from nested rows; ``cols`` fixes the width of an empty matrix."""
        if not rows:
            return cls.zeros(field, 0, cols or 0)
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            raise DimensionMismatchError("All rows must have the same length")
        return cls(field, field.array([list(r) for r in rows]).reshape(len(rows), widths.pop()))

    @classmethod
    def from_entries(
        cls, field: FieldSpec, rows: int, cols: int, entries: Sequence[int | Fraction]
    ) -> ExactMatrix:
        """Build from row-major entries."""
        if len(entries) != rows * cols:
            raise DimensionMismatchError(f"Expected {rows * cols} entries, got {len(entries)}")
        if not entries:
            return cls.zeros(field, rows, cols)
        return cls(field, field.array(list(entries)).reshape(rows, cols))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> ExactMatrix:
        if field.is_prime:
            return cls(field, np.zeros((rows, cols), dtype=np.int64))
        data = np.empty((rows, cols), dtype=object)
        data.fill(Fraction(0))
        return cls(field, data)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> ExactMatrix:
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.data[i, i] = field.one
        return m

    @classmethod
    def random(cls, field: FieldSpec, rows: int, cols: int, rng: random.Random) -> ExactMatrix:
        return cls.from_entries(
            field, rows, cols, [field.random_element(rng) for _ in range(rows * cols)]
        )

    @property
    def rows(self) -> int:
        return int(self.data.shape[0])

    @property
    def cols(self) -> int:
        return int(self.data.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> Vector:
        """Entries in row-major order."""
        return tuple(self._scalar(x) for x in self.data.reshape(-1))

    def _scalar(self, x: object) -> FieldElement:
        return int(x) if self.field.is_prime else Fraction(x)  # type: ignore[arg-type]

    def row(self, i: int) -> Vector:
        return tuple(self._scalar(x) for x in self.data[i])

    def to_lists(self) -> list[list[FieldElement]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def apply(self, vector: Sequence[FieldElement]) -> Vector:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise DimensionMismatchError(f"Vector of length {len(vector)} for {self.cols} columns")
        if not self.rows:
            return ()
        if self.field.is_prime:
            p = self.field.p
            v = np.asarray(vector, dtype=np.int64) % p
            # row sums of products stay below 2^63 only blockwise
            out = np.zeros(self.rows, dtype=np.int64)
            for start in range(0, self.cols, 1024):
                block = (self.data[:, start : start + 1024] * v[start : start + 1024]) % p
                out = (out + block.sum(axis=1) % p) % p
            return tuple(int(x) for x in out)
        v_obj = np.asarray([Fraction(x) for x in vector], dtype=object)
        if not self.cols:
            return (Fraction(0),) * self.rows
        return tuple(Fraction(x) for x in self.data.dot(v_obj))

    def matmul(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise DimensionMismatchError(f"Cannot multiply {self.shape} by {other.shape}")
        columns = [other.column(j) for j in range(other.cols)]
        products = [self.apply(c) for c in columns]
        return ExactMatrix.from_rows(
            self.field,
            [[products[j][i] for j in range(other.cols)] for i in range(self.rows)],
            cols=other.cols,
        )

    def column(self, j: int) -> Vector:
        return tuple(self._scalar(x) for x in self.data[:, j])

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.field, self.data.T.copy())

    def hstack(self, other: ExactMatrix) -> ExactMatrix:
        if self.rows != other.rows:
            raise DimensionMismatchError("hstack needs equal row counts")
        return ExactMatrix(self.field, np.hstack([self.data, other.data]))

    def vstack(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.cols:
            raise DimensionMismatchError("vstack needs equal column counts")
        return ExactMatrix(self.field, np.vstack([self.data, other.data]))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> ExactMatrix:
        return ExactMatrix(self.field, self.data[np.ix_(list(rows), list(cols))].copy())

    def is_zero(self) -> bool:
        return not np.any(self.data != 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and bool(np.all(self.data == other.data))
        )

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols} over {self.field})"


def _echelon_mod_p(a: np.ndarray, p: int, *, reduced: bool) -> tuple[np.ndarray, list[int]]:
    a = a.copy()
    n_rows, n_cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = a[r, c:] * inv % p
        column = a[:, c].copy()
        column[r] = 0
        if not reduced:
            column[:r] = 0
        targets = np.flatnonzero(column)
        if targets.size:
            factors = column[targets].reshape(-1, 1)
            a[targets, c:] = (a[targets, c:] - factors * a[r, c:]) % p
        pivots.append(c)
        r += 1
    return a, pivots


def _rref_rational(m: ExactMatrix) -> tuple[np.ndarray, list[int]]:
    dm = DomainMatrix(
        [[QQ(x.numerator, x.denominator) for x in m.row(i)] for i in range(m.rows)],
        m.shape,
        QQ,
    )
    reduced, pivots = dm.rref()
    rows = reduced.to_list()
    data = np.empty(m.shape, dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            data[i, j] = Fraction(int(x.numerator), int(x.denominator))
    return data, list(pivots)


def row_echelon(m: ExactMatrix, *, reduced: bool = True) -> tuple[ExactMatrix, tuple[int, ...]]:
    """Row echelon form and pivot columns, pivoting on the first nonzero entry.

    With ``reduced`` the form is the unique reduced row echelon form.
    """
    if m.rows == 0 or m.cols == 0:
        return m, ()
    if m.field.is_prime:
        data, pivots = _echelon_mod_p(m.data, m.field.p, reduced=reduced)
    else:
        data, pivots = _rref_rational(m)
    return ExactMatrix(m.field, data), tuple(pivots)


def rank(m: ExactMatrix) -> int:
    """Rank over the matrix's field."""
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.rows < m.cols:
        m = m.transpose()
    _, pivots = row_echelon(m, reduced=False)
    return len(pivots)


def kernel_basis(m: ExactMatrix) -> list[Vector]:
    """Basis of the right kernel, one vector per free column."""
    field = m.field
    if m.cols == 0:
        return []
    reduced, pivots = row_echelon(m)
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v: list[FieldElement] = [field.zero] * m.cols
        v[free] = field.one
        for k, pc in enumerate(pivots):
            v[pc] = field.neg(reduced._scalar(reduced.data[k, free]))
        basis.append(tuple(v))
    return basis


def solve(m: ExactMatrix, rhs: Sequence[FieldElement]) -> Vector | None:
    """One solution of m.x = rhs, or None when the system is inconsistent."""
    if len(rhs) != m.rows:
        raise DimensionMismatchError(f"Right-hand side of length {len(rhs)} for {m.rows} rows")
    field = m.field
    if m.rows == 0:
        return (field.zero,) * m.cols
    column = ExactMatrix.from_rows(field, [[x] for x in rhs])
    reduced, pivots = row_echelon(m.hstack(column))
    if pivots and pivots[-1] == m.cols:
        return None
    x: list[FieldElement] = [field.zero] * m.cols
    for k, pc in enumerate(pivots):
        x[pc] = reduced._scalar(reduced.data[k, m.cols])
    return tuple(x)


def independent_columns(m: ExactMatrix) -> tuple[int, ...]:
    """Indices of the first maximal set of linearly independent columns."""
    if m.rows == 0 or m.cols == 0:
        return ()
    _, pivots = row_echelon(m, reduced=False)
    return pivots


def select_independent(
    field: FieldSpec,
    base: Sequence[Sequence[FieldElement]],
    candidates: Sequence[Sequence[FieldElement]],
) -> list[int]:
    """Indices of candidates that extend span(base), greedily in order."""
    vectors = [*base, *candidates]
    if not candidates:
        return []
    matrix = ExactMatrix.from_rows(field, vectors).transpose()
    offset = len(base)
    return [c - offset for c in independent_columns(matrix) if c >= offset]


def span_dimension(field: FieldSpec, vectors: Iterable[Sequence[FieldElement]]) -> int:
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    return rank(ExactMatrix.from_rows(field, rows))


GFElement = tuple[int, ...]


class GaloisField:
    """The finite field F_{p^k} = F_p[a]/(mu).

    ``mu`` is the first monic irreducible polynomial of degree k in
    lexicographic order of its coefficients. Elements are coefficient tuples
    (constant term first) of length k.
    """

    def __init__(self, p: int, k: int) -> None:
        if k < 1:
            raise ValueError("Extension degree must be positive")
        self.p = p
        self.k = k
        self.modulus = self._find_modulus()
        self.order = p**k

    def _find_modulus(self) -> list[int]:
        for tail in product(range(self.p), repeat=self.k):
            candidate = [1, *tail]
            if gf_irreducible_p(candidate, self.p, ZZ):
                return candidate
        raise ValueError(f"No irreducible polynomial of degree {self.k} over F_{self.p}")

    def _to_dense(self, x: GFElement) -> list[int]:
        dense = [int(c) % self.p for c in reversed(x)]
        while dense and dense[0] == 0:
            dense.pop(0)
        return dense

    def _from_dense(self, dense: list[int]) -> GFElement:
        coeffs = [int(c) % self.p for c in reversed(dense)]
        coeffs += [0] * (self.k - len(coeffs))
        return tuple(coeffs[: self.k])

    @cached_property
    def zero(self) -> GFElement:
        return (0,) * self.k

    @cached_property
    def one(self) -> GFElement:
        return self.embed(1)

    @cached_property
    def generator(self) -> GFElement:
        """The class of the polynomial variable."""
        return self._from_dense(gf_rem([1, 0], self.modulus, self.p, ZZ))

    def embed(self, c: int) -> GFElement:
        return (int(c) % self.p,) + (0,) * (self.k - 1)

    def add(self, x: GFElement, y: GFElement) -> GFElement:
        return self._from_dense(gf_add(self._to_dense(x), self._to_dense(y), self.p, ZZ))

    def sub(self, x: GFElement, y: GFElement) -> GFElement:
        return self._from_dense(gf_sub(self._to_dense(x), self._to_dense(y), self.p, ZZ))

    def neg(self, x: GFElement) -> GFElement:
        return tuple(-c % self.p for c in x)

    def mul(self, x: GFElement, y: GFElement) -> GFElement:
        product_ = gf_mul(self._to_dense(x), self._to_dense(y), self.p, ZZ)
        return self._from_dense(gf_rem(product_, self.modulus, self.p, ZZ))

    def power(self, x: GFElement, e: int) -> GFElement:
        result = self.one
        base = x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, x: GFElement) -> GFElement:
        if not any(x):
            raise ZeroDivisionError("Zero has no inverse")
        return self.power(x, self.order - 2)

    def frobenius(self, x: GFElement) -> GFElement:
        return self.power(x, self.p)

    def random_element(self, rng: random.Random) -> GFElement:
        return tuple(rng.randrange(self.p) for _ in range(self.k))

    def generates(self, x: GFElement) -> bool:
        """True when x lies in no proper subfield."""
        for d in range(1, self.k):
            if self.k % d == 0 and self.power(x, self.p**d) == x:
                return False
        return True

    def mul_matrix(self, c: GFElement) -> list[list[int]]:
        """k x k matrix over F_p of y -> c*y in the power basis."""
        columns = []
        for j in range(self.k):
            basis = tuple(1 if i == j else 0 for i in range(self.k))
            columns.append(self.mul(c, basis))
        return [[columns[j][i] for j in range(self.k)] for i in range(self.k)]

    def __repr__(self) -> str:
        return f"GaloisField({self.p}^{self.k})"
