"""Factories for polynomials, ideals and tables used across the test suite."""

from __future__ import annotations

import random

from syzygy.domain.entities import BettiTable, Ideal
from syzygy.domain.services.polyring import from_coefficients, graded_piece_basis, parse_polynomial
from syzygy.domain.valueobjects import GradedPolynomial, RingSpec


def polys(ring: RingSpec, *texts: str) -> list[GradedPolynomial]:
    """Parse several polynomials of one ring."""
    return [parse_polynomial(t, ring) for t in texts]


def ideal_of(ring: RingSpec, *texts: str) -> Ideal:
    """Build an ideal from polynomial strings."""
    return Ideal.of(ring, polys(ring, *texts))


def random_form(ring: RingSpec, d: int, rng: random.Random) -> GradedPolynomial:
    """A form of degree d with uniformly random coefficients."""
    basis = graded_piece_basis(ring, d)
    return from_coefficients(ring, basis, [ring.field.random_element(rng) for _ in basis])


def canonical_table(row1: tuple[int, ...], row2: tuple[int, ...]) -> BettiTable:
    """(1; row1 from column 1; row2 from column 1; beta_{7,10} = 1) in nine variables."""
    rows = {
        0: {0: 1},
        1: dict(enumerate(row1, start=1)),
        2: dict(enumerate(row2, start=1)),
        3: {7: 1},
    }
    return BettiTable.from_rows(rows, num_vars=9)


def pentagonal_table(beta45: int) -> BettiTable:
    """The genus-9 table (1; 21, 64, 70, a; a, 70, 64, 21; 1)."""
    return canonical_table((21, 64, 70, beta45), (0, 0, beta45, 70, 64, 21))
