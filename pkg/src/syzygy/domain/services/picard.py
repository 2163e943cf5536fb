"""Intersection theory on blown-up rational surfaces and the Reider-type ampleness check.

Lattice conventions: on P2 the hyperplane class has H^2 = 1; on P1 x P1 the
rulings satisfy (1,0).(0,1) = 1; on F2 the section H and fibre R satisfy
H^2 = 2, H.R = 1, R^2 = 0, so the negative section is H - 2R. Exceptional
curves are orthogonal to the base with E_i.E_j = -delta_ij.
"""

from __future__ import annotations

from collections.abc import Iterator
from fractions import Fraction
from itertools import product

import structlog

from syzygy.domain.entities.reports import AmplenessVerdict, CriticalDivisor, VerdictKind
from syzygy.domain.errors import DimensionMismatchError, ReiderInapplicableError
from syzygy.domain.valueobjects import DivisorClass, SurfaceBase, SurfaceLattice

logger = structlog.get_logger(__name__)

# Gram matrices of the base Picard lattices.
_BASE_FORMS: dict[SurfaceBase, tuple[tuple[int, ...], ...]] = {
    SurfaceBase.P2: ((1,),),
    SurfaceBase.P1XP1: ((0, 1), (1, 0)),
    SurfaceBase.F2: ((2, 1), (1, 0)),
}

_BASE_CANONICAL: dict[SurfaceBase, tuple[int, ...]] = {
    SurfaceBase.P2: (-3,),
    SurfaceBase.P1XP1: (-2, -2),
    SurfaceBase.F2: (-2, 0),
}


def _check(l: SurfaceLattice, d: DivisorClass) -> DivisorClass:
    if len(d.base_coords) != l.base.rank:
        raise DimensionMismatchError(
            f"{l.base.value} classes have {l.base.rank} base coordinates, got {len(d.base_coords)}"
        )
    try:
        return d.padded(l.num_exceptional)
    except ValueError as e:
        raise DimensionMismatchError(str(e)) from e


def intersect(l: SurfaceLattice, d1: DivisorClass, d2: DivisorClass) -> int:
    """Intersection number of two classes on the blown-up surface."""
    a, b = _check(l, d1), _check(l, d2)
    gram = _BASE_FORMS[l.base]
    base = sum(
        x * gram[i][j] * y
        for i, x in enumerate(a.base_coords)
        for j, y in enumerate(b.base_coords)
    )
    return base - sum(x * y for x, y in zip(a.exc_coords, b.exc_coords, strict=True))


def self_intersection(l: SurfaceLattice, d: DivisorClass) -> int:
    return intersect(l, d, d)


def canonical_class(l: SurfaceLattice) -> DivisorClass:
    """K_S = pullback of K_X plus the sum of all exceptional curves."""
    return DivisorClass(_BASE_CANONICAL[l.base], (1,) * l.num_exceptional)


def arithmetic_genus(l: SurfaceLattice, d: DivisorClass) -> int:
    """p_a = (D^2 + D.K) / 2 + 1."""
    numerator = self_intersection(l, d) + intersect(l, d, canonical_class(l))
    if numerator % 2:
        raise ValueError(f"D^2 + D.K = {numerator} is odd for {d.format(l.base)}")
    return numerator // 2 + 1


def adjoint_class(l: SurfaceLattice, c: DivisorClass) -> DivisorClass:
    return canonical_class(l) + _check(l, c)


def _base_effective(base: SurfaceBase, coords: tuple[int, ...]) -> bool:
    """Membership in the effective cone of the base surface."""
    if base is SurfaceBase.F2:
        # xH + yR = x(H - 2R) + (2x + y)R
        x, y = coords
        return x >= 0 and 2 * x + y >= 0
    return all(c >= 0 for c in coords)


def _base_range(l: SurfaceLattice, c: DivisorClass) -> Iterator[tuple[int, ...]]:
    """Nonzero effective base classes G with C - 2G still effective on the base."""
    top = c.base_coords
    if l.base is SurfaceBase.P2:
        candidates: Iterator[tuple[int, ...]] = ((e,) for e in range(0, top[0] // 2 + 1))
    elif l.base is SurfaceBase.P1XP1:
        candidates = product(range(top[0] // 2 + 1), range(top[1] // 2 + 1))
    else:
        # 2(h - 2a) + r - 2b >= 0 bounds b from above
        candidates = (
            (a, b)
            for a in range(top[0] // 2 + 1)
            for b in range(-2 * a, (2 * top[0] - 4 * a + top[1]) // 2 + 1)
        )
    for g in candidates:
        if not any(g):
            continue
        rest = tuple(t - 2 * x for t, x in zip(top, g, strict=True))
        if _base_effective(l.base, g) and _base_effective(l.base, rest):
            yield g


def candidate_divisors(l: SurfaceLattice, c: DivisorClass) -> Iterator[DivisorClass]:
    """The reduced candidate families for destabilizing divisors.

    Single exceptional curves E_k, differences E_k - E_{k+1} for infinitely
    near pairs, and base classes minus a 0/1 pattern of exceptional curves.
    """
    c = _check(l, c)
    s = l.num_exceptional
    r = l.base.rank
    for k in range(1, s + 1):
        yield DivisorClass.exceptional(r, s, k)
    for k, nxt in sorted(l.infinitely_near):
        yield DivisorClass.exceptional(r, s, k) - DivisorClass.exceptional(r, s, nxt)
    for g in _base_range(l, c):
        for pattern in product((0, -1), repeat=s):
            d = DivisorClass(g, pattern)
            # C is irreducible, so no candidate may contain it
            if intersect(l, d, c) >= 0:
                yield d


def _reider_check(l: SurfaceLattice, c: DivisorClass, i: int) -> int:
    if i not in (0, 1):
        raise ValueError("Only 0- and 1-very ampleness are supported")
    square = self_intersection(l, c)
    if square < 5 + 4 * i:
        raise ReiderInapplicableError(
            f"L^2 = {square} < {5 + 4 * i}; the Reider criterion does not apply for i={i}"
        )
    return square


def critical_divisors(l: SurfaceLattice, c: DivisorClass, i: int) -> list[CriticalDivisor]:
    """Candidates D with D.(C - D) <= 1 + i, ordered lexicographically by coordinates."""
    _reider_check(l, c, i)
    c = _check(l, c)
    found = {}
    for d in candidate_divisors(l, c):
        value = intersect(l, d, c - d)
        if value <= 1 + i:
            found[d.coords] = CriticalDivisor(divisor=d, value=value)
    result = [found[k] for k in sorted(found)]
    logger.debug(
        "critical_divisors_found",
        surface=l.base.value,
        curve=c.format(l.base),
        i=i,
        count=len(result),
    )
    return result


def ampleness_verdict(l: SurfaceLattice, c: DivisorClass, i: int) -> AmplenessVerdict:
    """i = 0: holds iff nothing is 0-critical. i = 1: holds outside the 1-critical divisors."""
    try:
        critical = critical_divisors(l, c, i)
    except ReiderInapplicableError as e:
        return AmplenessVerdict(base=l.base, i=i, applicable=False, reason=str(e))
    if not critical:
        verdict = VerdictKind.HOLDS
    elif i == 0:
        verdict = VerdictKind.FAILS
    else:
        verdict = VerdictKind.HOLDS_OUTSIDE
    return AmplenessVerdict(
        base=l.base, i=i, applicable=True, verdict=verdict, critical=tuple(critical)
    )


def adjoint_hilbert_poly(l: SurfaceLattice, c: DivisorClass) -> tuple[int, Fraction, int]:
    """(a, b, c) with P(n) = a/2 n^2 + b n + c for the image of |K + C|.

    a = (K + C)^2 and b = a/2 + 1 - g(K + C), a half-integer when a is odd.
    """
    adjoint = adjoint_class(l, c)
    a = self_intersection(l, adjoint)
    b = Fraction(a, 2) + 1 - arithmetic_genus(l, adjoint)
    return a, b, 1


def brill_noether_rho(g: int, r: int, d: int) -> int:
    """Brill-Noether number g - (r + 1)(g - d + r)."""
    return g - (r + 1) * (g - d + r)
