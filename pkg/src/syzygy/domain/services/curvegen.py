"""Random genus-9 curve models, their adjoint series and canonical ideals.

Plane models carry ordinary singular points imposed through Hasse derivatives.
Quadric and cone models live in P3 as a pair (Q, F) where the quintic F has
dF proportional to dQ at each node, so that Q and F cut out a curve with a
node there. Points on the quadric are (1, v, u, uv) with local parameters
(u, v); points on the cone are (1, t, t^2, w) with local parameters (w, t).
Over small primes the nodes are placed as a single Galois orbit.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Sequence
from dataclasses import dataclass, replace
from functools import cache
from itertools import combinations
from math import comb
from typing import TypeVar

import structlog
import sympy
from tenacity import (
    RetryCallState,
    RetryError,
    Retrying,
    retry_if_exception_type,
    stop_after_attempt,
)

from syzygy.domain.entities.curve_model import AdjointBasis, CurveModel
from syzygy.domain.entities.ideal import Ideal
from syzygy.domain.entities.reports import CoincidenceReport
from syzygy.domain.errors import (
    DegenerateDrawError,
    EmptyLinearSystemError,
    RefusalError,
    ReseedError,
    UnsupportedFieldError,
)
from syzygy.domain.services.exactalg import (
    ExactMatrix,
    GaloisField,
    GFElement,
    kernel_basis,
    rank,
    select_independent,
    span_dimension,
)
from syzygy.domain.services.groebner import ring_map_kernel
from syzygy.domain.services.polyring import (
    coefficient_vector,
    derivative_multi_indices,
    evaluate,
    evaluate_extension,
    from_coefficients,
    graded_piece_basis,
    hasse_derivative_row,
    hasse_derivative_row_extension,
    partial_derivative,
    substitute,
)
from syzygy.domain.valueobjects import (
    Ambient,
    FieldElement,
    FieldSpec,
    GradedPolynomial,
    Monomial,
    PencilTag,
    Recipe,
    RingSpec,
    SectionPartition,
    SingularPoint,
)

logger = structlog.get_logger(__name__)

T = TypeVar("T")

GENUS = 9
CANONICAL_QUADRICS = 21
DEFAULT_MAX_ATTEMPTS = 100
DEFAULT_ORBIT_THRESHOLD = 1000
SURFACE_CURVE_DEGREE = 5
_SEED_STRIDE = 1_000_003

LocalExponent = tuple[int, int]


@dataclass(frozen=True)
class Construction:
    """Ambient, curve degree and multiplicities of the singular points."""

    ambient: Ambient
    degree: int
    roster: tuple[int, ...]
    through_base_point: bool = False
    on_twisted_cubic: bool = False


_SEVEN_NODES = (2,) * 7

CONSTRUCTIONS: dict[Recipe, Construction] = {
    Recipe.GENERAL: Construction(Ambient.PLANE, 9, (3, 3, 3) + (2,) * 10),
    Recipe.ONE_G15: Construction(Ambient.PLANE, 8, (3,) + (2,) * 9),
    Recipe.TWO_G15: Construction(Ambient.QUADRIC, SURFACE_CURVE_DEGREE, _SEVEN_NODES),
    Recipe.THREE_G15: Construction(
        Ambient.QUADRIC, SURFACE_CURVE_DEGREE, _SEVEN_NODES, through_base_point=True
    ),
    Recipe.G72: Construction(Ambient.PLANE, 7, (2,) * 6),
    Recipe.G14: Construction(Ambient.PLANE, 8, (4,) + (2,) * 6),
    Recipe.G14_X_G15: Construction(Ambient.PLANE, 7, (3,) + (2,) * 3),
    Recipe.G62: Construction(Ambient.PLANE, 6, (2,)),
    Recipe.G13: Construction(Ambient.PLANE, 7, (4,)),
    Recipe.MULT2_G15: Construction(Ambient.CONE, SURFACE_CURVE_DEGREE, _SEVEN_NODES),
    Recipe.MULT3_G15: Construction(
        Ambient.CONE, SURFACE_CURVE_DEGREE, _SEVEN_NODES, on_twisted_cubic=True
    ),
    Recipe.MULT2_PLUS_ORDINARY: Construction(
        Ambient.CONE, SURFACE_CURVE_DEGREE, _SEVEN_NODES, through_base_point=True
    ),
}


def ambient_ring(ambient: Ambient, field: FieldSpec) -> RingSpec:
    if ambient is Ambient.PLANE:
        return RingSpec.standard(field, 3, "u")
    return RingSpec.standard(field, 4, "y")


def canonical_ring(field: FieldSpec) -> RingSpec:
    return RingSpec.standard(field, GENUS, "x")


def surface_equation(ambient: Ambient, ring: RingSpec) -> GradedPolynomial:
    """y0*y3 - y1*y2 for the smooth quadric, y1^2 - y0*y2 for the cone."""
    y = [GradedPolynomial.variable(ring, i) for i in range(4)]
    if ambient is Ambient.QUADRIC:
        return y[0] * y[3] - y[1] * y[2]
    if ambient is Ambient.CONE:
        return y[1] * y[1] - y[0] * y[2]
    raise ValueError("Plane models have no surface equation")


@cache
def _galois(p: int, k: int) -> GaloisField:
    return GaloisField(p, k)


def _check_field(field: FieldSpec) -> None:
    if not field.is_prime:
        raise UnsupportedFieldError("Curve models are generated over prime fields only")
    if field.p == 2:
        raise UnsupportedFieldError("Characteristic 2 is not supported for node conditions")
    if field.p == 3:
        logger.info("characteristic_three_generation", field=str(field))


# Points


def _generating_element(gf: GaloisField, rng: random.Random) -> GFElement:
    while True:
        x = gf.random_element(rng)
        if gf.generates(x):
            return x


def _surface_point(
    ambient: Ambient, gf: GaloisField, a: GFElement, b: GFElement
) -> tuple[GFElement, ...]:
    if ambient is Ambient.QUADRIC:
        return (gf.one, b, a, gf.mul(a, b))
    return (gf.one, b, gf.mul(b, b), a)


def _local_parameters(ambient: Ambient, coords: Sequence[GFElement]) -> tuple[GFElement, GFElement]:
    """(u, v) on the quadric, (w, t) on the cone, for a point with y0 = 1."""
    if ambient is Ambient.QUADRIC:
        return coords[2], coords[1]
    return coords[3], coords[1]


def _plane_general_position(points: Sequence[tuple[int, ...]], field: FieldSpec) -> None:
    if len(set(points)) != len(points):
        raise DegenerateDrawError("Two singular points coincide")
    p = field.p
    for a, b, c in combinations(points, 3):
        det = (
            a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0])
        )
        if det % p == 0:
            raise DegenerateDrawError(f"Points {a}, {b}, {c} are collinear")


def _draw_plane_points(
    roster: Sequence[int], field: FieldSpec, rng: random.Random, orbits: bool
) -> tuple[SingularPoint, ...]:
    special = sorted((m for m in roster if m > 2), reverse=True)
    nodes = sum(1 for m in roster if m == 2)
    orbit_nodes = orbits and nodes > 1
    rational = special if orbit_nodes else [*special, *([2] * nodes)]
    coords = [
        (1, field.random_element(rng), field.random_element(rng)) for _ in rational
    ]
    _plane_general_position(coords, field)
    points = [SingularPoint.rational(c, m) for c, m in zip(coords, rational, strict=True)]
    if orbit_nodes:
        gf = _galois(field.p, nodes)
        a = _generating_element(gf, rng)
        b = gf.random_element(rng)
        points.append(SingularPoint(coords=(gf.one, a, b), multiplicity=2, degree=nodes))
    return tuple(points)


def _twisted_cubic(field: FieldSpec, rng: random.Random) -> tuple[int, ...]:
    """Coefficients of w = c(t), a cubic with nonzero leading term."""
    return (*(field.random_element(rng) for _ in range(3)), field.random_element(rng, nonzero=True))


def _evaluate_local(gf: GaloisField, coeffs: Sequence[int], x: GFElement) -> GFElement:
    value = gf.zero
    for c in reversed(coeffs):
        value = gf.add(gf.mul(value, x), gf.embed(c))
    return value


def _draw_surface_points(
    c: Construction, field: FieldSpec, rng: random.Random, orbits: bool
) -> tuple[SingularPoint, ...]:
    count = len(c.roster)
    cubic = _twisted_cubic(field, rng) if c.on_twisted_cubic else None
    if orbits:
        gf = _galois(field.p, count)
        b = _generating_element(gf, rng)
        if cubic is not None:
            a = _evaluate_local(gf, cubic, b)
        elif c.ambient is Ambient.QUADRIC:
            a = _generating_element(gf, rng)
        else:
            a = gf.random_element(rng)
        return (
            SingularPoint(coords=_surface_point(c.ambient, gf, a, b), multiplicity=2, degree=count),
        )
    gf = _galois(field.p, 1)
    bs = [field.random_element(rng) for _ in range(count)]
    if cubic is not None:
        as_ = [_evaluate_local(gf, cubic, (b,))[0] for b in bs]
    else:
        as_ = [field.random_element(rng) for _ in range(count)]
    # no two nodes on one line of a ruling
    if len(set(bs)) != count or (c.ambient is Ambient.QUADRIC and len(set(as_)) != count):
        raise DegenerateDrawError("Two nodes lie on a common ruling line")
    return tuple(
        SingularPoint(coords=_surface_point(c.ambient, gf, (a,), (b,)), multiplicity=2)
        for a, b in zip(as_, bs, strict=True)
    )


def rational_curve_points(
    field: FieldSpec, rng: random.Random, count: int = 7
) -> tuple[SingularPoint, ...]:
    """Nodes on the quadric lying on the bidegree (1, 2) curve u = r(v)."""
    r = [field.random_element(rng) for _ in range(2)] + [field.random_element(rng, nonzero=True)]
    gf = _galois(field.p, 1)
    vs: list[int] = []
    while len(vs) < count:
        v = field.random_element(rng)
        if v not in vs:
            vs.append(v)
    return tuple(
        SingularPoint(
            coords=_surface_point(Ambient.QUADRIC, gf, _evaluate_local(gf, r, (v,)), (v,)),
            multiplicity=2,
        )
        for v in vs
    )


# Linear conditions


def _vanishing_rows(
    basis: Sequence[Monomial], point: SingularPoint, field: FieldSpec, order: int
) -> list[list[FieldElement]]:
    """D^alpha F(point) = 0 for |alpha| <= order, split into F_p rows for orbits."""
    if order < 0:
        return []
    rows: list[list[FieldElement]] = []
    alphas = derivative_multi_indices(len(point.coords), order)
    if point.is_rational:
        coords = point.rational_coords
        for alpha in alphas:
            rows.append(hasse_derivative_row(basis, alpha, coords, field))
        return rows
    gf = _galois(field.p, point.degree)
    for alpha in alphas:
        rows.extend(hasse_derivative_row_extension(basis, alpha, point.coords, gf))
    return rows


def _local_rows(
    ambient: Ambient,
    exponents: Sequence[LocalExponent],
    points: Sequence[SingularPoint],
    field: FieldSpec,
) -> list[list[int]]:
    """Vanishing of sum c_ij a^i b^j at each point, in local parameters."""
    rows: list[list[int]] = []
    for pt in points:
        gf = _galois(field.p, pt.degree)
        a, b = _local_parameters(ambient, pt.coords)
        values = [gf.mul(gf.power(a, i), gf.power(b, j)) for i, j in exponents]
        rows.extend([v[k] for v in values] for k in range(gf.k))
    return rows


def _kernel(
    field: FieldSpec, rows: list[list[FieldElement]], cols: int
) -> list[tuple[FieldElement, ...]]:
    return kernel_basis(ExactMatrix.from_rows(field, rows, cols=cols))


def _random_member(
    ring: RingSpec,
    basis: Sequence[Monomial],
    kernel: Sequence[Sequence[FieldElement]],
    rng: random.Random,
) -> GradedPolynomial:
    field = ring.field
    coeffs = [field.zero] * len(basis)
    for vector in kernel:
        c = field.random_element(rng)
        for i, x in enumerate(vector[: len(basis)]):
            if x:
                coeffs[i] = field.add(coeffs[i], field.mul(c, x))
    form = from_coefficients(ring, basis, coeffs)
    if form.is_zero():
        raise DegenerateDrawError("Random member of the linear system is zero")
    return form


def _plane_form(
    ring: RingSpec, degree: int, points: Sequence[SingularPoint], rng: random.Random
) -> GradedPolynomial:
    field = ring.field
    basis = graded_piece_basis(ring, degree)
    conditions = sum(pt.count * comb(pt.multiplicity + 1, 2) for pt in points)
    if len(basis) - conditions <= 0:
        raise EmptyLinearSystemError(
            f"Degree-{degree} forms have {len(basis)} coefficients against {conditions} conditions"
        )
    rows: list[list[FieldElement]] = []
    for pt in points:
        rows.extend(_vanishing_rows(basis, pt, field, pt.multiplicity - 1))
    return _random_member(ring, basis, _kernel(field, rows, len(basis)), rng)


def _surface_form(
    ring: RingSpec,
    q: GradedPolynomial,
    points: Sequence[SingularPoint],
    through: Sequence[tuple[int, ...]],
    rng: random.Random,
) -> GradedPolynomial:
    """A quintic F with F(P) = 0 and dF(P) = lambda_P dQ(P) at every node.

    The unknowns are the quintic coefficients followed by the lambda_P, which
    take pt.degree coordinates for an orbit.
    """
    field = ring.field
    p = field.p
    basis = graded_piece_basis(ring, SURFACE_CURVE_DEGREE)
    n = len(basis)
    extra = sum(pt.degree for pt in points)
    trivial = len(graded_piece_basis(ring, SURFACE_CURVE_DEGREE - 2))
    expected = n - trivial - 4 * sum(pt.count for pt in points) - len(through)
    if expected <= 0:
        raise EmptyLinearSystemError(f"Quintics on the surface have expected dimension {expected}")
    gradient = [partial_derivative(q, k) for k in range(4)]
    rows: list[list[FieldElement]] = []
    offset = n
    for pt in points:
        k = pt.degree
        gf = _galois(p, k)
        pad = [0] * extra
        vanishing = hasse_derivative_row_extension(basis, (0, 0, 0, 0), pt.coords, gf)
        rows.extend(r + pad for r in vanishing)
        for var in range(4):
            alpha = tuple(1 if i == var else 0 for i in range(4))
            derivative = hasse_derivative_row_extension(basis, alpha, pt.coords, gf)
            scale = gf.mul_matrix(evaluate_extension(gradient[var], pt.coords, gf))
            for j in range(k):
                row = derivative[j] + [0] * extra
                for l in range(k):
                    row[offset + l] = -scale[j][l] % p
                rows.append(row)
        offset += k
    zero = (0,) * ring.n_vars
    for point in through:
        rows.append(hasse_derivative_row(basis, zero, point, field) + [0] * extra)
    form = _random_member(ring, basis, _kernel(field, rows, n + extra), rng)
    multiples = [
        coefficient_vector(q * GradedPolynomial.monomial(ring, m), basis)
        for m in graded_piece_basis(ring, SURFACE_CURVE_DEGREE - 2)
    ]
    if not select_independent(field, multiples, [coefficient_vector(form, basis)]):
        raise DegenerateDrawError("The quintic is a multiple of the surface equation")
    return form


# Base point of the pencil of quadric sections


def _conic_exponents(ambient: Ambient) -> list[LocalExponent]:
    """Local monomials of quadric sections: bidegree (2,2) or the class 2H on the cone."""
    if ambient is Ambient.QUADRIC:
        return [(i, j) for i in range(3) for j in range(3)]
    return [(i, j) for i in range(3) for j in range(2 * (2 - i) + 1)]


def _conic_pencil(
    ambient: Ambient, nodes: Sequence[SingularPoint], field: FieldSpec
) -> tuple[list[LocalExponent], list[tuple[FieldElement, ...]]]:
    exponents = _conic_exponents(ambient)
    kernel = _kernel(field, _local_rows(ambient, exponents, nodes, field), len(exponents))
    if len(kernel) != 2:
        raise DegenerateDrawError(
            f"Quadric sections through the nodes form a {len(kernel)}-dimensional space, expected 2"
        )
    return exponents, kernel


def eighth_base_point(
    ambient: Ambient, nodes: Sequence[SingularPoint], field: FieldSpec
) -> tuple[int, ...]:
    """The remaining base point of the pencil of quadric sections through seven nodes.

    The two pencil generators are eliminated against the first local parameter;
    the resultant divided by the node factors must leave a linear polynomial.
    """
    if any(not pt.is_rational for pt in nodes):
        raise UnsupportedFieldError("The eighth base point needs rational nodes")
    p = field.p
    exponents, pencil = _conic_pencil(ambient, nodes, field)
    a, b = sympy.symbols("a b")
    exprs = [
        sum(
            (int(c) * a**i * b**j for (i, j), c in zip(exponents, vector, strict=True) if c),
            sympy.Integer(0),
        )
        for vector in pencil
    ]
    resultant = sympy.Poly(sympy.resultant(exprs[0], exprs[1], a), b, modulus=p)
    gf = _galois(p, 1)
    node_params = [_local_parameters(ambient, pt.coords) for pt in nodes]
    node_factor = sympy.Poly(1, b, modulus=p)
    for _, nb in node_params:
        node_factor = node_factor * sympy.Poly(b - nb[0], b, modulus=p)
    if resultant.is_zero:
        raise DegenerateDrawError("The pencil of quadric sections has a fixed component")
    quotient, remainder = resultant.div(node_factor)
    if not remainder.is_zero or quotient.degree() != 1:
        raise DegenerateDrawError("The eighth base point is not a single affine point")
    c1, c0 = (int(x) % p for x in quotient.all_coeffs())
    bq = -c0 * pow(c1, -1, p) % p
    g = sympy.gcd(
        sympy.Poly(exprs[0].subs(b, bq), a, modulus=p),
        sympy.Poly(exprs[1].subs(b, bq), a, modulus=p),
    )
    if g.degree() != 1:
        raise DegenerateDrawError("The eighth base point is not determined by the pencil")
    d1, d0 = (int(x) % p for x in g.all_coeffs())
    aq = -d0 * pow(d1, -1, p) % p
    if any((na[0], nb[0]) == (aq, bq) for na, nb in node_params):
        raise DegenerateDrawError("The eighth base point collides with a node")
    point = _surface_point(ambient, gf, (aq,), (bq,))
    return tuple(c[0] for c in point)


# Validation


def local_equation(model: CurveModel, point: tuple[int, ...]) -> GradedPolynomial:
    """The curve equation in affine coordinates (s, t) centred at a rational point."""
    field = model.ring.field
    local = RingSpec(field=field, var_names=("s", "t"))
    s = GradedPolynomial.variable(local, 0)
    t = GradedPolynomial.variable(local, 1)

    def const(c: FieldElement) -> GradedPolynomial:
        return GradedPolynomial.constant(local, c)

    if model.ambient is Ambient.PLANE:
        pivot = next(i for i, c in enumerate(point) if c % field.p)
        scale = field.inv(field.element(point[pivot]))
        shifts = iter((s, t))
        images = [
            (
                const(field.one)
                if i == pivot
                else const(field.mul(field.element(c), scale)) + next(shifts)
            )
            for i, c in enumerate(point)
        ]
    else:
        scale = field.inv(field.element(point[0]))
        coords = [field.mul(field.element(c), scale) for c in point]
        if model.ambient is Ambient.QUADRIC:
            u, v = const(coords[2]) + s, const(coords[1]) + t
            images = [const(field.one), v, u, u * v]
        else:
            w, tt = const(coords[3]) + s, const(coords[1]) + t
            images = [const(field.one), tt, tt * tt, w]
    return substitute(model.curve_form, images, local)


def tjurina_number(f: GradedPolynomial, multiplicity: int) -> int:
    """dim k[s,t] / ((f, f_s, f_t) + m^N) with N = 2 * multiplicity - 1."""
    field = f.ring.field
    top = 2 * multiplicity - 1
    basis = [(i, d - i) for d in range(top) for i in range(d, -1, -1)]
    index = {m: k for k, m in enumerate(basis)}
    rows: list[list[FieldElement]] = []
    for g in (f, partial_derivative(f, 0), partial_derivative(f, 1)):
        for mon in basis:
            row = [field.zero] * len(basis)
            for m, c in g.mul_term(mon, field.one):
                if sum(m) < top:
                    row[index[m]] = c
            rows.append(row)
    return len(basis) - rank(ExactMatrix.from_rows(field, rows))


def validate_singularities(model: CurveModel) -> None:
    """Check the Tjurina number of every rational singular point.

    Ordinary points of multiplicity m have (m - 1)^2. Skipped when the
    characteristic does not exceed the largest multiplicity.
    """
    field = model.ring.field
    top = max((pt.multiplicity for pt in model.singular_points), default=0)
    if field.p <= top:
        logger.debug("singularity_validation_skipped", field=str(field), multiplicity=top)
        return
    for pt in model.singular_points:
        if not pt.is_rational:
            continue
        tau = tjurina_number(local_equation(model, pt.rational_coords), pt.multiplicity)
        expected = (pt.multiplicity - 1) ** 2
        if tau != expected:
            raise DegenerateDrawError(
                f"{pt.kind} at {pt.rational_coords} has Tjurina number {tau}, expected {expected}"
            )


# Construction


def _draw_model(
    c: Construction,
    field: FieldSpec,
    rng: random.Random,
    *,
    points: Sequence[SingularPoint] | None,
    validate: bool,
    orbit_threshold: int,
) -> CurveModel:
    ring = ambient_ring(c.ambient, field)
    orbits = points is None and field.p < orbit_threshold
    if c.ambient is Ambient.PLANE:
        if points is None:
            pts = _draw_plane_points(c.roster, field, rng, orbits)
        else:
            pts = tuple(points)
        model = CurveModel(c.ambient, ring, (_plane_form(ring, c.degree, pts, rng),), pts)
    else:
        if orbits and c.through_base_point:
            raise UnsupportedFieldError(
                f"F_{field.p} is below the orbit threshold;"
                " the base-point condition needs rational nodes"
            )
        pts = tuple(points) if points is not None else _draw_surface_points(c, field, rng, orbits)
        q = surface_equation(c.ambient, ring)
        marked = (eighth_base_point(c.ambient, pts, field),) if c.through_base_point else ()
        form = _surface_form(ring, q, pts, marked, rng)
        model = CurveModel(c.ambient, ring, (q, form), pts, marked_points=marked)
    if validate:
        validate_singularities(model)
    return model


def _log_reseed(state: RetryCallState) -> None:
    if state.outcome is not None and state.outcome.failed:
        logger.warning(
            "degenerate_draw_reseeded",
            attempt=state.attempt_number,
            reason=str(state.outcome.exception()),
        )


def _with_reseeding(
    draw: Callable[[random.Random, int], T], seed: int, max_attempts: int, label: str
) -> T:
    """Run ``draw`` with per-attempt generators until it stops raising DegenerateDrawError."""
    try:
        for attempt in Retrying(
            stop=stop_after_attempt(max_attempts),
            retry=retry_if_exception_type(DegenerateDrawError),
            after=_log_reseed,
        ):
            with attempt:
                number = attempt.retry_state.attempt_number
                result = draw(random.Random(seed * _SEED_STRIDE + number), number)
    except RetryError as e:
        last = e.last_attempt.exception()
        raise ReseedError(
            f"{label}: all {max_attempts} draws were degenerate (last: {last})"
        ) from e
    return result


def impose_singularities(
    ambient: Ambient,
    degree: int,
    roster: Sequence[int],
    field: FieldSpec,
    seed: int = 0,
    *,
    points: Sequence[SingularPoint] | None = None,
    through_base_point: bool = False,
    on_twisted_cubic: bool = False,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
    validate: bool = True,
    orbit_threshold: int = DEFAULT_ORBIT_THRESHOLD,
) -> CurveModel:
    """A random curve of the given degree with ordinary singularities of the given multiplicities.

    With ``points`` the singular points are fixed and only the member of the
    linear system is drawn; otherwise points are drawn in general position.
    """
    _check_field(field)
    if ambient is not Ambient.PLANE:
        if degree != SURFACE_CURVE_DEGREE:
            raise ValueError("Surface models are cut by quintics")
        if any(m != 2 for m in roster):
            raise ValueError("Surface models carry nodes only")
    if points is not None:
        roster = tuple(pt.multiplicity for pt in points for _ in range(pt.count))
    construction = Construction(
        ambient, degree, tuple(roster), through_base_point, on_twisted_cubic
    )

    def draw(rng: random.Random, attempt: int) -> CurveModel:
        model = _draw_model(
            construction,
            field,
            rng,
            points=points,
            validate=validate,
            orbit_threshold=orbit_threshold,
        )
        return replace(model, seed=seed, attempt=attempt)

    return _with_reseeding(draw, seed, max_attempts, f"{ambient.value} degree {degree}")


def build_recipe(
    recipe: Recipe,
    field: FieldSpec,
    seed: int = 0,
    *,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
    validate: bool = True,
    orbit_threshold: int = DEFAULT_ORBIT_THRESHOLD,
) -> CurveModel:
    """A validated model of the recipe whose adjoint series has dimension 9."""
    return generate(
        recipe,
        field,
        seed,
        max_attempts=max_attempts,
        validate=validate,
        orbit_threshold=orbit_threshold,
        with_ideal=False,
    )[0]


def generate(
    recipe: Recipe,
    field: FieldSpec,
    seed: int = 0,
    *,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
    validate: bool = True,
    orbit_threshold: int = DEFAULT_ORBIT_THRESHOLD,
    with_ideal: bool = True,
) -> tuple[CurveModel, AdjointBasis, Ideal | None]:
    """Model, adjoint basis and (optionally) canonical ideal, reseeding the whole chain."""
    _check_field(field)
    construction = CONSTRUCTIONS[recipe]

    def draw(rng: random.Random, attempt: int) -> tuple[CurveModel, AdjointBasis, Ideal | None]:
        model = _draw_model(
            construction,
            field,
            rng,
            points=None,
            validate=validate,
            orbit_threshold=orbit_threshold,
        )
        model = replace(model, seed=seed, attempt=attempt, recipe=recipe)
        adjoints = adjoint_basis(model)
        ideal = canonical_ideal(model, adjoints) if with_ideal else None
        return model, adjoints, ideal

    model, adjoints, ideal = _with_reseeding(draw, seed, max_attempts, recipe.value)
    logger.info(
        "curve_model_built",
        recipe=recipe.value,
        ambient=model.ambient.value,
        field=str(field),
        seed=seed,
        attempt=model.attempt,
        orbits=model.uses_orbits,
    )
    return model, adjoints, ideal


# Adjoint series and canonical ideal


def adjoint_basis(model: CurveModel) -> AdjointBasis:
    """Forms cutting out the canonical series on the normalization.

    Plane models: degree d - 3 with multiplicity m - 1 at each singular point.
    Surface models: cubics through the nodes taken modulo Q times linear forms.
    """
    ring = model.ring
    field = ring.field
    if model.ambient is Ambient.PLANE:
        degree = model.degree - 3
        basis = graded_piece_basis(ring, degree)
        rows: list[list[FieldElement]] = []
        for pt in model.singular_points:
            rows.extend(_vanishing_rows(basis, pt, field, pt.multiplicity - 2))
        kernel = _kernel(field, rows, len(basis))
        forms = [from_coefficients(ring, basis, v) for v in kernel]
    else:
        degree = 3
        basis = graded_piece_basis(ring, degree)
        rows = []
        for pt in model.singular_points:
            rows.extend(_vanishing_rows(basis, pt, field, 0))
        kernel = _kernel(field, rows, len(basis))
        q = model.surface_form
        assert q is not None
        trivial = [
            coefficient_vector(q * GradedPolynomial.variable(ring, i), basis)
            for i in range(ring.n_vars)
        ]
        keep = select_independent(field, trivial, kernel)
        forms = [from_coefficients(ring, basis, kernel[i]) for i in keep]
    if len(forms) != GENUS:
        raise DegenerateDrawError(f"Adjoint series has dimension {len(forms)}, expected {GENUS}")
    return AdjointBasis(forms=tuple(forms), degree=degree)


def canonical_ideal(model: CurveModel, adjoints: AdjointBasis | None = None) -> Ideal:
    """Relations among the adjoint forms modulo the model's ideal, up to cubics."""
    adjoints = adjoints or adjoint_basis(model)
    ideal = ring_map_kernel(
        model.ideal(),
        adjoints.forms,
        canonical_ring(model.ring.field),
        method="linear",
        max_degree=3,
    )
    quadrics = sum(1 for d in ideal.degrees() if d == 2)
    if quadrics != CANONICAL_QUADRICS:
        raise DegenerateDrawError(
            f"Canonical ideal has {quadrics} quadrics, expected {CANONICAL_QUADRICS}"
        )
    return ideal


# Pencils


def default_pencil(model: CurveModel) -> PencilTag:
    return {
        Ambient.PLANE: PencilTag.LINES,
        Ambient.QUADRIC: PencilTag.RULING_A,
        Ambient.CONE: PencilTag.CONE_RULING,
    }[model.ambient]


_PENCIL_AMBIENT = {
    PencilTag.LINES: Ambient.PLANE,
    PencilTag.RULING_A: Ambient.QUADRIC,
    PencilTag.RULING_B: Ambient.QUADRIC,
    PencilTag.CONE_RULING: Ambient.CONE,
}


def _twisted_exponents(pencil: PencilTag, i: int, level: int) -> list[LocalExponent]:
    """Local monomials of K - iD on the surface before imposing the nodes.

    K is cut by forms of degree ``level = d - 2`` for a curve of degree d on
    the surface; on the cone w counts twice against the ruling parameter t.
    """
    n = level + 1
    if pencil is PencilTag.RULING_A:
        return [(a, b) for a in range(n - i) for b in range(n)]
    if pencil is PencilTag.RULING_B:
        return [(a, b) for a in range(n) for b in range(n - i)]
    return [(a, b) for a in range(n) for b in range(2 * (level - a) - i + 1)]


def _plane_twisted_count(model: CurveModel, i: int) -> int:
    ring = model.ring
    field = ring.field
    degree = model.degree - 3 - i
    if degree < 0:
        return 0
    centre, *others = model.singular_points
    if not centre.is_rational:
        raise RefusalError("Lines need a rational centre among the singular points")
    basis = graded_piece_basis(ring, degree)
    rows = _vanishing_rows(basis, centre, field, max(centre.multiplicity - 1 - i, 0) - 1)
    for pt in others:
        rows.extend(_vanishing_rows(basis, pt, field, pt.multiplicity - 2))
    if not rows:
        return len(basis)
    return len(basis) - rank(ExactMatrix.from_rows(field, rows))


def section_partition(model: CurveModel, pencil: PencilTag | None = None) -> SectionPartition:
    """h0(K - iD) for i = 0..4 from adjoint subsystems with the pencil split off."""
    pencil = pencil or default_pencil(model)
    if _PENCIL_AMBIENT[pencil] is not model.ambient:
        raise RefusalError(f"Pencil {pencil.value} does not exist on a {model.ambient.value} model")
    field = model.ring.field
    values: list[int] = []
    for i in range(5):
        if pencil is PencilTag.LINES:
            values.append(_plane_twisted_count(model, i))
            continue
        exponents = _twisted_exponents(pencil, i, model.degree - 2)
        if not exponents:
            values.append(0)
            continue
        rows = _local_rows(model.ambient, exponents, model.singular_points, field)
        matrix = ExactMatrix.from_rows(field, rows, cols=len(exponents))
        values.append(len(exponents) - rank(matrix))
    logger.debug("section_partition_computed", pencil=pencil.value, h0=values)
    try:
        return SectionPartition(h0=tuple(values))
    except ValueError as e:
        raise DegenerateDrawError(f"Section counts {values} are not a partition: {e}") from e


def third_g15_coincidence_test(model: CurveModel) -> CoincidenceReport:
    """Does the pencil of quadric sections through the nodes add a third g15?

    The (2,2) forms through seven general nodes span a vector space of
    dimension 9 - 7 = 2, a projective pencil. Counting the forms together
    with the equation of the quadric itself gives the 3-dimensional space of
    quadrics in P3 through the nodes; both describe the same pencil on the
    surface.

    A coincidence with a ruling shows up as the four products of the pencil
    generators with that ruling's linear forms spanning only three dimensions.
    """
    if model.ambient is not Ambient.QUADRIC:
        raise RefusalError("The coincidence test needs a model on the smooth quadric")
    if model.uses_orbits:
        raise UnsupportedFieldError("The coincidence test needs rational nodes")
    field = model.ring.field
    exponents, pencil = _conic_pencil(model.ambient, model.singular_points, field)
    generators = [
        {e: c for e, c in zip(exponents, vector, strict=True) if c} for vector in pencil
    ]
    for tag, shift in ((PencilTag.RULING_A, (1, 0)), (PencilTag.RULING_B, (0, 1))):
        products = [
            {(e[0] + s * shift[0], e[1] + s * shift[1]): c for e, c in g.items()}
            for g in generators
            for s in (0, 1)
        ]
        support = sorted({e for prod in products for e in prod})
        vectors = [[prod.get(e, field.zero) for e in support] for prod in products]
        if span_dimension(field, vectors) == 3:
            logger.info("g15_pencils_coincide", ruling=tag.value)
            return CoincidenceReport(
                has_third=True,
                coincides_with=tag.value,
                component=True,
                notes=(
                    "quadric sections through the nodes share a component",
                    f"the g15 of {tag.value} has multiplicity 2",
                ),
            )
    q = eighth_base_point(model.ambient, model.singular_points, field)
    has_third = evaluate(model.curve_form, q) == field.zero
    logger.info("third_g15_tested", base_point=q, has_third=has_third)
    return CoincidenceReport(has_third=has_third, base_point=q)
