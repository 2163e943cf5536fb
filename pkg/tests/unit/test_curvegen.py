"""Unit tests for singular curve models."""

import random

import pytest

from syzygy.domain.entities import CurveModel
from syzygy.domain.errors import (
    DegenerateDrawError,
    EmptyLinearSystemError,
    RefusalError,
    ReseedError,
    UnsupportedFieldError,
)
from syzygy.domain.services.curvegen import (
    CONSTRUCTIONS,
    _with_reseeding,
    adjoint_basis,
    ambient_ring,
    default_pencil,
    generate,
    impose_singularities,
    local_equation,
    rational_curve_points,
    section_partition,
    surface_equation,
    third_g15_coincidence_test,
    tjurina_number,
    validate_singularities,
)
from syzygy.domain.services.polyring import evaluate, parse_polynomial
from syzygy.domain.services.scroll import type_from_partition
from syzygy.domain.valueobjects import (
    Ambient,
    FieldSpec,
    PencilTag,
    Recipe,
    RingSpec,
    ScrollType,
    SingularPoint,
)

F10007 = FieldSpec.prime(10007)


def plane_model(text, points, field=F10007):
    """A plane model with a hand-written form."""
    ring = ambient_ring(Ambient.PLANE, field)
    return CurveModel(Ambient.PLANE, ring, (parse_polynomial(text, ring),), tuple(points))


NODE = SingularPoint.rational((0, 0, 1), 2)


def surface_model(ambient, curve_text, field=F10007):
    """A smooth model cut on the quadric or the cone by a hand-written form."""
    ring = ambient_ring(ambient, field)
    forms = (surface_equation(ambient, ring), parse_polynomial(curve_text, ring))
    return CurveModel(ambient, ring, forms, ())


class TestConstructions:
    """Test the recipe table."""

    @pytest.mark.parametrize("recipe", list(Recipe))
    def test_genus_nine(self, recipe):
        """Test every construction has geometric genus nine."""
        c = CONSTRUCTIONS[recipe]
        if c.ambient is Ambient.PLANE:
            p_a = (c.degree - 1) * (c.degree - 2) // 2
        else:
            p_a = 16
        delta = sum(m * (m - 1) // 2 for m in c.roster)
        assert p_a - delta == 9

    @pytest.mark.parametrize("recipe", list(Recipe))
    def test_ambient_matches_recipe(self, recipe):
        """Test the construction lives on the recipe's surface."""
        assert CONSTRUCTIONS[recipe].ambient is recipe.ambient

    def test_surface_equations(self):
        """Test the quadric and cone equations."""
        ring = ambient_ring(Ambient.QUADRIC, F10007)
        assert surface_equation(Ambient.QUADRIC, ring) == parse_polynomial("y0*y3 - y1*y2", ring)
        assert surface_equation(Ambient.CONE, ring) == parse_polynomial("y1^2 - y0*y2", ring)
        with pytest.raises(ValueError):
            surface_equation(Ambient.PLANE, ring)


class TestFieldChecks:
    """Test unsupported fields are refused."""

    def test_rationals(self):
        """Test QQ is refused."""
        with pytest.raises(UnsupportedFieldError):
            generate(Recipe.G62, FieldSpec.rational())

    def test_characteristic_two(self):
        """Test F_2 is refused."""
        with pytest.raises(UnsupportedFieldError):
            impose_singularities(Ambient.PLANE, 6, (2,), FieldSpec.prime(2))

    def test_base_point_needs_rational_nodes(self):
        """Test small fields cannot host the base-point condition."""
        with pytest.raises(UnsupportedFieldError):
            generate(Recipe.THREE_G15, FieldSpec.prime(101), max_attempts=3)


class TestTjurina:
    """Test Tjurina numbers of local equations."""

    @pytest.fixture
    def local(self):
        """The affine ring k[s, t]."""
        return RingSpec(F10007, ("s", "t"))

    @pytest.mark.parametrize(
        ("text", "m", "expected"),
        [("s*t", 2, 1), ("s*t + s^5", 2, 1), ("s^2 - t^3", 2, 2), ("s^3 + t^3", 3, 4)],
    )
    def test_values(self, local, text, m, expected):
        """Test ordinary points have (m - 1)^2 and the cusp has 2."""
        assert tjurina_number(parse_polynomial(text, local), m) == expected

    def test_local_equation(self):
        """Test the curve is moved so the node sits at the origin."""
        model = plane_model("u0*u1*u2^4 + u0^6 + u1^6", [NODE])
        local = local_equation(model, (0, 0, 1))
        assert local == parse_polynomial("s*t + s^6 + t^6", local.ring)


class TestValidateSingularities:
    """Test validation of imposed singular points."""

    def test_node_passes(self):
        """Test an ordinary node validates."""
        validate_singularities(plane_model("u0*u1*u2^4 + u0^6 + u1^6", [NODE]))

    def test_cusp_rejected(self):
        """Test a cusp where a node was asked for is degenerate."""
        model = plane_model("u0^2*u2^4 + u1^3*u2^3 + u0^6 + u1^6", [NODE])
        with pytest.raises(DegenerateDrawError, match="Tjurina number 2"):
            validate_singularities(model)

    def test_skipped_in_small_characteristic(self):
        """Test the check is skipped when p does not exceed the multiplicity."""
        model = plane_model("u0^2*u2^4 + u1^3*u2^3 + u0^6 + u1^6", [NODE], FieldSpec.prime(2))
        validate_singularities(model)


class TestImposeSingularities:
    """Test drawing singular plane curves."""

    def test_sextic_with_a_node(self):
        """Test a nodal sextic and its adjoint cubics."""
        model = impose_singularities(Ambient.PLANE, 6, (2,), F10007, seed=3)
        assert model.genus == 9
        assert model.seed == 3
        assert model.attempt >= 1
        adjoints = adjoint_basis(model)
        assert adjoints.degree == 3
        assert adjoints.dimension == 9

    def test_deterministic(self):
        """Test the same seed gives the same model."""
        a = impose_singularities(Ambient.PLANE, 6, (2,), F10007, seed=8)
        b = impose_singularities(Ambient.PLANE, 6, (2,), F10007, seed=8)
        assert a == b

    def test_fixed_points(self):
        """Test given points are kept."""
        model = impose_singularities(Ambient.PLANE, 6, (), F10007, points=[NODE])
        assert model.singular_points == (NODE,)

    def test_empty_linear_system(self):
        """Test seven nodes on a quartic are refused."""
        with pytest.raises(EmptyLinearSystemError):
            impose_singularities(Ambient.PLANE, 4, (2,) * 7, F10007)

    def test_surface_degree(self):
        """Test surface models are cut by quintics."""
        with pytest.raises(ValueError):
            impose_singularities(Ambient.QUADRIC, 4, (2,) * 7, F10007)
        with pytest.raises(ValueError):
            impose_singularities(Ambient.QUADRIC, 5, (3,), F10007)


class TestReseeding:
    """Test retries of degenerate draws."""

    def test_retries_until_success(self):
        """Test the draw is retried with a fresh generator."""
        seen = []

        def draw(rng, attempt):
            seen.append((attempt, rng.random()))
            if attempt < 3:
                raise DegenerateDrawError("try again")
            return attempt

        assert _with_reseeding(draw, 5, 10, "test") == 3
        assert [a for a, _ in seen] == [1, 2, 3]
        assert len({x for _, x in seen}) == 3

    def test_gives_up(self):
        """Test ReseedError after the attempt budget."""

        def draw(rng, attempt):
            raise DegenerateDrawError("always")

        with pytest.raises(ReseedError, match="all 4 draws"):
            _with_reseeding(draw, 0, 4, "test")

    def test_refusals_not_retried(self):
        """Test other errors propagate at once."""
        calls = []

        def draw(rng, attempt):
            calls.append(attempt)
            raise EmptyLinearSystemError("no curves")

        with pytest.raises(EmptyLinearSystemError):
            _with_reseeding(draw, 0, 4, "test")
        assert calls == [1]


class TestPencils:
    """Test pencils and section partitions."""

    def test_default_pencil(self):
        """Test plane models use lines through the first point."""
        assert default_pencil(plane_model("u0*u1*u2^4 + u0^6 + u1^6", [NODE])) is PencilTag.LINES

    def test_lines_through_a_node(self):
        """Test h0(K - iD) for lines through the node of a sextic."""
        model = impose_singularities(Ambient.PLANE, 6, (2,), F10007, seed=2)
        assert section_partition(model).h0 == (9, 6, 3, 1, 0)

    def test_wrong_pencil(self):
        """Test a ruling does not exist on a plane model."""
        model = plane_model("u0*u1*u2^4 + u0^6 + u1^6", [NODE])
        with pytest.raises(RefusalError):
            section_partition(model, PencilTag.RULING_A)

    def test_coincidence_needs_quadric(self):
        """Test the coincidence test refuses plane models."""
        with pytest.raises(RefusalError):
            third_g15_coincidence_test(plane_model("u0*u1*u2^4 + u0^6 + u1^6", [NODE]))


class TestGenusFourPencils:
    """Test the two scrolls swept by the g13 of a genus-4 curve."""

    CUBIC = "y0^3 + y1^3 + y2^3 + y3^3"

    def test_smooth_quadric(self):
        """Test a (3,3) curve on the smooth quadric sweeps out S(1,1)."""
        model = surface_model(Ambient.QUADRIC, self.CUBIC)
        assert model.genus == 4
        for pencil in (PencilTag.RULING_A, PencilTag.RULING_B):
            partition = section_partition(model, pencil)
            assert partition.h0 == (4, 2, 0, 0, 0)
            assert type_from_partition(partition) == ScrollType((1, 1))

    def test_quadric_cone(self):
        """Test a cubic section of the cone has 2D = K and sweeps out S(2,0)."""
        model = surface_model(Ambient.CONE, self.CUBIC)
        assert model.genus == 4
        partition = section_partition(model)
        assert partition.h0 == (4, 2, 1, 0, 0)
        assert type_from_partition(partition) == ScrollType((2, 0))


class TestRationalCurvePoints:
    """Test nodes along a (1, 2) curve."""

    def test_points_on_quadric(self):
        """Test the points lie on the quadric and are distinct."""
        ring = ambient_ring(Ambient.QUADRIC, F10007)
        q = surface_equation(Ambient.QUADRIC, ring)
        points = rational_curve_points(F10007, random.Random(4))
        assert len(points) == 7
        assert len({p.rational_coords for p in points}) == 7
        assert all(evaluate(q, p.rational_coords) == 0 for p in points)
