"""Unit tests for value objects."""

import random
from fractions import Fraction

import pytest

from syzygy.domain.valueobjects import (
    Ambient,
    DivisorClass,
    FieldSpec,
    MonomialOrder,
    PencilTag,
    PsiTag,
    PsiType,
    Recipe,
    RingSpec,
    ScrollType,
    SectionPartition,
    SingularPoint,
    SkewBasis,
    SurfaceBase,
    SurfaceLattice,
)


class TestFieldSpec:
    """Test FieldSpec value object."""

    def test_prime(self):
        """Test creating a prime field."""
        f = FieldSpec.prime(10007)
        assert f.is_prime
        assert f.characteristic == 10007
        assert str(f) == "F_10007"

    def test_rational(self):
        """Test the rationals have characteristic 0."""
        q = FieldSpec.rational()
        assert not q.is_prime
        assert q.characteristic == 0
        assert str(q) == "QQ"

    @pytest.mark.parametrize("bad", [1, 4, 10005, 2**31 + 11])
    def test_invalid_prime(self, bad):
        """Test composite or out-of-range characteristics are rejected."""
        with pytest.raises(ValueError):
            FieldSpec.prime(bad)

    @pytest.mark.parametrize(
        ("text", "expected"), [("0", 0), ("QQ", 0), ("rational", 0), ("32003", 32003)]
    )
    def test_from_string(self, text, expected):
        """Test parsing field names."""
        assert FieldSpec.from_string(text).characteristic == expected

    def test_from_string_invalid(self):
        """Test garbage raises."""
        with pytest.raises(ValueError):
            FieldSpec.from_string("GF(9)")

    def test_from_characteristic(self):
        """Test 0 maps to the rationals."""
        assert FieldSpec.from_characteristic(0) == FieldSpec.rational()
        assert FieldSpec.from_characteristic(3) == FieldSpec.prime(3)

    def test_element_coercion(self):
        """Test integers and fractions become canonical elements."""
        f = FieldSpec.prime(7)
        assert f.element(-1) == 6
        assert f.element(Fraction(1, 3)) == 5
        assert f.element("2/3") == 3
        with pytest.raises(ZeroDivisionError):
            f.element(Fraction(1, 7))

    def test_arithmetic(self):
        """Test field operations modulo p."""
        f = FieldSpec.prime(7)
        assert f.add(5, 4) == 2
        assert f.mul(3, 5) == 1
        assert f.inv(3) == 5
        assert f.div(1, 3) == 5
        assert f.power(3, 6) == 1
        with pytest.raises(ZeroDivisionError):
            f.inv(0)

    def test_signed(self):
        """Test balanced representatives."""
        f = FieldSpec.prime(7)
        assert f.signed(6) == -1
        assert f.signed(3) == 3

    def test_random_nonzero(self):
        """Test nonzero draws."""
        f = FieldSpec.prime(3)
        rng = random.Random(0)
        assert all(f.random_element(rng, nonzero=True) for _ in range(50))


class TestRingSpec:
    """Test RingSpec value object."""

    def test_standard(self):
        """Test the standard graded ring."""
        ring = RingSpec.standard(FieldSpec.prime(7), 3)
        assert ring.var_names == ("x0", "x1", "x2")
        assert ring.is_standard_graded
        assert str(ring) == "F_7[x0,x1,x2]"

    def test_weights(self):
        """Test weighted degrees."""
        ring = RingSpec(FieldSpec.prime(7), ("a", "y"), (1, 4))
        assert not ring.is_standard_graded
        assert ring.degree((1, 2)) == 9

    @pytest.mark.parametrize(
        ("names", "weights"),
        [((), ()), (("a", "a"), ()), (("a", "1b"), ()), (("a", "b"), (1,)), (("a",), (0,))],
    )
    def test_invalid(self, names, weights):
        """Test malformed rings are rejected."""
        with pytest.raises(ValueError):
            RingSpec(FieldSpec.prime(7), names, weights)

    def test_index(self):
        """Test variable lookup."""
        ring = RingSpec.standard(FieldSpec.prime(7), 3, "u")
        assert ring.index("u2") == 2
        with pytest.raises(ValueError):
            ring.index("x0")


class TestMonomialOrder:
    """Test MonomialOrder value object."""

    def test_from_string(self):
        """Test order names round trip through str."""
        for text in ("grevlex", "elim:3"):
            assert str(MonomialOrder.from_string(text)) == text

    @pytest.mark.parametrize("text", ["lex", "elim:0", "elim:x"])
    def test_invalid(self, text):
        """Test unknown orders raise."""
        with pytest.raises(ValueError):
            MonomialOrder.from_string(text)

    def test_elimination_prefers_first_block(self):
        """Test any monomial in the eliminated block beats the rest."""
        key = MonomialOrder.block_elim(1).sort_key((1, 1, 1))
        assert key((1, 0, 0)) > key((0, 3, 3))


class TestScrollType:
    """Test ScrollType value object."""

    def test_from_string(self):
        """Test both accepted spellings."""
        assert ScrollType.from_string("2,1,1,1") == ScrollType.from_string("S(2,1,1,1)")

    def test_invariants(self):
        """Test degree, dimension and ambient space."""
        t = ScrollType((2, 1, 1, 1))
        assert (t.f, t.dim, t.ambient) == (5, 4, 8)
        assert not t.is_cone
        assert ScrollType((2, 2, 1, 0)).is_cone
        assert str(t) == "S(2,1,1,1)"

    @pytest.mark.parametrize("e", [(), (1, 2), (1,), (-1, 3)])
    def test_invalid(self, e):
        """Test increasing, negative or too small types are rejected."""
        with pytest.raises(ValueError):
            ScrollType(e)


class TestSectionPartition:
    """Test SectionPartition value object."""

    def test_differences(self):
        """Test the positive parts of the difference sequence."""
        assert SectionPartition((9, 5, 1, 0)).differences == (4, 4, 1)
        assert SectionPartition((9, 5, 2, 1)).differences == (4, 3, 1, 1)

    def test_string_round_trip(self):
        """Test comma-separated parsing."""
        p = SectionPartition.from_string("9,5,2,0")
        assert str(p) == "9,5,2,0"

    @pytest.mark.parametrize("h0", [(), (0, 0), (5, 5), (5, 0, 1), (3, -1)])
    def test_invalid(self, h0):
        """Test non-decreasing or non-terminating sequences are rejected."""
        with pytest.raises(ValueError):
            SectionPartition(h0)


class TestSurface:
    """Test surface bases, lattices and divisor classes."""

    def test_base_aliases(self):
        """Test accepted spellings of the base surfaces."""
        assert SurfaceBase.from_string("P1xP1") is SurfaceBase.P1XP1
        assert SurfaceBase.from_string("p1×p1") is SurfaceBase.P1XP1
        assert SurfaceBase.F2.base_names == ("H", "R")
        with pytest.raises(ValueError):
            SurfaceBase.from_string("p3")

    def test_lattice_rank(self):
        """Test the Picard rank of a blow-up."""
        assert SurfaceLattice(SurfaceBase.P2, 6).rank == 7
        assert SurfaceLattice(SurfaceBase.P1XP1, 7).rank == 9

    def test_near_pairs(self):
        """Test infinitely near pairs are validated."""
        lattice = SurfaceLattice(SurfaceBase.P2, 6).with_near_pair(1)
        assert (1, 2) in lattice.infinitely_near
        with pytest.raises(ValueError):
            SurfaceLattice(SurfaceBase.P2, 6).with_near_pair(6)
        with pytest.raises(ValueError):
            SurfaceLattice(SurfaceBase.P2, 6, frozenset({(1, 3)}))

    def test_divisor_parsing(self):
        """Test the compact class notation."""
        d = DivisorClass.from_string("8:4,2^6")
        assert d.base_coords == (8,)
        assert d.exc_coords == (-4,) + (-2,) * 6
        assert DivisorClass.from_string("5,5:2^7").base_coords == (5, 5)
        assert DivisorClass.from_string("3").exc_coords == ()

    @pytest.mark.parametrize("text", ["", "a:2", "1,2,3", "7:2^x"])
    def test_divisor_parsing_errors(self, text):
        """Test malformed classes raise."""
        with pytest.raises(ValueError):
            DivisorClass.from_string(text)

    def test_divisor_format(self):
        """Test rendering on each base."""
        assert DivisorClass.from_string("7:2^2").format(SurfaceBase.P2) == "7H-2E1-2E2"
        assert DivisorClass.from_string("5,5:1").format(SurfaceBase.P1XP1) == "(5,5)-E1"
        assert DivisorClass((1, -2)).format(SurfaceBase.F2) == "H-2R"
        assert DivisorClass((0,), (0, 0)).format(SurfaceBase.P2) == "0"

    def test_divisor_arithmetic(self):
        """Test sums, differences and padding."""
        c = DivisorClass.from_string("4:1^2")
        assert (c + c).exc_coords == (-2, -2)
        assert (2 * c) == c + c
        assert (c - c).coords == (0, 0, 0)
        assert c.padded(4).exc_coords == (-1, -1, 0, 0)
        with pytest.raises(ValueError):
            c.padded(1)


class TestCurveValueObjects:
    """Test recipes, pencils and singular points."""

    def test_recipe_ambient(self):
        """Test each recipe's carrying surface."""
        assert Recipe.G72.ambient is Ambient.PLANE
        assert Recipe.TWO_G15.ambient is Ambient.QUADRIC
        assert Recipe.MULT3_G15.ambient is Ambient.CONE
        assert Ambient.CONE.n_vars == 4

    def test_expected_labels(self):
        """Test recipes whose catalog label differs from their tag."""
        assert Recipe.MULT2_G15.expected_label == "two_g15"
        assert Recipe.MULT3_G15.expected_label == "three_g15"
        assert Recipe.MULT2_PLUS_ORDINARY.expected_label == "three_g15"
        assert Recipe.G13.expected_label == "g13"

    def test_from_string(self):
        """Test case-insensitive lookup."""
        assert Recipe.from_string(" G72 ") is Recipe.G72
        assert PencilTag.from_string("RULING_B") is PencilTag.RULING_B
        with pytest.raises(ValueError):
            Recipe.from_string("g52")

    def test_rational_point(self):
        """Test a rational node."""
        pt = SingularPoint.rational([1, 2, 3], 2)
        assert pt.is_rational
        assert pt.rational_coords == (1, 2, 3)
        assert pt.kind == "node"
        assert SingularPoint.from_dict(pt.to_dict()) == pt

    def test_orbit(self):
        """Test a Galois orbit of triple points."""
        pt = SingularPoint(coords=((1, 0), (0, 1), (3, 4)), multiplicity=3, degree=2)
        assert pt.count == 2
        assert pt.kind == "triple"
        assert SingularPoint.from_dict(pt.to_dict()) == pt
        with pytest.raises(ValueError):
            _ = pt.rational_coords

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"coords": ((1,),), "multiplicity": 1},
            {"coords": ((1,),), "multiplicity": 2, "degree": 0},
            {"coords": ((1, 2),), "multiplicity": 2, "degree": 1},
        ],
    )
    def test_invalid_point(self, kwargs):
        """Test malformed singular points are rejected."""
        with pytest.raises(ValueError):
            SingularPoint(**kwargs)


class TestSkew:
    """Test exterior algebra bases and skew block shapes."""

    def test_monomial_counts(self):
        """Test Lambda^2 and Lambda^3 of five generators have dimension 10."""
        basis = SkewBasis(FieldSpec.prime(7))
        assert len(basis.monomials(2)) == len(basis.monomials(3)) == 10
        assert basis.generators[0] == "f1"

    def test_wedge_is_anticommutative(self):
        """Test f_i ^ f_j = -f_j ^ f_i for all pairs."""
        basis = SkewBasis(FieldSpec.prime(7))
        for i in range(5):
            for j in range(5):
                s1, m1 = basis.wedge((i,), (j,))
                s2, m2 = basis.wedge((j,), (i,))
                if i == j:
                    assert s1 == s2 == 0
                else:
                    assert m1 == m2
                    assert s1 == -s2

    def test_wedge_sign(self):
        """Test (f1 ^ f3) ^ f2 = -f1 ^ f2 ^ f3."""
        basis = SkewBasis(FieldSpec.prime(7))
        assert basis.wedge((0, 2), (1,)) == (-1, (0, 1, 2))

    def test_psi_catalog_is_skew(self):
        """Test catalog blocks are skew-symmetric with zero diagonal."""
        for tag in PsiTag:
            t = PsiType.catalog(tag)
            for r in range(4):
                assert not any(t.entry(r, r))
                for c in range(4):
                    assert t.entry(r, c) == tuple(-x for x in t.entry(c, r))

    def test_psi_tag_parsing(self):
        """Test lower-case tags are accepted."""
        assert PsiTag.from_string("c") is PsiTag.C
        with pytest.raises(ValueError):
            PsiTag.from_string("E")
        assert str(PsiType.from_indices((1, 2, 3, 4, 5, 0))) == "custom"
