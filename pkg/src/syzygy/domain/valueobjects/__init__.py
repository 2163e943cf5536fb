"""Value objects - Immutable domain primitives."""

from syzygy.domain.valueobjects.curve import Ambient, PencilTag, Recipe, SingularPoint
from syzygy.domain.valueobjects.field import FieldElement, FieldKind, FieldSpec
from syzygy.domain.valueobjects.polynomial import GradedPolynomial
from syzygy.domain.valueobjects.ring import Monomial, MonomialOrder, OrderKind, RingSpec
from syzygy.domain.valueobjects.scroll import ScrollType, SectionPartition
from syzygy.domain.valueobjects.skew import PsiTag, PsiType, SkewBasis
from syzygy.domain.valueobjects.surface import DivisorClass, SurfaceBase, SurfaceLattice

__all__ = [
    "FieldElement",
    "FieldKind",
    "FieldSpec",
    "Monomial",
    "MonomialOrder",
    "OrderKind",
    "RingSpec",
    "GradedPolynomial",
    "ScrollType",
    "SectionPartition",
    "PsiTag",
    "PsiType",
    "SkewBasis",
    "SurfaceBase",
    "SurfaceLattice",
    "DivisorClass",
    "Ambient",
    "PencilTag",
    "Recipe",
    "SingularPoint",
]
