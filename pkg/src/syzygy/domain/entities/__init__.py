"""Domain entities."""

from syzygy.domain.entities.betti_table import BettiTable
from syzygy.domain.entities.curve_model import AdjointBasis, CurveModel
from syzygy.domain.entities.ideal import GroebnerBasis, Ideal
from syzygy.domain.entities.reports import (
    AmplenessVerdict,
    BettiInvariants,
    ClassificationReport,
    CoincidenceReport,
    ConsistencyReport,
    CriticalDivisor,
    GammaKernelReport,
    PsiRankReport,
    ReproduceRow,
    StrandRecord,
    VerdictKind,
)
from syzygy.domain.entities.resolution import FreeComplex

__all__ = [
    "Ideal",
    "GroebnerBasis",
    "BettiTable",
    "FreeComplex",
    "CurveModel",
    "AdjointBasis",
    "StrandRecord",
    "BettiInvariants",
    "PsiRankReport",
    "GammaKernelReport",
    "CriticalDivisor",
    "VerdictKind",
    "AmplenessVerdict",
    "ClassificationReport",
    "ConsistencyReport",
    "CoincidenceReport",
    "ReproduceRow",
]
