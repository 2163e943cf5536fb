"""Pytest configuration and shared fixtures."""

from __future__ import annotations

from pathlib import Path

import pytest

from syzygy.domain.entities import BettiTable, Ideal
from syzygy.domain.services.scroll import scroll_ideal
from syzygy.domain.valueobjects import FieldSpec, RingSpec, ScrollType
from syzygy.infrastructure.config import BettiConfig, Config, CurveGenConfig
from syzygy.infrastructure.persistence import ArtifactRepository, format_ideal

from tests.factories import ideal_of

# =============================================================================
# Configuration Fixtures
# =============================================================================


@pytest.fixture
def config() -> Config:
    """Create a test configuration."""
    return Config()


@pytest.fixture
def fast_config() -> Config:
    """Configuration without Tjurina validation and with a small reseed budget."""
    return Config(
        betti=BettiConfig(max_row=4, linear_sections=2),
        curvegen=CurveGenConfig(seed=1, max_attempts=20, validate_singularities=False),
    )


# =============================================================================
# Field and Ring Fixtures
# =============================================================================


@pytest.fixture
def f10007() -> FieldSpec:
    """The default working prime field."""
    return FieldSpec.prime(10007)


@pytest.fixture
def qq() -> FieldSpec:
    """The rationals."""
    return FieldSpec.rational()


@pytest.fixture
def p3_ring(f10007: FieldSpec) -> RingSpec:
    """k[x0, x1, x2, x3] over F_10007."""
    return RingSpec.standard(f10007, 4)


# =============================================================================
# Ideal Fixtures
# =============================================================================


@pytest.fixture
def two_quadrics(p3_ring: RingSpec) -> Ideal:
    """A complete intersection of two quadrics in P^3."""
    return ideal_of(p3_ring, "x0^2 + 3*x1*x2 - x3^2", "x1^2 - 2*x0*x3 + 5*x2^2")


@pytest.fixture
def twisted_cubic(p3_ring: RingSpec) -> Ideal:
    """The 2x2 minors of [[x0, x1, x2], [x1, x2, x3]]."""
    return scroll_ideal(ScrollType((3,)), p3_ring)


@pytest.fixture
def scroll_2111(f10007: FieldSpec) -> Ideal:
    """Ten quadrics cutting out the scroll S(2,1,1,1) in P^8."""
    return scroll_ideal(ScrollType((2, 1, 1, 1)), RingSpec.standard(f10007, 9))


# =============================================================================
# Table Fixtures
# =============================================================================


@pytest.fixture
def ci_table() -> BettiTable:
    """Betti table of two quadrics in P^3."""
    return BettiTable(entries={(0, 0): 1, (1, 2): 2, (2, 4): 1}, num_vars=4)


# =============================================================================
# File Fixtures
# =============================================================================


@pytest.fixture
def repository() -> ArtifactRepository:
    """Artifact repository writing into pytest's tmp_path."""
    return ArtifactRepository()


@pytest.fixture
def ci_file(tmp_path: Path, two_quadrics: Ideal) -> Path:
    """The two-quadric complete intersection written as an ideal file."""
    path = tmp_path / "ci.ideal"
    path.write_text(format_ideal(two_quadrics, comment="two quadrics"), encoding="utf-8")
    return path


@pytest.fixture
def cubic_file(tmp_path: Path, twisted_cubic: Ideal) -> Path:
    """The twisted cubic written as an ideal file."""
    path = tmp_path / "cubic.ideal"
    path.write_text(format_ideal(twisted_cubic), encoding="utf-8")
    return path
