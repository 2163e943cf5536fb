"""Catalog of genus-9 canonical Betti tables and matching against it."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum

import structlog

from syzygy.domain.entities.betti_table import BettiTable
from syzygy.domain.entities.reports import ClassificationReport, ConsistencyReport
from syzygy.domain.errors import MalformedTableError, UnclassifiedError, UnknownLabelError
from syzygy.domain.services.exterior import classify_rank
from syzygy.domain.services.scroll import type_from_partition
from syzygy.domain.valueobjects import ScrollType, SectionPartition

logger = structlog.get_logger(__name__)

GENUS = 9
UNRECOGNIZED = "unrecognized"
G15_LABELS = frozenset({"one_g15", "two_g15", "three_g15"})

# Scroll types swept by a g15 of multiplicity 1, 2 and 3.
G15_SCROLL_MULTIPLICITY: dict[ScrollType, int] = {
    ScrollType((2, 1, 1, 1)): 1,
    ScrollType((2, 2, 1, 0)): 2,
    ScrollType((3, 1, 1, 0)): 3,
}


class CharConstraint(str, Enum):
    ANY = "any"
    CHAR3 = "char3"
    NOT_CHAR3 = "not_char3"

    def admits(self, characteristic: int) -> bool:
        if self is CharConstraint.CHAR3:
            return characteristic == 3
        if self is CharConstraint.NOT_CHAR3:
            return characteristic != 3
        return True


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    table: BettiTable
    constraint: CharConstraint = CharConstraint.ANY
    description: str = ""


def _canonical(row1: tuple[int, ...], row2: tuple[int, ...]) -> BettiTable:
    """(1; row1 in columns 1..6; row2 in columns 1..6; 1) with blanks as zero."""
    rows: Mapping[int, Mapping[int, int]] = {
        0: {0: 1},
        1: {i: v for i, v in enumerate(row1, start=1)},
        2: {i: v for i, v in enumerate(row2, start=1)},
        3: {7: 1},
    }
    return BettiTable.from_rows(rows, num_vars=GENUS)


def _pentagonal(a: int) -> BettiTable:
    return _canonical((21, 64, 70, a), (0, 0, a, 70, 64, 21))


CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry("general", _pentagonal(0), CharConstraint.NOT_CHAR3, "Clifford index 4"),
    CatalogEntry("one_g15", _pentagonal(4), CharConstraint.NOT_CHAR3, "exactly one g15"),
    CatalogEntry("two_g15", _pentagonal(8), CharConstraint.NOT_CHAR3, "two g15"),
    CatalogEntry("three_g15", _pentagonal(12), CharConstraint.ANY, "three g15"),
    CatalogEntry("g72", _pentagonal(24), CharConstraint.ANY, "a plane model of degree 7"),
    CatalogEntry(
        "g14",
        _canonical((21, 64, 75, 24, 5), (0, 5, 24, 75, 64, 21)),
        CharConstraint.ANY,
        "tetragonal",
    ),
    CatalogEntry(
        "g14_x_g15",
        _canonical((21, 64, 75, 44, 5), (0, 5, 44, 75, 64, 21)),
        CharConstraint.ANY,
        "tetragonal with a g15 not composed with it",
    ),
    CatalogEntry(
        "g62",
        _canonical((21, 64, 90, 64, 20), (0, 20, 64, 90, 64, 21)),
        CharConstraint.ANY,
        "a plane sextic model",
    ),
    CatalogEntry(
        "g13",
        _canonical((21, 70, 105, 84, 35, 6), (6, 35, 84, 105, 70, 21)),
        CharConstraint.ANY,
        "trigonal",
    ),
    CatalogEntry(
        "general", _pentagonal(4), CharConstraint.CHAR3, "Clifford index 4 in characteristic 3"
    ),
    CatalogEntry("one_g15", _pentagonal(6), CharConstraint.CHAR3, "one g15 in characteristic 3"),
    CatalogEntry("two_g15", _pentagonal(10), CharConstraint.CHAR3, "two g15 in characteristic 3"),
)


def catalog(characteristic: int = 0) -> list[CatalogEntry]:
    """Entries valid in the given characteristic."""
    return [e for e in CATALOG if e.constraint.admits(characteristic)]


def labels() -> list[str]:
    return list(dict.fromkeys(e.label for e in CATALOG))


def expected_table(label: str, characteristic: int = 0) -> BettiTable:
    for entry in catalog(characteristic):
        if entry.label == label:
            return entry.table
    raise UnknownLabelError(f"No catalog table {label!r} in characteristic {characteristic}")


def _check_shape(t: BettiTable) -> None:
    if t.get(0, 0) != 1:
        raise MalformedTableError("A canonical curve table has beta_00 = 1")
    if t.min_row < 0 or t.max_row != 3:
        raise MalformedTableError(
            f"A genus-{GENUS} canonical table has regularity 3, got rows {t.min_row}..{t.max_row}"
        )


def clifford_from_betti(t: BettiTable) -> int:
    """min p with beta_{p,p+2} != 0, capped at 4."""
    for p in range(1, 4):
        if t.get(p, p + 2):
            return p
    return 4


def classify(t: BettiTable, characteristic: int = 0) -> ClassificationReport:
    _check_shape(t)
    clifford = clifford_from_betti(t)
    candidates = catalog(characteristic)
    for entry in candidates:
        if entry.table == t:
            k = t.get(4, 5) // 4 if entry.label in G15_LABELS and characteristic != 3 else None
            notes = [entry.description]
            if characteristic == 3:
                notes.append("characteristic-3 catalog")
            logger.info(
                "table_classified",
                label=entry.label,
                clifford=clifford,
                characteristic=characteristic,
            )
            return ClassificationReport(
                label=entry.label, clifford_index=clifford, k_g15=k, notes=tuple(notes)
            )
    nearest = min(candidates, key=lambda e: e.table.l1_distance(t))
    distance = nearest.table.l1_distance(t)
    logger.warning(
        "table_unrecognized",
        nearest=nearest.label,
        distance=distance,
        characteristic=characteristic,
    )
    return ClassificationReport(
        label=UNRECOGNIZED,
        clifford_index=clifford,
        notes=(f"beta_45 = {t.get(4, 5)}",),
        nearest=nearest.label,
        distance=distance,
    )


def consistency_report(
    t: BettiTable,
    *,
    rank_alpha: int | None = None,
    scroll_type: ScrollType | None = None,
    partition: SectionPartition | None = None,
    characteristic: int = 0,
) -> ConsistencyReport:
    """Cross-check beta_45 against the wedge-map rank and the g15 scroll type."""
    checks: list[str] = []
    contradictions: list[str] = []
    beta45 = t.get(4, 5)
    if rank_alpha is not None:
        try:
            predicted = classify_rank(rank_alpha, characteristic)
        except UnclassifiedError as e:
            contradictions.append(str(e))
        else:
            line = f"rank {rank_alpha} predicts beta_45 = {predicted}, table has {beta45}"
            (checks if predicted == beta45 else contradictions).append(line)
    if partition is not None:
        derived = type_from_partition(partition)
        if scroll_type is not None and derived != scroll_type:
            contradictions.append(f"partition {partition} gives {derived}, not {scroll_type}")
        else:
            checks.append(f"partition {partition} gives {derived}")
        scroll_type = scroll_type or derived
    if scroll_type is not None:
        multiplicity = G15_SCROLL_MULTIPLICITY.get(scroll_type)
        if multiplicity is None:
            checks.append(f"{scroll_type} is not swept by a g15")
        elif characteristic == 3:
            checks.append(
                f"{scroll_type} has g15 multiplicity {multiplicity};"
                " count not checked in characteristic 3"
            )
        else:
            k = beta45 // 4
            line = f"{scroll_type} has g15 multiplicity {multiplicity}; table counts {k} g15"
            consistent = 1 <= multiplicity <= k and beta45 % 4 == 0 and beta45 < 24
            (checks if consistent else contradictions).append(line)
    return ConsistencyReport(checks=tuple(checks), contradictions=tuple(contradictions))
