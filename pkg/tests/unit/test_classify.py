"""Unit tests for the genus-9 table catalog."""

import pytest

from syzygy.domain.entities import BettiTable
from syzygy.domain.errors import MalformedTableError, UnknownLabelError
from syzygy.domain.services.betti import hilbert_values, invariants
from syzygy.domain.services.classify import (
    UNRECOGNIZED,
    catalog,
    classify,
    clifford_from_betti,
    consistency_report,
    expected_table,
    labels,
)
from syzygy.domain.valueobjects import ScrollType, SectionPartition

from tests.factories import canonical_table, pentagonal_table


class TestCatalog:
    """Test catalog contents."""

    def test_labels(self):
        """Test every label appears once, in catalog order."""
        assert labels() == [
            "general",
            "one_g15",
            "two_g15",
            "three_g15",
            "g72",
            "g14",
            "g14_x_g15",
            "g62",
            "g13",
        ]

    @pytest.mark.parametrize("characteristic", [0, 3, 10007])
    def test_one_table_per_label(self, characteristic):
        """Test each characteristic sees exactly one table per label."""
        entries = catalog(characteristic)
        assert sorted(e.label for e in entries) == sorted(labels())

    @pytest.mark.parametrize("characteristic", [0, 3])
    def test_tables_are_canonical(self, characteristic):
        """Test every catalog table is symmetric with the canonical Hilbert function."""
        for entry in catalog(characteristic):
            inv = invariants(entry.table)
            assert inv.is_gorenstein_symmetric, entry.label
            assert inv.regularity == 3
            assert entry.table.get(1, 2) == 21
            assert hilbert_values(entry.table, range(1, 5)) == [9, 24, 40, 56], entry.label

    def test_expected_table(self):
        """Test catalog lookups by label."""
        assert expected_table("g13") == canonical_table(
            (21, 70, 105, 84, 35, 6), (6, 35, 84, 105, 70, 21)
        )
        assert expected_table("one_g15") == pentagonal_table(4)
        assert expected_table("one_g15", 3) == pentagonal_table(6)

    def test_unknown_label(self):
        """Test an unknown label raises."""
        with pytest.raises(UnknownLabelError):
            expected_table("g25")


class TestCliffordIndex:
    """Test the Clifford index read off a table."""

    @pytest.mark.parametrize(
        ("label", "expected"),
        [
            ("general", 4),
            ("one_g15", 3),
            ("g72", 3),
            ("g62", 2),
            ("g14", 2),
            ("g14_x_g15", 2),
            ("g13", 1),
        ],
    )
    def test_catalog_tables(self, label, expected):
        """Test min p with beta_{p,p+2} nonzero."""
        assert clifford_from_betti(expected_table(label)) == expected


class TestClassify:
    """Test matching tables against the catalog."""

    @pytest.mark.parametrize(
        ("beta45", "label", "k"),
        [
            (0, "general", None),
            (4, "one_g15", 1),
            (8, "two_g15", 2),
            (12, "three_g15", 3),
            (24, "g72", None),
        ],
    )
    def test_pentagonal_tables(self, beta45, label, k):
        """Test the template tables and their g15 counts."""
        report = classify(pentagonal_table(beta45))
        assert report.recognized
        assert report.label == label
        assert report.k_g15 == k

    def test_every_catalog_table_round_trips(self):
        """Test each catalog table classifies as its own label."""
        for characteristic in (0, 3):
            for entry in catalog(characteristic):
                assert classify(entry.table, characteristic).label == entry.label

    def test_characteristic_three(self):
        """Test beta_45 = 4 means a general curve over F_3."""
        report = classify(pentagonal_table(4), 3)
        assert report.label == "general"
        assert report.k_g15 is None
        assert "characteristic-3 catalog" in report.notes

    def test_characteristic_three_labels_refused_elsewhere(self):
        """Test beta_45 = 6 is unrecognized outside characteristic three."""
        assert classify(pentagonal_table(6)).label == UNRECOGNIZED

    def test_general_table_unrecognized_in_characteristic_three(self):
        """Test beta_45 = 0 has no characteristic-3 counterpart."""
        report = classify(pentagonal_table(0), 3)
        assert not report.recognized
        assert report.nearest == "general"
        assert report.distance == 8

    def test_nearest_entry(self):
        """Test the nearest catalog table is reported."""
        report = classify(pentagonal_table(16))
        assert report.to_dict() == {
            "label": UNRECOGNIZED,
            "clifford_index": 3,
            "k_g15": None,
            "notes": ["beta_45 = 16"],
            "nearest": "three_g15",
            "distance": 8,
        }

    def test_malformed_tables(self, ci_table):
        """Test tables that cannot come from a canonical curve raise."""
        with pytest.raises(MalformedTableError):
            classify(ci_table)
        with pytest.raises(MalformedTableError):
            classify(BettiTable(entries={(1, 2): 21, (7, 10): 1}, num_vars=9))


class TestConsistencyReport:
    """Test cross-checks against ranks and scroll types."""

    def test_rank_agrees(self):
        """Test rank 36 predicts the two-g15 table."""
        report = consistency_report(pentagonal_table(8), rank_alpha=36)
        assert report.consistent
        assert len(report.checks) == 1

    def test_rank_contradicts(self):
        """Test rank 40 contradicts beta_45 = 24."""
        report = consistency_report(pentagonal_table(24), rank_alpha=40)
        assert not report.consistent
        assert report.to_dict()["contradictions"] == [
            "rank 40 predicts beta_45 = 4, table has 24"
        ]

    def test_unclassified_rank(self):
        """Test an unknown rank is a contradiction."""
        assert not consistency_report(pentagonal_table(4), rank_alpha=39).consistent

    def test_scroll_type(self):
        """Test S(2,1,1,1) fits a single g15."""
        report = consistency_report(pentagonal_table(4), scroll_type=ScrollType((2, 1, 1, 1)))
        assert report.consistent

    def test_partition_determines_type(self):
        """Test a partition alone gives the scroll type and its multiplicity."""
        partition = SectionPartition((9, 5, 2, 0))
        assert consistency_report(pentagonal_table(8), partition=partition).consistent
        assert not consistency_report(pentagonal_table(4), partition=partition).consistent

    def test_partition_disagrees_with_type(self):
        """Test a partition of another type is flagged."""
        report = consistency_report(
            pentagonal_table(8),
            partition=SectionPartition((9, 5, 2, 0)),
            scroll_type=ScrollType((2, 1, 1, 1)),
        )
        assert not report.consistent

    def test_scroll_not_swept_by_a_pencil(self):
        """Test an unrelated scroll type is only noted."""
        report = consistency_report(pentagonal_table(0), scroll_type=ScrollType((4, 3)))
        assert report.consistent
        assert report.checks == ("S(4,3) is not swept by a g15",)
