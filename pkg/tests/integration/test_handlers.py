"""Integration tests for the application handlers."""

import pytest

from syzygy.application.commands import (
    AmplenessCommand,
    BettiCommand,
    ClassifyCommand,
    GenerateCommand,
    GroebnerCommand,
    PsiRankCommand,
    ReproduceCommand,
    ResolveCommand,
    ScrollCommand,
)
from syzygy.application.handlers import AlgebraHandler, CurveHandler, InvariantHandler
from syzygy.domain.errors import ReiderInapplicableError, UnsupportedFieldError
from syzygy.domain.valueobjects import (
    DivisorClass,
    FieldSpec,
    MonomialOrder,
    PsiTag,
    Recipe,
    ScrollType,
    SurfaceBase,
)
from syzygy.infrastructure.persistence import format_triples

from tests.factories import pentagonal_table


class TestAlgebraHandler:
    """Test AlgebraHandler."""

    @pytest.fixture
    def handler(self, config, repository):
        """Create an algebra handler."""
        return AlgebraHandler(config, repository)

    def test_groebner_writes_basis(self, handler, ci_file, tmp_path, repository):
        """Test the basis is written as an ideal file."""
        out = tmp_path / "gb.ideal"
        result = handler.handle_groebner(GroebnerCommand(ci_file, output=out))
        assert result.written == (out,)
        assert len(repository.load_ideal(out)) == len(result.basis)
        assert "# groebner basis order=grevlex" in out.read_text(encoding="utf-8")

    def test_groebner_elimination(self, handler, cubic_file):
        """Test an elimination order is honoured."""
        result = handler.handle_groebner(
            GroebnerCommand(cubic_file, order=MonomialOrder.block_elim(1))
        )
        assert str(result.basis.order) == "elim:1"

    def test_betti_strands(self, handler, ci_file, ci_table):
        """Test the strand records add up to the table."""
        result = handler.handle_betti(BettiCommand(ci_file))
        assert result.table == ci_table
        for s in result.strands:
            assert s.beta == s.middle - s.rank_out - s.rank_in
        assert result.invariants.is_gorenstein_symmetric

    def test_betti_with_sections(self, handler, cubic_file):
        """Test two sections keep the table of the twisted cubic."""
        cut = handler.handle_betti(BettiCommand(cubic_file, linear_sections=2, seed=4))
        full = handler.handle_betti(BettiCommand(cubic_file))
        assert cut.table == full.table

    def test_resolve(self, handler, cubic_file, tmp_path, repository):
        """Test the minimal table is written."""
        out = tmp_path / "cubic.betti"
        result = handler.handle_resolve(ResolveCommand(cubic_file, output=out))
        assert repository.load_table(out) == result.table
        assert result.minimal.is_minimal()

    @pytest.mark.parametrize("e", [(2, 1), (1, 1, 1), (3, 1)])
    def test_scroll_verify(self, handler, e):
        """Test computed and predicted tables agree for small scrolls."""
        result = handler.handle_scroll(
            ScrollCommand(ScrollType(e), FieldSpec.prime(10007), verify=True)
        )
        assert result.matches is True

    def test_scroll_without_verify(self, handler, tmp_path, repository):
        """Test the ideal is written and nothing is computed."""
        out = tmp_path / "scroll.ideal"
        result = handler.handle_scroll(
            ScrollCommand(ScrollType((2, 1, 1, 1)), FieldSpec.prime(10007), output=out)
        )
        assert result.matches is None
        assert len(repository.load_ideal(out)) == 10


class TestInvariantHandler:
    """Test InvariantHandler."""

    def test_psirank_prediction(self):
        """Test the predicted beta_45 for each type."""
        handler = InvariantHandler()
        expected = {PsiTag.A: 4, PsiTag.B: 8, PsiTag.C: 12, PsiTag.D: 12}
        for tag, beta in expected.items():
            result = handler.handle_psirank(PsiRankCommand(tag, FieldSpec.prime(10007)))
            assert result.predicted_beta45 == beta

    def test_psirank_characteristic_three(self):
        """Test type A predicts the characteristic-3 value."""
        result = InvariantHandler().handle_psirank(
            PsiRankCommand(PsiTag.A, FieldSpec.prime(3))
        )
        assert result.report.rank == 38
        assert result.predicted_beta45 == 6

    def test_ampleness(self):
        """Test genus and adjoint data of the septic."""
        result = InvariantHandler().handle_ampleness(
            AmplenessCommand(SurfaceBase.P2, DivisorClass.from_string("7:2^6"), 1)
        )
        assert result.self_intersection == 25
        assert result.genus == 9
        assert result.curve == "7H-2E1-2E2-2E3-2E4-2E5-2E6"

    def test_ampleness_extra_points(self):
        """Test --points pads the curve class."""
        result = InvariantHandler().handle_ampleness(
            AmplenessCommand(
                SurfaceBase.P2, DivisorClass.from_string("7:2^6"), 0, num_points=7
            )
        )
        assert result.verdict.applicable

    def test_ampleness_inapplicable(self):
        """Test inapplicable cases raise."""
        with pytest.raises(ReiderInapplicableError):
            InvariantHandler().handle_ampleness(
                AmplenessCommand(SurfaceBase.P2, DivisorClass.from_string("2"), 0)
            )


class TestCurveHandler:
    """Test CurveHandler."""

    def test_classify_triples(self, config, tmp_path):
        """Test classification of a stored table with the configured prime."""
        path = tmp_path / "g15.betti"
        path.write_text(format_triples(pentagonal_table(12)), encoding="utf-8")
        result = CurveHandler(config).handle_classify(ClassifyCommand(path, triples=True))
        assert result.report.label == "three_g15"
        assert result.characteristic == 10007

    def test_classify_triples_characteristic_three(self, config, tmp_path):
        """Test an explicit characteristic selects its catalog."""
        path = tmp_path / "g15.betti"
        path.write_text(format_triples(pentagonal_table(6)), encoding="utf-8")
        command = ClassifyCommand(path, triples=True, characteristic=3)
        assert CurveHandler(config).handle_classify(command).report.label == "one_g15"

    def test_refused_recipe_row(self, config):
        """Test refusals become failed rows."""
        command = ReproduceCommand((Recipe.G13,), FieldSpec.prime(2), seed=1)
        result = CurveHandler(config).handle_reproduce(command)
        assert not result.passed
        assert result.rows[0].label == "refused"
        assert "Characteristic 2" in result.rows[0].error

    def test_generate_refuses_rationals(self, config):
        """Test QQ is refused before any drawing."""
        with pytest.raises(UnsupportedFieldError):
            CurveHandler(config).handle_generate(
                GenerateCommand(Recipe.G62, FieldSpec.rational(), seed=1)
            )


@pytest.mark.slow
class TestCurvePipeline:
    """Test generate, write, reload and classify."""

    def test_generate_and_classify(self, config, tmp_path):
        """Test the g62 recipe end to end through the files."""
        handler = CurveHandler(config)
        generated = handler.handle_generate(
            GenerateCommand(Recipe.G62, FieldSpec.prime(10007), seed=1, output_dir=tmp_path)
        )
        assert len(generated.written) == 3
        ideal_path = tmp_path / "g62-s1.canonical.ideal"
        assert ideal_path in generated.written
        assert sum(1 for d in generated.ideal.degrees() if d == 2) == 21

        result = handler.handle_classify(
            ClassifyCommand(ideal_path, model_stem=tmp_path / "g62-s1")
        )
        assert result.report.label == "g62"
        assert result.partition.h0 == (9, 6, 3, 1, 0)
        assert result.consistency.consistent
