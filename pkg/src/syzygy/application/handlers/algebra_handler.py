"""Handler for ideal-level computations: Groebner bases, Betti tables, resolutions, scrolls."""

from __future__ import annotations

import time
from pathlib import Path
from typing import TYPE_CHECKING

import structlog

from syzygy.application.results import BettiResult, GroebnerResult, ResolveResult, ScrollResult
from syzygy.domain.entities import Ideal
from syzygy.domain.services.betti import (
    betti_via_koszul,
    free_resolution,
    invariants,
    koszul_strands,
    minimalize,
    table_from_strands,
)
from syzygy.domain.services.groebner import buchberger
from syzygy.domain.services.scroll import eagon_northcott_betti, scroll_ideal, scroll_matrix
from syzygy.domain.valueobjects import RingSpec
from syzygy.infrastructure.persistence import ArtifactRepository

if TYPE_CHECKING:
    from syzygy.application.commands import (
        BettiCommand,
        GroebnerCommand,
        ResolveCommand,
        ScrollCommand,
    )
    from syzygy.infrastructure.config import Config


logger = structlog.get_logger(__name__)


class AlgebraHandler:
    """Runs the gb, betti, resolve and scroll pipelines."""

    def __init__(self, config: Config, repository: ArtifactRepository | None = None) -> None:
        self._config = config
        self._repository = repository or ArtifactRepository()

    def handle_groebner(self, command: GroebnerCommand) -> GroebnerResult:
        """Compute and optionally write a reduced Groebner basis."""
        ideal = self._repository.load_ideal(command.ideal_path)
        start = time.monotonic()
        gb = buchberger(ideal, command.order, max_degree=command.max_degree)
        logger.info(
            "groebner_command_completed",
            path=str(command.ideal_path),
            order=str(command.order),
            size=len(gb),
            seconds=round(time.monotonic() - start, 3),
        )
        written: tuple[Path, ...] = ()
        if command.output:
            comment = f"groebner basis order={command.order}"
            if gb.truncated_at is not None:
                comment += f" truncated_at={gb.truncated_at}"
            basis = Ideal(gb.ring, gb.elements)
            written = (self._repository.save_ideal(basis, command.output, comment),)
        return GroebnerResult(basis=gb, written=written)

    def handle_betti(self, command: BettiCommand) -> BettiResult:
        """Betti table through Koszul homology strands."""
        ideal = self._repository.load_ideal(command.ideal_path)
        betti = self._config.betti
        records = koszul_strands(
            ideal,
            max_row=command.max_row if command.max_row is not None else betti.max_row,
            linear_sections=command.linear_sections,
            seed=command.seed if command.seed is not None else self._config.curvegen.seed,
            max_matrix_dim=betti.max_matrix_dim,
        )
        table = table_from_strands(records, ideal.ring.n_vars)
        logger.info(
            "betti_command_completed",
            path=str(command.ideal_path),
            sections=command.linear_sections,
            entries=len(table.entries),
        )
        written = (self._repository.save_table(table, command.output),) if command.output else ()
        return BettiResult(
            table=table, invariants=invariants(table), strands=tuple(records), written=written
        )

    def handle_resolve(self, command: ResolveCommand) -> ResolveResult:
        """Free resolution, then cancellation of unit entries."""
        ideal = self._repository.load_ideal(command.ideal_path)
        complex_ = free_resolution(
            ideal,
            command.max_len,
            command.max_deg,
            max_matrix_dim=self._config.betti.max_matrix_dim,
        )
        minimal, table = minimalize(complex_)
        logger.info(
            "resolve_command_completed",
            path=str(command.ideal_path),
            ranks=[len(t) for t in complex_.twists],
            minimal_ranks=[len(t) for t in minimal.twists],
        )
        written = (self._repository.save_table(table, command.output),) if command.output else ()
        return ResolveResult(complex=complex_, minimal=minimal, table=table, written=written)

    def handle_scroll(self, command: ScrollCommand) -> ScrollResult:
        """Scroll matrix and ideal with the Eagon-Northcott table.

        With ``verify`` the table is also computed, cutting the scroll by as
        many generic hyperplanes as its dimension.
        """
        t = command.scroll_type
        ring = RingSpec.standard(command.field, t.ambient + 1)
        matrix = scroll_matrix(t, ring)
        ideal = scroll_ideal(t, ring)
        predicted = eagon_northcott_betti(t.f, ring.n_vars)
        computed = None
        if command.verify:
            computed = betti_via_koszul(
                ideal,
                max_row=self._config.betti.max_row,
                linear_sections=t.dim,
                seed=self._config.curvegen.seed,
                max_matrix_dim=self._config.betti.max_matrix_dim,
            )
            if computed != predicted:
                logger.warning("scroll_table_mismatch", type=str(t), field=str(command.field))
        written: tuple[Path, ...] = ()
        if command.output:
            written = (
                self._repository.save_ideal(ideal, command.output, comment=f"2x2 minors of {t}"),
            )
        logger.info("scroll_command_completed", type=str(t), generators=len(ideal))
        return ScrollResult(
            scroll_type=t,
            matrix=matrix,
            ideal=ideal,
            predicted=predicted,
            computed=computed,
            written=written,
        )
