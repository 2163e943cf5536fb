"""Handler for the exterior-algebra rank and the surface ampleness checks."""

from __future__ import annotations

from typing import TYPE_CHECKING

import structlog

from syzygy.application.results import AmplenessResult, PsiRankResult
from syzygy.domain.errors import ReiderInapplicableError, UnclassifiedError
from syzygy.domain.services.exterior import classify_rank, psi_rank
from syzygy.domain.services.picard import (
    adjoint_hilbert_poly,
    ampleness_verdict,
    arithmetic_genus,
    self_intersection,
)
from syzygy.domain.valueobjects import PsiType, SurfaceLattice

if TYPE_CHECKING:
    from syzygy.application.commands import AmplenessCommand, PsiRankCommand


logger = structlog.get_logger(__name__)


class InvariantHandler:
    """Runs the psirank and ampleness pipelines."""

    def handle_psirank(self, command: PsiRankCommand) -> PsiRankResult:
        report = psi_rank(PsiType.catalog(command.tag), command.field)
        try:
            predicted: int | None = classify_rank(report.rank, command.field.characteristic)
        except UnclassifiedError:
            predicted = None
        logger.info(
            "psirank_command_completed",
            type=command.tag.value,
            field=str(command.field),
            rank=report.rank,
            kernel_dim=report.kernel_dim,
        )
        return PsiRankResult(report=report, predicted_beta45=predicted)

    def handle_ampleness(self, command: AmplenessCommand) -> AmplenessResult:
        """Verdict for i-very ampleness of the curve class.

        The number of blown-up points defaults to the exceptional coordinates
        written in the curve class. Raises ReiderInapplicableError when the
        criterion does not apply.
        """
        s = command.num_points if command.num_points is not None else len(command.curve.exc_coords)
        lattice = SurfaceLattice(base=command.base, num_exceptional=s)
        for k, nxt in command.near:
            if nxt != k + 1:
                raise ValueError(f"Infinitely near pairs must be consecutive, got {k},{nxt}")
            lattice = lattice.with_near_pair(k)
        curve = command.curve.padded(s)
        verdict = ampleness_verdict(lattice, curve, command.i)
        if not verdict.applicable:
            logger.warning("ampleness_refused", surface=command.base.value, reason=verdict.reason)
            raise ReiderInapplicableError(verdict.reason)
        logger.info(
            "ampleness_command_completed",
            surface=command.base.value,
            curve=curve.format(command.base),
            i=command.i,
            verdict=verdict.verdict.value if verdict.verdict else None,
            critical=len(verdict.critical),
        )
        return AmplenessResult(
            verdict=verdict,
            curve=curve.format(command.base),
            self_intersection=self_intersection(lattice, curve),
            genus=arithmetic_genus(lattice, curve),
            adjoint_hilbert=adjoint_hilbert_poly(lattice, curve),
        )
