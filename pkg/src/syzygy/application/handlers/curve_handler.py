"""Handler for curve generation, classification and reproduction runs."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import TYPE_CHECKING

import structlog

from syzygy.application.results import ClassifyResult, GenerateResult, ReproduceResult
from syzygy.domain.entities import BettiTable, Ideal, ReproduceRow
from syzygy.domain.errors import SyzygyError
from syzygy.domain.services.betti import betti_via_koszul
from syzygy.domain.services.classify import classify, consistency_report
from syzygy.domain.services.curvegen import generate, section_partition
from syzygy.domain.services.scroll import type_from_partition
from syzygy.domain.valueobjects import FieldSpec, Recipe
from syzygy.infrastructure.logging import run_context
from syzygy.infrastructure.persistence import ArtifactRepository

if TYPE_CHECKING:
    from syzygy.application.commands import ClassifyCommand, GenerateCommand, ReproduceCommand
    from syzygy.infrastructure.config import Config


logger = structlog.get_logger(__name__)

REFUSED = "refused"


def artifact_stem(directory: Path, recipe: Recipe, seed: int) -> Path:
    return directory / f"{recipe.value}-s{seed}"


def curve_table(ideal: Ideal, config: Config, seed: int) -> BettiTable:
    """Betti table of a canonical ideal, cut by the configured linear sections."""
    return betti_via_koszul(
        ideal,
        max_row=config.betti.max_row,
        linear_sections=config.betti.linear_sections,
        seed=seed,
        max_matrix_dim=config.betti.max_matrix_dim,
    )


def _generate(
    recipe: Recipe, field: FieldSpec, seed: int, config: Config, with_ideal: bool = True
) -> GenerateResult:
    gen = config.curvegen
    model, adjoints, ideal = generate(
        recipe,
        field,
        seed,
        max_attempts=gen.max_attempts,
        validate=gen.validate_singularities,
        orbit_threshold=gen.orbit_threshold,
        with_ideal=with_ideal,
    )
    return GenerateResult(model=model, adjoints=adjoints, ideal=ideal)


def _save_generated(
    repository: ArtifactRepository, result: GenerateResult, stem: Path
) -> tuple[Path, ...]:
    written = list(repository.save_model(result.model, stem))
    if result.ideal is not None:
        path = stem.with_name(stem.name + ".canonical.ideal")
        comment = f"canonical ideal of {stem.name}"
        written.append(repository.save_ideal(result.ideal, path, comment=comment))
    return tuple(written)


def run_recipe(
    recipe: Recipe, field: FieldSpec, seed: int, config: Config, output_dir: Path | None = None
) -> ReproduceRow:
    """Generate, resolve and classify one recipe; refusals become failed rows."""
    with run_context(recipe=recipe.value, seed=seed, field=str(field)):
        return _reproduce(recipe, field, seed, config, output_dir)


def _reproduce(
    recipe: Recipe, field: FieldSpec, seed: int, config: Config, output_dir: Path | None
) -> ReproduceRow:
    expected = recipe.expected_label
    start = time.monotonic()
    try:
        generated = _generate(recipe, field, seed, config)
        assert generated.ideal is not None
        table = curve_table(generated.ideal, config, seed)
        report = classify(table, field.characteristic)
        if output_dir is not None:
            repository = ArtifactRepository()
            stem = artifact_stem(output_dir, recipe, seed)
            _save_generated(repository, generated, stem)
            repository.save_table(table, stem.with_name(stem.name + ".betti"))
    except SyzygyError as e:
        logger.warning("recipe_refused", error=str(e))
        return ReproduceRow(
            recipe=recipe.value,
            seed=seed,
            expected=expected,
            label=REFUSED,
            beta45=0,
            seconds=time.monotonic() - start,
            error=str(e),
        )
    row = ReproduceRow(
        recipe=recipe.value,
        seed=seed,
        expected=expected,
        label=report.label,
        beta45=table.get(4, 5),
        seconds=time.monotonic() - start,
    )
    logger.info(
        "recipe_reproduced",
        label=row.label,
        passed=row.passed,
        seconds=round(row.seconds, 2),
    )
    return row


class CurveHandler:
    """Runs the gen, classify and reproduce pipelines."""

    def __init__(self, config: Config, repository: ArtifactRepository | None = None) -> None:
        self._config = config
        self._repository = repository or ArtifactRepository()

    def handle_generate(self, command: GenerateCommand) -> GenerateResult:
        with run_context(recipe=command.recipe.value, seed=command.seed, field=str(command.field)):
            result = _generate(
                command.recipe, command.field, command.seed, self._config, command.with_ideal
            )
        if command.output_dir is not None:
            stem = artifact_stem(command.output_dir, command.recipe, command.seed)
            result.written = _save_generated(self._repository, result, stem)
        logger.info(
            "generate_command_completed",
            recipe=command.recipe.value,
            seed=command.seed,
            attempt=result.model.attempt,
            written=len(result.written),
        )
        return result

    def handle_classify(self, command: ClassifyCommand) -> ClassifyResult:
        """Classify a canonical ideal file or a Betti triples file.

        With a model side-car the section partition of its pencil is computed
        and cross-checked against the table.
        """
        if command.triples:
            table = self._repository.load_table(command.path)
            characteristic = (
                command.characteristic
                if command.characteristic is not None
                else self._config.field.prime
            )
        else:
            ideal = self._repository.load_ideal(command.path)
            characteristic = ideal.ring.field.characteristic
            table = curve_table(ideal, self._config, self._config.curvegen.seed)
        report = classify(table, characteristic)
        result = ClassifyResult(table=table, report=report, characteristic=characteristic)
        if command.model_stem is not None:
            model = self._repository.load_model(command.model_stem)
            result.partition = section_partition(model, command.pencil)
            result.scroll_type = type_from_partition(result.partition)
            result.consistency = consistency_report(
                table, partition=result.partition, characteristic=characteristic
            )
        logger.info(
            "classify_command_completed",
            path=str(command.path),
            label=report.label,
            characteristic=characteristic,
        )
        return result

    def handle_reproduce(self, command: ReproduceCommand) -> ReproduceResult:
        """Rows come back ordered by recipe tag whatever the worker count."""
        recipes = sorted(set(command.recipes), key=lambda r: r.value)
        args = [
            (recipe, command.field, command.seed, self._config, command.output_dir)
            for recipe in recipes
        ]
        if command.workers > 1 and len(recipes) > 1:
            with ProcessPoolExecutor(max_workers=command.workers) as pool:
                rows = list(pool.map(run_recipe, *zip(*args, strict=True)))
        else:
            rows = [run_recipe(*a) for a in args]
        result = ReproduceResult(field_spec=str(command.field), seed=command.seed, rows=rows)
        logger.info(
            "reproduce_command_completed",
            field=str(command.field),
            seed=command.seed,
            recipes=len(rows),
            failed=sum(not r.passed for r in rows),
        )
        return result
