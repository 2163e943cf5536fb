"""Syzygy workbench - command line entry point."""

from __future__ import annotations

import json
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any, TypeVar

import click
import structlog
import yaml

from syzygy import __version__
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
from syzygy.domain.errors import ErrorCode, SyzygyError
from syzygy.domain.valueobjects import (
    DivisorClass,
    FieldSpec,
    MonomialOrder,
    PencilTag,
    PsiTag,
    Recipe,
    ScrollType,
    SurfaceBase,
)
from syzygy.infrastructure.config import Config, load_config
from syzygy.infrastructure.logging import setup_logging
from syzygy.presentation import formatters

T = TypeVar("T")

logger = structlog.get_logger(__name__)


def _converter(factory: Callable[[str], T]) -> Callable[[click.Context, click.Parameter, Any], Any]:
    """Click callback turning a ValueError from ``factory`` into a usage error."""

    def convert(_ctx: click.Context, _param: click.Parameter, value: Any) -> Any:
        if value is None:
            return None
        try:
            if isinstance(value, tuple):
                return tuple(factory(v) for v in value)
            return factory(str(value))
        except ValueError as e:
            raise click.BadParameter(str(e)) from e

    return convert


def _near_pair(value: str) -> tuple[int, int]:
    parts = [p.strip() for p in value.split(",")]
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ValueError(f"Expected 'i,j', got {value!r}")
    return int(parts[0]), int(parts[1])


def _field(ctx: click.Context, characteristic: int | None) -> FieldSpec:
    config: Config = ctx.obj
    return FieldSpec.from_characteristic(
        config.field.prime if characteristic is None else characteristic
    )


def _seed(ctx: click.Context, seed: int | None) -> int:
    config: Config = ctx.obj
    return config.curvegen.seed if seed is None else seed


def _emit(result: Any, as_json: bool, render: Callable[[Any], str]) -> None:
    if as_json:
        click.echo(json.dumps(result.to_dict()))
    else:
        click.echo(render(result))


def _run(action: Callable[[], T]) -> T:
    """Run a handler call, mapping workbench errors to a diagnostic and exit status."""
    try:
        return action()
    except SyzygyError as e:
        logger.debug("command_refused", error=type(e).__name__, code=int(e.code))
        click.echo(f"error: {e}", err=True)
        sys.exit(e.code.exit_code)
    except ValueError as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(ErrorCode.REFUSAL.exit_code)


def output_options(func: Callable[..., Any]) -> Callable[..., Any]:
    func = click.option("--json", "as_json", is_flag=True, help="One-line JSON summary")(func)
    return click.option(
        "-o", "--output", type=click.Path(path_type=Path), help="Write the artifact to this path"
    )(func)


char_option = click.option(
    "--char",
    "characteristic",
    type=click.IntRange(min=0),
    help="Field characteristic, 0 for the rationals (default: configured prime)",
)
seed_option = click.option(
    "--seed", type=click.IntRange(min=0), help="Random seed (default: SYZYGY_SEED or config)"
)
ideal_argument = click.argument(
    "ideal_path", type=click.Path(exists=True, dir_okay=False, path_type=Path)
)


@click.group()
@click.version_option(version=__version__, prog_name="syzygy")
@click.option(
    "-c",
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Path to configuration file",
)
@click.pass_context
def cli(ctx: click.Context, config_path: Path | None) -> None:
    """Betti tables of canonical genus-9 curves over exact fields."""
    config = load_config(config_path)
    if config.logging.output == "stdout":
        config.logging.output = "stderr"
    setup_logging(config.logging)
    ctx.obj = config


@cli.command()
@ideal_argument
@click.option(
    "--order",
    default="grevlex",
    callback=_converter(MonomialOrder.from_string),
    help="grevlex or elim:k (block order eliminating the first k variables)",
)
@click.option("--max-degree", type=click.IntRange(min=1), help="Truncate S-pairs above this degree")
@output_options
@click.pass_context
def gb(
    ctx: click.Context,
    ideal_path: Path,
    order: MonomialOrder,
    max_degree: int | None,
    output: Path | None,
    as_json: bool,
) -> None:
    """Reduced Groebner basis of an ideal file."""
    handler = AlgebraHandler(ctx.obj)
    command = GroebnerCommand(
        ideal_path=ideal_path, order=order, max_degree=max_degree, output=output
    )
    _emit(_run(lambda: handler.handle_groebner(command)), as_json, formatters.format_groebner)


@cli.command()
@ideal_argument
@click.option("--max-row", type=click.IntRange(min=0), help="Rows j - i up to this bound")
@click.option(
    "--sections",
    type=click.IntRange(min=0),
    default=0,
    show_default=True,
    help="Generic hyperplane sections cut first (Cohen-Macaulay quotients only)",
)
@seed_option
@output_options
@click.pass_context
def betti(
    ctx: click.Context,
    ideal_path: Path,
    max_row: int | None,
    sections: int,
    seed: int | None,
    output: Path | None,
    as_json: bool,
) -> None:
    """Betti table of an ideal file via Koszul homology (grid + triples)."""
    handler = AlgebraHandler(ctx.obj)
    command = BettiCommand(
        ideal_path=ideal_path,
        max_row=max_row,
        linear_sections=sections,
        seed=_seed(ctx, seed),
        output=output,
    )
    _emit(_run(lambda: handler.handle_betti(command)), as_json, formatters.format_betti)


@cli.command()
@ideal_argument
@click.option("--max-len", type=click.IntRange(min=1), help="Longest resolution built")
@click.option("--max-deg", type=click.IntRange(min=1), help="Largest internal degree searched")
@output_options
@click.pass_context
def resolve(
    ctx: click.Context,
    ideal_path: Path,
    max_len: int | None,
    max_deg: int | None,
    output: Path | None,
    as_json: bool,
) -> None:
    """Free resolution of an ideal file, minimalized."""
    handler = AlgebraHandler(ctx.obj)
    command = ResolveCommand(ideal_path=ideal_path, max_len=max_len, max_deg=max_deg, output=output)
    _emit(_run(lambda: handler.handle_resolve(command)), as_json, formatters.format_resolution)


@cli.command()
@click.option(
    "--type",
    "scroll_type",
    required=True,
    callback=_converter(ScrollType.from_string),
    help="Scroll type, e.g. 2,1,1,1",
)
@char_option
@click.option("--verify", is_flag=True, help="Also compute the table via Koszul homology")
@output_options
@click.pass_context
def scroll(
    ctx: click.Context,
    scroll_type: ScrollType,
    characteristic: int | None,
    verify: bool,
    output: Path | None,
    as_json: bool,
) -> None:
    """Scroll matrix, ideal of 2x2 minors and Eagon-Northcott prediction."""
    handler = AlgebraHandler(ctx.obj)
    command = ScrollCommand(
        scroll_type=scroll_type,
        field=_run(lambda: _field(ctx, characteristic)),
        verify=verify,
        output=output,
    )
    _emit(_run(lambda: handler.handle_scroll(command)), as_json, formatters.format_scroll)


@cli.command()
@click.option(
    "--type", "tag", required=True, callback=_converter(PsiTag.from_string), help="A, B, C or D"
)
@char_option
@click.option("--json", "as_json", is_flag=True, help="One-line JSON summary")
@click.pass_context
def psirank(ctx: click.Context, tag: PsiTag, characteristic: int | None, as_json: bool) -> None:
    """Rank and kernel of the wedge map of a skew normal form."""
    command = PsiRankCommand(tag=tag, field=_run(lambda: _field(ctx, characteristic)))
    result = _run(lambda: InvariantHandler().handle_psirank(command))
    _emit(result, as_json, formatters.format_psirank)


@cli.command()
@click.option(
    "--surface",
    "base",
    required=True,
    callback=_converter(SurfaceBase.from_string),
    help="p2, p1xp1 or f2",
)
@click.option(
    "--curve",
    required=True,
    callback=_converter(DivisorClass.from_string),
    help="Curve class, e.g. 7:2^6 or 5,5:2^7",
)
@click.option("--i", "i", type=click.IntRange(0, 1), required=True, help="0 or 1")
@click.option(
    "--near",
    multiple=True,
    callback=_converter(_near_pair),
    help="Infinitely near pair i,i+1 (repeatable)",
)
@click.option("--points", type=click.IntRange(min=0), help="Number of blown-up points")
@click.option("--json", "as_json", is_flag=True, help="One-line JSON summary")
def ampleness(
    base: SurfaceBase,
    curve: DivisorClass,
    i: int,
    near: tuple[tuple[int, int], ...],
    points: int | None,
    as_json: bool,
) -> None:
    """Reider-type verdict for i-very ampleness of a curve class."""
    command = AmplenessCommand(base=base, curve=curve, i=i, near=near, num_points=points)
    result = _run(lambda: InvariantHandler().handle_ampleness(command))
    _emit(result, as_json, formatters.format_ampleness)


@cli.command()
@click.option(
    "--recipe", required=True, callback=_converter(Recipe.from_string), help="Recipe tag"
)
@seed_option
@char_option
@click.option("--no-ideal", is_flag=True, help="Stop after the model and its adjoint series")
@output_options
@click.pass_context
def gen(
    ctx: click.Context,
    recipe: Recipe,
    seed: int | None,
    characteristic: int | None,
    no_ideal: bool,
    output: Path | None,
    as_json: bool,
) -> None:
    """Draw a curve model and its canonical ideal; -o names the output directory."""
    handler = CurveHandler(ctx.obj)
    command = GenerateCommand(
        recipe=recipe,
        field=_run(lambda: _field(ctx, characteristic)),
        seed=_seed(ctx, seed),
        output_dir=output,
        with_ideal=not no_ideal,
    )
    _emit(_run(lambda: handler.handle_generate(command)), as_json, formatters.format_model)


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--triples", is_flag=True, help="PATH holds Betti triples instead of an ideal")
@char_option
@click.option(
    "--model",
    "model_stem",
    type=click.Path(path_type=Path),
    help="Model stem (STEM.ideal + STEM.yaml) for the section partition cross-check",
)
@click.option("--pencil", callback=_converter(PencilTag.from_string), help="Pencil for --model")
@click.option("--json", "as_json", is_flag=True, help="One-line JSON summary")
@click.pass_context
def classify(
    ctx: click.Context,
    path: Path,
    triples: bool,
    characteristic: int | None,
    model_stem: Path | None,
    pencil: PencilTag | None,
    as_json: bool,
) -> None:
    """Classify a canonical ideal (or a Betti table) against the catalog."""
    handler = CurveHandler(ctx.obj)
    command = ClassifyCommand(
        path=path,
        triples=triples,
        characteristic=characteristic,
        model_stem=model_stem,
        pencil=pencil,
    )
    result = _run(lambda: handler.handle_classify(command))
    _emit(result, as_json, formatters.format_classification)


@cli.command()
@click.option("--all", "run_all", is_flag=True, help="Run every recipe")
@click.option(
    "--recipe",
    "recipes",
    multiple=True,
    callback=_converter(Recipe.from_string),
    help="Recipe tag (repeatable)",
)
@seed_option
@char_option
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@output_options
@click.pass_context
def reproduce(
    ctx: click.Context,
    run_all: bool,
    recipes: tuple[Recipe, ...],
    seed: int | None,
    characteristic: int | None,
    workers: int,
    output: Path | None,
    as_json: bool,
) -> None:
    """Generate, resolve and classify recipes; exit 3 on any mismatch."""
    if run_all:
        recipes = tuple(Recipe)
    if not recipes:
        raise click.UsageError("Give --all or at least one --recipe")
    handler = CurveHandler(ctx.obj)
    command = ReproduceCommand(
        recipes=recipes,
        field=_run(lambda: _field(ctx, characteristic)),
        seed=_seed(ctx, seed),
        workers=workers,
        output_dir=output,
    )
    result = _run(lambda: handler.handle_reproduce(command))
    _emit(result, as_json, formatters.format_reproduce)
    if not result.passed:
        sys.exit(ErrorCode.MISMATCH.exit_code)


@cli.command()
@click.pass_context
def info(ctx: click.Context) -> None:
    """List recipes, catalog labels and the active configuration."""
    from syzygy.domain.services.classify import CATALOG
    from syzygy.domain.services.curvegen import CONSTRUCTIONS

    config: Config = ctx.obj
    click.echo(f"syzygy workbench v{__version__}")
    click.echo()
    click.echo("Recipes:")
    for recipe, c in sorted(CONSTRUCTIONS.items(), key=lambda item: item[0].value):
        roster = ",".join(str(m) for m in c.roster)
        click.echo(
            f"  - {recipe.value}: {c.ambient.value} degree {c.degree}, "
            f"singularities {roster} -> {recipe.expected_label}"
        )
    click.echo()
    click.echo("Catalog:")
    for entry in CATALOG:
        click.echo(
            f"  - {entry.label} [{entry.constraint.value}]: "
            f"beta_45={entry.table.get(4, 5)} {entry.description}"
        )
    click.echo()
    click.echo("Configuration:")
    click.echo(f"  field: F_{config.field.prime} (cross-check F_{config.field.cross_check_prime})")
    click.echo(f"  seed: {config.curvegen.seed}")
    click.echo(f"  betti: max_row={config.betti.max_row} sections={config.betti.linear_sections}")


@cli.command("init-config")
@click.argument("path", type=click.Path(dir_okay=False, path_type=Path), default="syzygy.yaml")
@click.option("--force", is_flag=True, help="Overwrite an existing file")
def init_config(path: Path, force: bool) -> None:
    """Generate a default configuration file."""
    if path.exists() and not force:
        click.echo(f"Configuration file already exists: {path}", err=True)
        sys.exit(1)
    header = (
        "# Syzygy workbench configuration\n"
        "# Environment variables (SYZYGY_*) override these values.\n\n"
    )
    path.write_text(header + yaml.safe_dump(Config().to_dict(), sort_keys=False), encoding="utf-8")
    click.echo(f"Created configuration file: {path}")


def main() -> None:
    """Main entry point."""
    cli()


if __name__ == "__main__":
    main()
