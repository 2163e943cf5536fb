"""Text artifact formats: ideal files, Betti triples and curve model side-cars."""

from __future__ import annotations

import re
from pathlib import Path
from typing import Any

import structlog
import yaml

from syzygy.domain.entities import BettiTable, CurveModel, Ideal
from syzygy.domain.errors import ParseError
from syzygy.domain.services.polyring import parse_polynomial
from syzygy.domain.valueobjects import Ambient, FieldSpec, Recipe, RingSpec, SingularPoint

logger = structlog.get_logger(__name__)

_HEADER = re.compile(r"^ring\s+(?P<fields>.*)$")
_TRIPLE = re.compile(r"^\s*(\d+)\s+(\d+)\s+(\d+)\s*$")


def _content_lines(text: str) -> list[str]:
    stripped = (line.strip() for line in text.splitlines())
    return [line for line in stripped if line and not line.startswith("#")]


def format_ring(ring: RingSpec) -> str:
    header = f"ring p={ring.field.characteristic} vars={','.join(ring.var_names)}"
    if not ring.is_standard_graded:
        header += f" weights={','.join(str(w) for w in ring.var_weights)}"
    return header


def parse_ring(line: str) -> RingSpec:
    """Parse ``ring p=<prime> vars=<names> [weights=<ints>]``; p=0 means the rationals."""
    match = _HEADER.match(line.strip())
    if not match:
        raise ParseError(f"Expected a 'ring p=... vars=...' header, got {line!r}")
    fields: dict[str, str] = {}
    for token in match.group("fields").split():
        key, sep, value = token.partition("=")
        if not sep:
            raise ParseError(f"Malformed header entry {token!r}")
        fields[key] = value
    if "p" not in fields or "vars" not in fields:
        raise ParseError("Ring header needs p= and vars=")
    try:
        field = FieldSpec.from_string(fields["p"])
        names = tuple(n.strip() for n in fields["vars"].split(",") if n.strip())
        weights = tuple(int(w) for w in fields["weights"].split(",")) if "weights" in fields else ()
        return RingSpec(field=field, var_names=names, var_weights=weights)
    except ValueError as e:
        raise ParseError(f"Invalid ring header: {e}") from e


def format_ideal(ideal: Ideal, comment: str | None = None) -> str:
    lines = [format_ring(ideal.ring)]
    if comment:
        lines.append(f"# {comment}")
    lines.extend(g.to_string() for g in ideal.generators)
    return "\n".join(lines) + "\n"


def parse_ideal(text: str) -> Ideal:
    """Header line, then one polynomial per line; ``#`` lines are comments."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("Empty ideal file")
    ring = parse_ring(lines[0])
    return Ideal.of(ring, (parse_polynomial(line, ring) for line in lines[1:]))


def format_triples(table: BettiTable) -> str:
    """Machine format: ``i j beta`` per nonzero entry, sorted lexicographically."""
    lines = [f"# num_vars={table.num_vars}"]
    lines.extend(f"{i} {j} {v}" for i, j, v in table.triples())
    return "\n".join(lines) + "\n"


def parse_triples(text: str) -> BettiTable:
    num_vars = 0
    entries: dict[tuple[int, int], int] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            if key.strip() == "num_vars" and value.strip().isdigit():
                num_vars = int(value)
            continue
        match = _TRIPLE.match(line)
        if not match:
            raise ParseError(f"Expected 'i j beta', got {line!r}")
        i, j, beta = (int(x) for x in match.groups())
        if (i, j) in entries:
            raise ParseError(f"Duplicate entry for ({i}, {j})")
        entries[(i, j)] = beta
    return BettiTable(entries=entries, num_vars=num_vars)


def model_sidecar(model: CurveModel) -> dict[str, Any]:
    """Everything about a model that the ideal file does not carry."""
    data = model.to_dict()
    data.pop("defining_forms")
    return data


def parse_model(ideal_text: str, sidecar: dict[str, Any]) -> CurveModel:
    ideal = parse_ideal(ideal_text)
    try:
        recipe = Recipe.from_string(sidecar["recipe"]) if sidecar.get("recipe") else None
        return CurveModel(
            ambient=Ambient(sidecar["ambient"]),
            ring=ideal.ring,
            defining_forms=ideal.generators,
            singular_points=tuple(
                SingularPoint.from_dict(p) for p in sidecar.get("singular_points", [])
            ),
            seed=int(sidecar.get("seed", 0)),
            recipe=recipe,
            attempt=int(sidecar.get("attempt", 1)),
            marked_points=tuple(tuple(int(c) for c in p) for p in sidecar.get("marked_points", [])),
        )
    except (KeyError, ValueError) as e:
        raise ParseError(f"Invalid model side-car: {e}") from e


class ArtifactRepository:
    """Reads and writes artifacts as UTF-8 text files."""

    def save_ideal(self, ideal: Ideal, path: str | Path, comment: str | None = None) -> Path:
        """Write an ideal file."""
        return self._write(Path(path), format_ideal(ideal, comment))

    def load_ideal(self, path: str | Path) -> Ideal:
        """Read an ideal file."""
        return parse_ideal(Path(path).read_text(encoding="utf-8"))

    def save_table(self, table: BettiTable, path: str | Path) -> Path:
        """Write Betti triples."""
        return self._write(Path(path), format_triples(table))

    def load_table(self, path: str | Path) -> BettiTable:
        """Read Betti triples."""
        return parse_triples(Path(path).read_text(encoding="utf-8"))

    def save_model(self, model: CurveModel, stem: str | Path) -> tuple[Path, Path]:
        """Write ``<stem>.ideal`` and the ``<stem>.yaml`` side-car."""
        stem = Path(stem)
        text = format_ideal(model.ideal(), comment=f"{model.ambient.value} model")
        ideal_path = self._write(stem.with_suffix(".ideal"), text)
        sidecar_path = self._write(
            stem.with_suffix(".yaml"), yaml.safe_dump(model_sidecar(model), sort_keys=False)
        )
        return ideal_path, sidecar_path

    def load_model(self, stem: str | Path) -> CurveModel:
        """Read a model from its ideal file and side-car."""
        stem = Path(stem)
        sidecar = yaml.safe_load(stem.with_suffix(".yaml").read_text(encoding="utf-8")) or {}
        return parse_model(stem.with_suffix(".ideal").read_text(encoding="utf-8"), sidecar)

    def _write(self, path: Path, text: str) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.debug("artifact_written", path=str(path), bytes=len(text))
        return path
