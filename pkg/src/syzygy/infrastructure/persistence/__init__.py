"""Artifact file formats."""

from syzygy.infrastructure.persistence.files import (
    ArtifactRepository,
    format_ideal,
    format_triples,
    model_sidecar,
    parse_ideal,
    parse_model,
    parse_triples,
)

__all__ = [
    "ArtifactRepository",
    "format_ideal",
    "parse_ideal",
    "format_triples",
    "parse_triples",
    "model_sidecar",
    "parse_model",
]
