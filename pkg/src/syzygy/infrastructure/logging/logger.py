"""Structured logging with structlog."""

from __future__ import annotations

import logging
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from typing import TYPE_CHECKING, Any

import structlog

if TYPE_CHECKING:
    from syzygy.infrastructure.config import LoggingConfig

SHARED_PROCESSORS: list[structlog.typing.Processor] = [
    structlog.contextvars.merge_contextvars,
    structlog.stdlib.add_log_level,
    structlog.stdlib.add_logger_name,
    structlog.processors.TimeStamper(fmt="iso"),
    structlog.processors.StackInfoRenderer(),
    structlog.processors.UnicodeDecoder(),
]


def _renderer(config: LoggingConfig) -> list[structlog.typing.Processor]:
    if config.format == "json":
        return [structlog.processors.format_exc_info, structlog.processors.JSONRenderer()]
    colors = config.output == "stderr" and sys.stderr.isatty()
    return [structlog.dev.ConsoleRenderer(colors=colors)]


def _handler(output: str) -> logging.Handler:
    if output in ("stderr", "stdout"):
        return logging.StreamHandler(getattr(sys, output))
    return logging.FileHandler(output, encoding="utf-8")


def setup_logging(config: LoggingConfig) -> None:
    """Route structlog events through one stdlib handler.

    Called once per CLI invocation; ``force`` replaces the handler of an
    earlier call in the same process.
    """
    structlog.configure(
        processors=SHARED_PROCESSORS + _renderer(config),
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )
    logging.basicConfig(
        format="%(message)s",
        level=getattr(logging, config.level.upper(), logging.WARNING),
        handlers=[_handler(config.output)],
        force=True,
    )


@contextmanager
def run_context(**fields: Any) -> Iterator[None]:
    """Attach ``fields`` (recipe, seed, field) to every event logged inside the block."""
    with structlog.contextvars.bound_contextvars(**fields):
        yield
