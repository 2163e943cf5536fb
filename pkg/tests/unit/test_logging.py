"""Unit tests for logging setup."""

import json

import pytest
import structlog

from syzygy.infrastructure.config import LoggingConfig
from syzygy.infrastructure.logging import run_context, setup_logging


@pytest.fixture
def log_file(tmp_path):
    """Route JSON logs to a file, then restore the default handler."""
    path = tmp_path / "syzygy.log"
    setup_logging(LoggingConfig(level="info", format="json", output=str(path)))
    yield path
    setup_logging(LoggingConfig())


def read_events(path):
    return [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]


class TestSetupLogging:
    """Test setup_logging."""

    def test_json_to_file(self, log_file):
        """Test events are written as JSON lines."""
        structlog.get_logger("syzygy.test").info("strand_computed", i=2, j=3)

        (event,) = read_events(log_file)
        assert event["event"] == "strand_computed"
        assert event["level"] == "info"
        assert event["i"] == 2

    def test_level_filters(self, log_file):
        """Test debug events are dropped at info level."""
        structlog.get_logger("syzygy.test").debug("pair_reduced")

        assert read_events(log_file) == []

    def test_run_context(self, log_file):
        """Test bound fields reach events inside the block only."""
        logger = structlog.get_logger("syzygy.test")
        with run_context(recipe="g62", seed=3):
            logger.warning("degenerate_draw_reseeded")
        logger.warning("after")

        inside, outside = read_events(log_file)
        assert inside["recipe"] == "g62"
        assert inside["seed"] == 3
        assert "recipe" not in outside
