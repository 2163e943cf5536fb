"""Configuration module."""

from syzygy.infrastructure.config.config import (
    BettiConfig,
    Config,
    CurveGenConfig,
    FieldConfig,
    LoggingConfig,
    load_config,
)

__all__ = [
    "Config",
    "FieldConfig",
    "BettiConfig",
    "CurveGenConfig",
    "LoggingConfig",
    "load_config",
]
