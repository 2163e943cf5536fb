"""Configuration management using Pydantic Settings."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import yaml
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict
from sympy import isprime


class _Section(BaseSettings):
    """A config section whose environment variables override file values."""

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return env_settings, init_settings, dotenv_settings, file_secret_settings


class FieldConfig(_Section):
    """Base field of generated models and computed tables."""

    model_config = SettingsConfigDict(
        env_prefix="SYZYGY_FIELD_",
        extra="ignore",
    )

    prime: int = Field(default=10007, ge=3, description="Characteristic of the working prime field")
    cross_check_prime: int = Field(
        default=32003, ge=3, description="Second prime for reproducibility cross-checks"
    )

    @field_validator("prime", "cross_check_prime")
    @classmethod
    def check_prime(cls, v: int) -> int:
        """Reject composite characteristics."""
        if not isprime(v):
            raise ValueError(f"{v} is not prime")
        return v


class BettiConfig(_Section):
    """Betti table computation limits."""

    model_config = SettingsConfigDict(
        env_prefix="SYZYGY_BETTI_",
        extra="ignore",
    )

    max_row: int = Field(default=4, ge=1, le=12, description="Degree ceiling j <= i + max_row")
    linear_sections: int = Field(
        default=2, ge=0, le=4, description="Generic hyperplane sections cut before Koszul homology"
    )
    max_matrix_dim: int = Field(
        default=4000, ge=10, description="Largest matrix side built for a strand or resolution step"
    )


class CurveGenConfig(_Section):
    """Random curve generation."""

    model_config = SettingsConfigDict(
        env_prefix="SYZYGY_",
        extra="ignore",
    )

    seed: int = Field(default=1, ge=0, description="Default random seed")
    max_attempts: int = Field(default=100, ge=1, le=10000, description="Reseed limit per model")
    validate_singularities: bool = Field(
        default=True, description="Check Tjurina numbers of imposed singular points"
    )
    orbit_threshold: int = Field(
        default=1000, ge=2, description="Primes below this place nodes as a Galois orbit"
    )


class LoggingConfig(_Section):
    """Logging configuration."""

    model_config = SettingsConfigDict(
        env_prefix="SYZYGY_LOG_",
        extra="ignore",
    )

    level: str = Field(default="warning", description="Log level")
    format: str = Field(default="text", description="Log format (json, text)")
    output: str = Field(default="stderr", description="Log output (stderr, stdout, file path)")


class Config(BaseSettings):
    """Main configuration."""

    model_config = SettingsConfigDict(
        env_prefix="SYZYGY_",
        extra="ignore",
    )

    field: FieldConfig = Field(default_factory=FieldConfig)
    betti: BettiConfig = Field(default_factory=BettiConfig)
    curvegen: CurveGenConfig = Field(default_factory=CurveGenConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    @classmethod
    def from_yaml(cls, path: str | Path) -> Config:
        """Load configuration from YAML file."""
        path = Path(path)
        if not path.exists():
            return cls()

        return cls._from_dict(yaml.safe_load(path.read_text(encoding="utf-8")) or {})

    @classmethod
    def _from_dict(cls, data: dict[str, Any]) -> Config:
        """Create config from dictionary."""
        return cls(
            field=FieldConfig(**data.get("field", {})),
            betti=BettiConfig(**data.get("betti", {})),
            curvegen=CurveGenConfig(**data.get("curvegen", {})),
            logging=LoggingConfig(**data.get("logging", {})),
        )

    def to_dict(self) -> dict[str, Any]:
        """Section-keyed dictionary in the YAML layout."""
        return {
            "field": self.field.model_dump(),
            "betti": self.betti.model_dump(),
            "curvegen": self.curvegen.model_dump(),
            "logging": self.logging.model_dump(),
        }


DEFAULT_CONFIG_PATHS = (
    Path("syzygy.yaml"),
    Path("configs/syzygy.yaml"),
    Path.home() / ".config" / "syzygy" / "config.yaml",
    Path("/etc/syzygy/config.yaml"),
)


def load_config(config_path: str | Path | None = None) -> Config:
    """Load configuration from file and environment.

    Priority (highest to lowest):
    1. Environment variables
    2. Config file
    3. Default values
    """
    if config_path is None:
        config_path = next((p for p in DEFAULT_CONFIG_PATHS if p.exists()), None)
    return Config() if config_path is None else Config.from_yaml(config_path)
