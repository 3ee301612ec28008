"""Application settings with environment, .env, and YAML layering."""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Any

import yaml
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)

_DEFAULT_CONFIG_DIR = Path.home() / ".config" / "metric-lines"


class Settings(BaseSettings):
    """Metric lines configuration.

    Resolution order (last wins):
      1. Field defaults
      2. ``.env`` file
      3. Environment variables (``METRIC_LINES_`` prefix; ``METRIC_LINES_LOG``
         for the log level)
      4. YAML overlay via :meth:`load_yaml`
    """

    model_config = SettingsConfigDict(
        env_prefix="METRIC_LINES_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        populate_by_name=True,
    )

    # ── runtime ─────────────────────────────────────────────────────────
    log_level: str = Field(
        default="WARNING",
        validation_alias="METRIC_LINES_LOG",
        description="Logging level",
    )
    jobs: int = Field(
        default_factory=lambda: os.cpu_count() or 1,
        ge=1,
        description="Sweep workers (1 = in-process)",
    )
    config_dir: Path = Field(default=_DEFAULT_CONFIG_DIR, description="Config directory")

    # ── random corpus ───────────────────────────────────────────────────
    random_count: int = Field(default=10_000, ge=1, description="Random DH graphs per sweep")
    random_seed: int = Field(default=0, description="Random corpus seed")
    random_n_min: int = Field(default=2, ge=2, description="Smallest random graph")
    random_n_max: int = Field(default=30, ge=2, description="Largest random graph")
    step_weights: tuple[float, float, float] = Field(
        default=(1.0, 1.0, 1.0),
        description="Pendant : FalseTwin : TrueTwin weights for random DH graphs",
    )

    # ── size guards ─────────────────────────────────────────────────────
    exhaustive_max_n: int = Field(default=7, ge=2, description="Labeled enumeration bound")
    classes_max_n: int = Field(default=8, ge=1, description="Isomorphism-class enumeration bound")
    two_metric_max_n: int = Field(default=6, ge=2, description="2-metric grid bound")
    bruteforce_max_n: int = Field(default=12, ge=1, description="Definitional DH check bound")
    cycle_max_n: int = Field(default=12, ge=1, description="DH1 cycle enumeration bound")

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, v: str) -> str:
        level = v.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"unknown log level {v!r}")
        return level

    @field_validator("step_weights")
    @classmethod
    def _weights_usable(cls, v: tuple[float, float, float]) -> tuple[float, float, float]:
        if any(w < 0 for w in v) or not any(v):
            raise ValueError("step weights must be non-negative and not all zero")
        return v

    # ── YAML layering ───────────────────────────────────────────────────

    @classmethod
    def load_yaml(cls, config_dir: Path | None = None) -> Settings:
        """Create Settings with YAML values merged over env defaults."""
        base = cls()

        if config_dir is None:
            config_dir = base.config_dir

        yaml_path = Path(config_dir) / "config.yaml"
        if not yaml_path.is_file():
            logger.debug("No YAML config at %s", yaml_path)
            return base

        try:
            with open(yaml_path, "r", encoding="utf-8") as fh:
                yaml_data: dict[str, Any] | None = yaml.safe_load(fh)
        except Exception:
            logger.warning("Failed to parse %s", yaml_path, exc_info=True)
            return base

        if not isinstance(yaml_data, dict) or not yaml_data:
            return base

        merged = base.model_dump()
        for key, value in yaml_data.items():
            if key in merged and value is not None:
                merged[key] = value

        return cls.model_validate(merged)

    def save_yaml(self, config_dir: Path | None = None) -> Path:
        """Persist settings to config.yaml."""
        target_dir = Path(config_dir) if config_dir else self.config_dir
        target_dir.mkdir(parents=True, exist_ok=True)
        yaml_path = target_dir / "config.yaml"

        data = self.model_dump(mode="json")

        with open(yaml_path, "w", encoding="utf-8") as fh:
            yaml.dump(data, fh, default_flow_style=False, sort_keys=False)

        logger.info("Settings saved to %s", yaml_path)
        return yaml_path
