"""Configuration management for the coalgebra workbench."""

import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv

from .errors import WorkbenchError
from .field import FieldSpec

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
_TRUE = ("1", "true", "yes", "on")
_FALSE = ("0", "false", "no", "off")


def _int_env(name: str, default: str, minimum: int) -> int:
    raw = os.getenv(name, default)
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ValueError(f"{name} must be at least {minimum}, got {value}")
    return value


def _bool_env(name: str, default: str) -> bool:
    raw = os.getenv(name, default).strip().lower()
    if raw in _TRUE:
        return True
    if raw in _FALSE:
        return False
    raise ValueError(f"{name} must be true or false, got {raw!r}")


@dataclass
class WorkbenchConfig:
    """Configuration for the workbench CLI."""

    # Random generation
    default_field: str = "Q"
    seed: int = 0
    max_dim: int = 6

    # Selftest
    selftest_count: int = 20

    # Reports
    report_timing: bool = False

    # Resolution settings
    default_match_threshold: int = 70

    # Logging
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "WorkbenchConfig":
        """Load configuration from environment variables (and a ``.env`` file)."""
        load_dotenv()

        config = cls(
            default_field=os.getenv("WORKBENCH_DEFAULT_FIELD", "Q"),
            seed=_int_env("WORKBENCH_SEED", "0", 0),
            max_dim=_int_env("WORKBENCH_MAX_DIM", "6", 1),
            selftest_count=_int_env("WORKBENCH_SELFTEST_COUNT", "20", 1),
            report_timing=_bool_env("WORKBENCH_REPORT_TIMING", "false"),
            default_match_threshold=_int_env("WORKBENCH_MATCH_THRESHOLD", "70", 0),
            log_level=os.getenv("LOG_LEVEL", "WARNING").upper(),
        )

        if config.log_level not in _LOG_LEVELS:
            raise ValueError(f"LOG_LEVEL must be one of {', '.join(_LOG_LEVELS)}, got {config.log_level!r}")
        if config.default_match_threshold > 100:
            raise ValueError("WORKBENCH_MATCH_THRESHOLD must be between 0 and 100")
        try:
            config.field
        except WorkbenchError as exc:
            raise ValueError(f"WORKBENCH_DEFAULT_FIELD: {exc.message}")

        return config

    @property
    def field(self) -> FieldSpec:
        return FieldSpec.from_label(self.default_field)

    @property
    def logging_level(self) -> int:
        return getattr(logging, self.log_level)
