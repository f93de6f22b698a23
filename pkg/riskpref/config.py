"""
Configuration management using Pydantic Settings.

Environment variables (prefix RISKPREF_) take precedence over .env file.
Validates all settings at startup.
"""

from functools import lru_cache
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Kernel settings with validation.

    All settings can be overridden via environment variables.
    Example: RISKPREF_LP_MAX_ITERATIONS=5000 riskpref elicit-eu --data d.json
    """

    model_config = SettingsConfigDict(
        env_prefix="RISKPREF_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "riskpref"
    app_version: str = "0.1.0"

    # Tolerances
    structural_tolerance: float = Field(1e-12, gt=0)
    evaluator_tolerance: float = Field(1e-10, gt=0)
    grid_tolerance: float = Field(1e-9, gt=0)
    mass_sum_tolerance: float = Field(1e-9, gt=0)
    counterexample_margin: float = Field(1e-12, gt=0)

    # Linear programming
    lp_feasibility_tolerance: float = Field(1e-9, gt=0)
    lp_pivot_tolerance: float = Field(1e-11, gt=0)
    lp_max_iterations: int = Field(1_000_000, ge=1)
    reproduce_tolerance: float = Field(1e-6, gt=0)

    # Audit suites
    default_seed: int = Field(0, ge=0)
    default_trials: int = Field(100, ge=1)
    max_reported_violations: int = Field(10, ge=0)

    # Logging
    log_level: str = "WARNING"
    log_format: Literal["json", "console"] = "console"

    # Metrics
    metrics_enabled: bool = True

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Ensure log level is a known stdlib level name."""
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level: {v}")
        return level


@lru_cache()
def get_settings() -> Settings:
    """
    Cached settings instance.

    lru_cache ensures we only parse env vars once.
    """
    return Settings()


# Convenience export
settings = get_settings()
