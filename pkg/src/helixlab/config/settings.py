"""Application settings using Pydantic Settings."""

from functools import lru_cache
from typing import Literal

from pydantic import Field, PositiveFloat, PositiveInt
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="HELIXLAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",  # Ignore extra environment variables
    )

    # Reproducibility
    seed: int | None = Field(
        default=None,
        description="RNG seed; when set it overrides the --seed command-line option",
    )

    # Sampling and tolerances
    samples: PositiveInt = Field(default=100, description="Default number of sample points per check")
    fd_step: PositiveFloat = Field(default=1e-5, description="Finite-difference step (scaled by coordinate magnitude)")
    eq_tol: PositiveFloat = Field(default=1e-7, description="Equality tolerance")
    residual_tol: PositiveFloat = Field(default=1e-6, description="Geometric residual tolerance")
    minimality_tol: PositiveFloat = Field(default=1e-6, description="Threshold on max ‖H‖ for minimality")

    # Error Handling Configuration
    error_handling: Literal["strict", "lenient"] = Field(
        default="lenient",
        description="Error handling mode: strict (abort on first suite error), lenient (record and continue)",
    )

    # Report Configuration
    report_version: str = Field(default="1", description="Report schema version")

    # Logging Configuration
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        default="WARNING",
        description="Logging level",
    )
    log_file: str | None = Field(
        default=None,
        description="Log file path (logs to stderr only if not set)",
    )
    log_max_bytes: int = Field(
        default=10 * 1024 * 1024,  # 10 MB
        description="Maximum log file size before rotation",
    )
    log_backup_count: int = Field(
        default=5,
        description="Number of backup log files to keep",
    )


@lru_cache
def get_settings() -> Settings:
    """Get cached application settings."""
    return Settings()
