"""
WHQ Engine - Settings Configuration

Manages configuration using environment variables and pydantic-settings.
"""
import os
from pathlib import Path
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Engine settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        populate_by_name=True,
    )

    # Parallelism of identity suites (unset = all cores)
    threads: Optional[int] = Field(default=None, alias="WHQ_THREADS")

    # Default field for bundled examples: "rational" or a prime such as "7"
    default_field: str = Field(default="rational", alias="WHQ_FIELD")

    # Paths
    examples_config: str = Field(default="config/examples.yaml", alias="WHQ_EXAMPLES_CONFIG")

    # Logging
    log_level: str = Field(default="WARNING", alias="WHQ_LOG_LEVEL")

    @field_validator("threads")
    @classmethod
    def validate_threads(cls, v: Optional[int]) -> Optional[int]:
        """Thread cap must be positive when given."""
        if v is not None and v < 1:
            raise ValueError(f"WHQ_THREADS must be at least 1, got {v}")
        return v

    @property
    def base_dir(self) -> Path:
        """Get the base directory of the project."""
        return Path(__file__).parent.parent

    @property
    def examples_config_path(self) -> Path:
        """Get absolute path to the bundled example catalog."""
        path = Path(self.examples_config)
        if not path.is_absolute():
            path = self.base_dir / path
        return path.resolve()

    @property
    def max_workers(self) -> int:
        """Worker count for identity fan-out."""
        return self.threads or os.cpu_count() or 1


# Global settings instance
settings = Settings()
