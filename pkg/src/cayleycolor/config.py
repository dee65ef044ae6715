"""Configuration management using pydantic-settings."""

from pathlib import Path

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from .utils.logging import LogLevel

# Later env files take priority: a project .env overrides the user-level one.
_USER_ENV_PATH = Path.home() / ".cayleycolor" / ".env"


class Settings(BaseSettings):
    """Search budgets and output locations, overridable via CAYLEYCOLOR_* variables."""

    model_config = SettingsConfigDict(
        env_prefix="CAYLEYCOLOR_",
        env_file=(str(_USER_ENV_PATH), ".env"),
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Group enumeration (n! elements for S_n)
    max_group_degree: int = 8

    # Exact oracles
    oracle_node_budget: int = 2_000_000
    oracle_time_budget: float = 120.0  # seconds, checked cooperatively
    oracle_max_elements: int = 2500  # vertices + edges of a materialized total graph

    # Constructive searches and repairs
    search_node_budget: int = 1_000_000
    repair_iterations: int = 200_000
    seed: int = 0

    # Output
    output_dir: Path = Path("artifacts")
    log_file: Path | None = None
    log_level: LogLevel = "INFO"

    @field_validator(
        "max_group_degree",
        "oracle_node_budget",
        "oracle_max_elements",
        "search_node_budget",
        "repair_iterations",
    )
    @classmethod
    def _positive_budget(cls, v: int) -> int:
        if v <= 0:
            raise ValueError("budgets must be positive")
        return v

    @field_validator("oracle_time_budget")
    @classmethod
    def _positive_time(cls, v: float) -> float:
        if v <= 0:
            raise ValueError("time budget must be positive")
        return v

    def ensure_output_dir(self, path: Path | None = None) -> Path:
        """Create (if needed) and return the artifact directory."""
        target = path or self.output_dir
        target.mkdir(parents=True, exist_ok=True)
        return target


# Global settings instance
settings = Settings()


def get_user_env_path() -> Path:
    """Path to the user-level .env file (~/.cayleycolor/.env)."""
    return _USER_ENV_PATH
