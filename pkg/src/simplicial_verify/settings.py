from pathlib import Path

import structlog
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = structlog.get_logger(__name__)


def create_path(folder_name: str) -> Path:
    """Returns the path used for emitted certificates; created on first write."""
    return Path.cwd() / folder_name


class Settings(BaseSettings):
    """
    Process-wide settings, read from the environment (prefix
    ``SIMPLICIAL_VERIFY_``) and an optional ``.env`` file.
    Command-line flags take precedence over these values.
    """

    # Default number of worker processes for searches and CM checks
    threads: int = 1

    # Default wall-clock budget for exhaustive searches (None = unlimited)
    budget_seconds: float | None = None

    log_level: str = "WARNING"

    # Where `check` writes certificates when no --out is given
    output_path: Path = create_path("certificates")

    model_config = SettingsConfigDict(
        env_prefix="SIMPLICIAL_VERIFY_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


# Create a global settings instance
settings = Settings()
logger.debug("Settings have been initialized.", settings=settings.model_dump())
