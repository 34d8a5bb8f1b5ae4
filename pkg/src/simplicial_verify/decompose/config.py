from dataclasses import dataclass
from typing import Any

from simplicial_verify.settings import settings


@dataclass(frozen=True)
class SearchConfig:
    """Budget and parallelism for the exhaustive searches."""

    budget_seconds: float | None = None
    workers: int = 1
    # how many search nodes between two clock reads
    check_interval: int = 1024

    @staticmethod
    def load(search_config: dict[str, Any]) -> "SearchConfig":
        return SearchConfig(
            budget_seconds=search_config.get("budget_seconds", settings.budget_seconds),
            workers=search_config.get("workers", settings.threads),
            check_interval=search_config.get("check_interval", 1024),
        )
