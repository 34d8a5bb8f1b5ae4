from dataclasses import dataclass
from typing import Any

from simplicial_verify.settings import settings


@dataclass(frozen=True)
class CMConfig:
    """Tunables for the Reisner-criterion check."""

    stop_at_first: bool = True
    workers: int = 1

    @staticmethod
    def load(cm_config: dict[str, Any]) -> "CMConfig":
        return CMConfig(
            stop_at_first=cm_config.get("stop_at_first", True),
            workers=cm_config.get("workers", settings.threads),
        )
