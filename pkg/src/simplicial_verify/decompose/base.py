import time
from abc import ABC, abstractmethod
from typing import Any, Generic, Protocol, TypeVar

import structlog

from simplicial_verify.decompose.config import SearchConfig
from simplicial_verify.decompose.schemas import SearchOutcome, SearchReport, SearchResult
from simplicial_verify.errors import SearchBudgetExceededError, SearchCancelledError

logger = structlog.get_logger(__name__)

T = TypeVar("T")


class CancelFlag(Protocol):
    def is_set(self) -> bool: ...


class SearchClock:
    """
    Node counter with a wall-clock deadline and an optional cancel flag, both
    read every ``interval`` nodes.
    """

    def __init__(
        self, deadline: float | None, interval: int = 1024, cancel: CancelFlag | None = None
    ) -> None:
        self.deadline = deadline
        self.interval = interval
        self.cancel = cancel
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes % self.interval:
            return
        if self.cancel is not None and self.cancel.is_set():
            msg = f"Search cancelled after {self.nodes} nodes"
            raise SearchCancelledError(msg)
        if self.deadline is not None and time.monotonic() > self.deadline:
            msg = f"Search budget exhausted after {self.nodes} nodes"
            raise SearchBudgetExceededError(msg, report=None)


class BaseSearch(ABC, Generic[T]):
    """
    An exhaustive, deterministic search that either returns a certificate or
    proves that none exists.
    """

    name: str = "search"

    def __init__(self, config: SearchConfig | None = None) -> None:
        self.config = config or SearchConfig()
        self.logger = logger.bind(search=self.name)

    def deadline(self, started: float) -> float | None:
        if self.config.budget_seconds is None:
            return None
        return started + self.config.budget_seconds

    @abstractmethod
    def run(self, complex_: Any) -> SearchOutcome[T]:
        """Search the complex; raise SearchBudgetExceededError on overrun."""

    def _outcome(
        self,
        certificate: T | None,
        nodes: int,
        options: int,
        started: float,
    ) -> SearchOutcome[T]:
        report = SearchReport(
            result=SearchResult.SAT if certificate is not None else SearchResult.UNSAT,
            nodes_explored=nodes,
            options_generated=options,
            wall_time=time.monotonic() - started,
        )
        self.logger.info(
            "Search finished.",
            result=report.result.value,
            nodes=nodes,
            options=options,
            seconds=round(report.wall_time, 3),
        )
        return SearchOutcome(certificate, report)

    def _budget_error(
        self, error: SearchBudgetExceededError, nodes: int, options: int, started: float
    ) -> SearchBudgetExceededError:
        report = SearchReport(
            result=SearchResult.UNKNOWN,
            nodes_explored=nodes,
            options_generated=options,
            wall_time=time.monotonic() - started,
            exhausted=False,
        )
        self.logger.warning("Search budget exceeded.", nodes=nodes, budget=self.config.budget_seconds)
        return SearchBudgetExceededError(str(error), report=report)
