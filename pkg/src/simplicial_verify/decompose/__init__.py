from .base import BaseSearch, SearchClock
from .config import SearchConfig
from .constructible import (
    relabel_certificate,
    shelling_to_constructibility,
    verify_constructibility,
)
from .exact_cover import ExactCoverSolver
from .partition import (
    CoverProblem,
    PartitionSearch,
    find_partitioning,
    partition_problem,
    partitioning_from_shelling,
    verify_partitioning,
)
from .restrictions import h_from_restrictions
from .schemas import (
    CheckResult,
    ConstructibilityCert,
    Interval,
    Partitioning,
    SearchOutcome,
    SearchReport,
    SearchResult,
    ShellingOrder,
)
from .shelling import ShellingSearch, find_shelling, verify_shelling

__all__ = [
    "BaseSearch",
    "CheckResult",
    "ConstructibilityCert",
    "CoverProblem",
    "ExactCoverSolver",
    "Interval",
    "PartitionSearch",
    "Partitioning",
    "SearchClock",
    "SearchConfig",
    "SearchOutcome",
    "SearchReport",
    "SearchResult",
    "ShellingOrder",
    "ShellingSearch",
    "find_partitioning",
    "find_shelling",
    "h_from_restrictions",
    "partition_problem",
    "partitioning_from_shelling",
    "relabel_certificate",
    "shelling_to_constructibility",
    "verify_constructibility",
    "verify_partitioning",
    "verify_shelling",
]
