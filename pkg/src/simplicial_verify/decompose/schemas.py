"""
Certificates and search reports for partitionability, shellability and
constructibility.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Generic, TypeVar

from simplicial_verify.complex import Face, SimplicialComplex, intersection, union
from simplicial_verify.errors import MalformedCertificateError

T = TypeVar("T")


@dataclass(frozen=True)
class Interval:
    """The Boolean interval [R, F] = {σ : R ⊆ σ ⊆ F}."""

    bottom: Face
    top: Face

    def __post_init__(self) -> None:
        if not self.bottom.issubset(self.top):
            msg = f"Interval bottom {self.bottom} is not contained in top {self.top}"
            raise MalformedCertificateError(msg)

    def faces(self) -> list[Face]:
        free = self.top.difference(self.bottom)
        return sorted(self.bottom.union(s) for s in free.subsets())

    def __str__(self) -> str:
        return f"[{self.bottom},{self.top}]"


@dataclass(frozen=True)
class Partitioning:
    """One interval per facet; tops are the facets."""

    intervals: tuple[Interval, ...]

    @property
    def restrictions(self) -> tuple[Face, ...]:
        return tuple(i.bottom for i in self.intervals)

    @property
    def tops(self) -> tuple[Face, ...]:
        return tuple(i.top for i in self.intervals)

    def __str__(self) -> str:
        return " ∪ ".join(str(i) for i in self.intervals)


@dataclass(frozen=True)
class ShellingOrder:
    """A facet order with its restriction faces R_j."""

    order: tuple[Face, ...]
    restrictions: tuple[Face, ...]

    def intervals(self) -> tuple[Interval, ...]:
        return tuple(Interval(r, f) for r, f in zip(self.restrictions, self.order, strict=True))


@dataclass(frozen=True)
class ConstructibilityCert:
    """
    A constructibility tree.

    A leaf claims that its complex is the simplex ``simplex``; an inner node
    claims its complex is left ∪ right with left ∩ right described by
    ``intersection``. ``dimension`` annotates every node (d, d, d-1 below a node
    of dimension d).
    """

    dimension: int
    simplex: Face | None = None
    left: "ConstructibilityCert | None" = None
    right: "ConstructibilityCert | None" = None
    intersection: "ConstructibilityCert | None" = None

    @classmethod
    def leaf(cls, simplex: Face) -> "ConstructibilityCert":
        return cls(dimension=simplex.dimension, simplex=simplex)

    @classmethod
    def node(
        cls,
        left: "ConstructibilityCert",
        right: "ConstructibilityCert",
        meet: "ConstructibilityCert",
    ) -> "ConstructibilityCert":
        return cls(dimension=left.dimension, left=left, right=right, intersection=meet)

    @property
    def is_leaf(self) -> bool:
        return self.simplex is not None

    @property
    def children(self) -> tuple["ConstructibilityCert", "ConstructibilityCert", "ConstructibilityCert"]:
        if self.left is None or self.right is None or self.intersection is None:
            msg = "Constructibility node is missing a child"
            raise MalformedCertificateError(msg)
        return self.left, self.right, self.intersection

    @cached_property
    def complex(self) -> SimplicialComplex:
        """The complex this (sub)tree claims to build."""
        if self.is_leaf:
            assert self.simplex is not None
            return SimplicialComplex.simplex(self.simplex)
        left, right, _ = self.children
        return union(left.complex, right.complex)

    @cached_property
    def meet(self) -> SimplicialComplex:
        left, right, _ = self.children
        return intersection(left.complex, right.complex)

    @property
    def internal_nodes(self) -> int:
        """Union steps building this complex; intersection subtrees are not counted."""
        if self.is_leaf:
            return 0
        left, right, _ = self.children
        return 1 + left.internal_nodes + right.internal_nodes


class SearchResult(str, Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class SearchReport:
    """
    Outcome statistics of an exhaustive search.

    UNSAT is only ever reported after the whole tree was explored; a search
    stopped by its budget raises instead.
    """

    result: SearchResult
    nodes_explored: int
    options_generated: int
    wall_time: float
    exhausted: bool = True


@dataclass(frozen=True)
class SearchOutcome(Generic[T]):
    certificate: T | None
    report: SearchReport

    @property
    def found(self) -> bool:
        return self.certificate is not None


@dataclass(frozen=True)
class CheckResult(Generic[T]):
    """A verifier verdict; ``violation`` names the first problem when refuted."""

    holds: bool
    violation: str | None = None
    certificate: T | None = None
