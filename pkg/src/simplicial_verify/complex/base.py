from abc import ABC, abstractmethod
from functools import cached_property

from simplicial_verify.complex.face import Face


class BaseComplex(ABC):
    """
    Interface shared by absolute and relative simplicial complexes.

    Subclasses are immutable; every derived quantity is computed once and cached.
    """

    @property
    @abstractmethod
    def faces(self) -> tuple[Face, ...]:
        """All faces, in canonical order (dimension, then lexicographic)."""

    @property
    @abstractmethod
    def maximal_faces(self) -> tuple[Face, ...]:
        """The facets, in canonical order."""

    @abstractmethod
    def __contains__(self, face: object) -> bool:
        """Face membership."""

    @cached_property
    def dimension(self) -> int:
        """Largest face dimension; -1 when there is no face of dimension >= 0."""
        return max((f.dimension for f in self.maximal_faces), default=-1)

    @cached_property
    def is_pure(self) -> bool:
        return len({f.dimension for f in self.maximal_faces}) <= 1

    @cached_property
    def faces_by_dimension(self) -> dict[int, tuple[Face, ...]]:
        grouped: dict[int, list[Face]] = {}
        for face in self.faces:
            grouped.setdefault(face.dimension, []).append(face)
        return {dim: tuple(fs) for dim, fs in grouped.items()}

    def faces_of_dimension(self, dimension: int) -> tuple[Face, ...]:
        return self.faces_by_dimension.get(dimension, ())

    @cached_property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for f in self.maximal_faces for v in f)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)
