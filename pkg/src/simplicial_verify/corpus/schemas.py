"""
Schema classes for corpus entries and their expected properties.
"""

from dataclasses import dataclass, field
from functools import cached_property

from simplicial_verify.complex import (
    AnyComplex,
    RelativeComplex,
    SimplicialComplex,
    VertexPermutation,
)
from simplicial_verify.glue import GlueResult, GlueSpec, glue

CorpusObject = SimplicialComplex | RelativeComplex | GlueSpec | VertexPermutation


@dataclass(frozen=True)
class Expectation:
    """
    Expected properties of a corpus object; ``None`` means "not asserted".

    Faces are written in compact digit form. ``slow`` names the checks that a
    quick run skips, ``budgets`` caps the exhaustive searches in seconds.
    """

    n_vertices: int | None = None
    n_facets: int | None = None
    dimension: int | None = None
    f: tuple[int, ...] | None = None
    h: tuple[int, ...] | None = None
    cohen_macaulay: bool | None = None
    cm_witness: str | None = None
    partitionable: bool | None = None
    partitioning: tuple[tuple[str, str], ...] | None = None
    shellable: bool | None = None
    shelling_order: tuple[str, ...] | None = None
    constructible: bool | None = None
    balanced: bool | None = None
    homology: str | None = None
    minimal_faces: tuple[str, ...] | None = None
    same_faces_as: str | None = None
    induced_in: str | None = None
    automorphism_of: tuple[str, ...] = ()
    fixes: tuple[str, ...] = ()
    face_images: tuple[tuple[str, str], ...] = ()
    slow: frozenset[str] = field(default_factory=frozenset)
    budgets: tuple[tuple[str, float], ...] = ()
    notes: tuple[str, ...] = ()

    def budget(self, check: str) -> float | None:
        return dict(self.budgets).get(check)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    object: CorpusObject
    expected: Expectation
    description: str
    citation: str

    @cached_property
    def glued(self) -> GlueResult | None:
        return glue(self.object) if isinstance(self.object, GlueSpec) else None

    @property
    def complex(self) -> AnyComplex | None:
        """The complex this entry denotes; None for a permutation."""
        if self.glued is not None:
            return self.glued.complex
        if isinstance(self.object, VertexPermutation):
            return None
        return self.object

    @property
    def kind(self) -> str:
        match self.object:
            case GlueSpec():
                return "glued"
            case RelativeComplex():
                return "relative"
            case VertexPermutation():
                return "permutation"
            case _:
                return "complex"
