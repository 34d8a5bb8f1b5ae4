from dataclasses import dataclass
from functools import cached_property

from simplicial_verify.complex.base import BaseComplex
from simplicial_verify.complex.face import Face
from simplicial_verify.complex.simplicial import SimplicialComplex
from simplicial_verify.errors import NotSubcomplexError


@dataclass(frozen=True)
class RelativeComplex(BaseComplex):
    """
    A relative complex presented as a pair (Δ, Γ) with face set Δ∖Γ.

    The pair is kept as given; ``canonical()`` computes the minimal presentation
    (combinatorial closure, closure∖Φ) on demand.
    """

    closure: SimplicialComplex
    removed: SimplicialComplex

    def __post_init__(self) -> None:
        if not self.closure.contains_complex(self.removed):
            missing = sorted(f for f in self.removed.facets if f not in self.closure)
            msg = f"Removed complex is not a subcomplex: facet {missing[0]} is missing"
            raise NotSubcomplexError(msg)

    @cached_property
    def face_masks(self) -> frozenset[int]:
        return self.closure.face_masks - self.removed.face_masks

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return tuple(f for f in self.closure.faces if f.mask not in self.removed.face_masks)

    @cached_property
    def maximal_faces(self) -> tuple[Face, ...]:
        return tuple(f for f in self.closure.maximal_faces if f not in self.removed)

    @property
    def facets(self) -> frozenset[Face]:
        return frozenset(self.maximal_faces)

    def __contains__(self, face: object) -> bool:
        return isinstance(face, Face) and face.mask in self.face_masks

    @property
    def is_void(self) -> bool:
        return not self.face_masks

    def canonical(self) -> "RelativeComplex":
        """The minimal presentation: closure of Φ paired with closure∖Φ."""
        from simplicial_verify.complex.operations import combinatorial_closure

        closure, removed = combinatorial_closure(self)
        return RelativeComplex(closure, removed)

    def __str__(self) -> str:
        return f"({self.closure}, {self.removed})"
