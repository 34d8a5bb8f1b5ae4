from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

import structlog

from simplicial_verify.complex.base import BaseComplex
from simplicial_verify.complex.face import Face

logger = structlog.get_logger(__name__)


def maximal_masks(masks: Iterable[int]) -> list[int]:
    """Keep the inclusion-maximal masks (an antichain), duplicates merged."""
    ordered = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in ordered:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class SimplicialComplex(BaseComplex):
    """
    A finite simplicial complex given by its facets (an antichain).

    The empty facet set is the void complex (no faces at all); the single empty
    facet ``{∅}`` is the trivial complex. Construct through ``from_facets`` so
    the antichain invariant is enforced.
    """

    facets: frozenset[Face] = field(default_factory=frozenset)

    @classmethod
    def from_facets(cls, faces: Iterable[Face]) -> "SimplicialComplex":
        return cls(frozenset(Face.from_mask(m) for m in maximal_masks(f.mask for f in faces)))

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls(frozenset())

    @classmethod
    def trivial(cls) -> "SimplicialComplex":
        return cls(frozenset({Face()}))

    @classmethod
    def simplex(cls, face: Face) -> "SimplicialComplex":
        return cls(frozenset({face}))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @cached_property
    def maximal_faces(self) -> tuple[Face, ...]:
        return tuple(sorted(self.facets))

    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(f.mask for f in self.maximal_faces)

    @cached_property
    def face_masks(self) -> frozenset[int]:
        masks: set[int] = set()
        for m in self.facet_masks:
            sub = m
            while True:
                masks.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & m
        return frozenset(masks)

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return tuple(sorted(Face.from_mask(m) for m in self.face_masks))

    def __contains__(self, face: object) -> bool:
        return isinstance(face, Face) and face.mask in self.face_masks

    def contains_complex(self, other: "SimplicialComplex") -> bool:
        return all(f in self for f in other.facets)

    def __str__(self) -> str:
        if self.is_void:
            return "void"
        return "{" + ",".join(str(f) for f in self.maximal_faces) + "}"


@dataclass(frozen=True)
class NormalizationReport:
    """What ``build_complex`` dropped from its input."""

    duplicates: tuple[Face, ...] = ()
    dominated: tuple[Face, ...] = ()

    @property
    def changed(self) -> bool:
        return bool(self.duplicates or self.dominated)


def build_complex(
    facet_list: Iterable[Face | Iterable[int]],
) -> tuple[SimplicialComplex, NormalizationReport]:
    """
    Build a complex from a hand-typed facet list.

    Duplicates are merged and faces dominated by a larger input face are
    dropped; both are reported with a warning rather than rejected.
    """
    faces = [f if isinstance(f, Face) else Face.of(f) for f in facet_list]
    seen: set[Face] = set()
    duplicates: list[Face] = []
    for f in faces:
        if f in seen:
            duplicates.append(f)
        seen.add(f)
    complex_ = SimplicialComplex.from_facets(seen)
    dominated = sorted(seen - complex_.facets)
    report = NormalizationReport(tuple(sorted(duplicates)), tuple(dominated))
    if report.changed:
        logger.warning(
            "Facet list normalized.",
            duplicates=[str(f) for f in report.duplicates],
            dominated=[str(f) for f in report.dominated],
        )
    return complex_, report
