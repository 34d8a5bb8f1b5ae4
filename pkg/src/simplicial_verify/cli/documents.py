"""
JSON documents read and written by the command line.

Every document carries a ``kind``. A complex document lists facets as lists
of vertex names; certificates name faces the same way, so they stay readable
next to the complex they certify. ``corpus:<name>`` is accepted wherever a
complex path is.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Annotated, Any, Literal

import structlog
from pydantic import BaseModel, Field, TypeAdapter, ValidationError

from simplicial_verify.cm import CMVerdict
from simplicial_verify.complex import (
    AnyComplex,
    BalanceCheck,
    Face,
    RelativeComplex,
    VertexMap,
    build_complex,
)
from simplicial_verify.corpus import corpus_get
from simplicial_verify.decompose import (
    ConstructibilityCert,
    Interval,
    Partitioning,
    SearchReport,
    ShellingOrder,
)
from simplicial_verify.errors import DocumentParseError, MalformedCertificateError
from simplicial_verify.homology import HomologyProfile
from simplicial_verify.utils import load_json, save_json

logger = structlog.get_logger(__name__)

CORPUS_PREFIX = "corpus:"

Names = list[str]


class ComplexDocument(BaseModel):
    """A simplicial complex, or a relative complex when ``removed_facets`` is set."""

    kind: Literal["complex"] = "complex"
    description: str | None = None
    vertices: Names | None = Field(default=None, description="Vertex names, in index order")
    facets: list[Names]
    removed_facets: list[Names] | None = None
    # glued complexes: vertex name -> [copy, original vertex]; copy 0 is shared
    provenance: dict[str, list[int]] | None = None

    def vertex_map(self) -> VertexMap:
        if self.vertices is not None:
            return VertexMap.from_labels(self.vertices)
        seen: dict[str, None] = {}
        for facet in [*self.facets, *(self.removed_facets or [])]:
            for name in facet:
                seen.setdefault(name, None)
        return VertexMap.from_labels(list(seen))

    def to_complex(self) -> tuple[AnyComplex, VertexMap]:
        names = self.vertex_map()
        for facet in [*self.facets, *(self.removed_facets or [])]:
            for name in facet:
                if not names.has_label(name):
                    msg = f"Facet {facet} uses undeclared vertex {name!r}"
                    raise DocumentParseError(msg)
        closure, _ = build_complex(names.face(f) for f in self.facets)
        if self.removed_facets is None:
            return closure, names
        removed, _ = build_complex(names.face(f) for f in self.removed_facets)
        return RelativeComplex(closure, removed), names

    @classmethod
    def from_complex(
        cls,
        complex_: AnyComplex,
        names: VertexMap | None = None,
        *,
        description: str | None = None,
        provenance: dict[int, tuple[int, int]] | None = None,
    ) -> "ComplexDocument":
        closure = complex_.closure if isinstance(complex_, RelativeComplex) else complex_
        names = names or VertexMap.identity(closure.vertices)
        return cls(
            description=description,
            vertices=names.labels,
            facets=[names.names(f) for f in closure.maximal_faces],
            removed_facets=(
                [names.names(f) for f in complex_.removed.maximal_faces]
                if isinstance(complex_, RelativeComplex)
                else None
            ),
            provenance=(
                {names.label(i): [copy, v] for i, (copy, v) in sorted(provenance.items())}
                if provenance is not None
                else None
            ),
        )


class IntervalModel(BaseModel):
    bottom: Names
    top: Names


class PartitioningDocument(BaseModel):
    kind: Literal["partitioning"] = "partitioning"
    intervals: list[IntervalModel]


class ShellingDocument(BaseModel):
    kind: Literal["shelling"] = "shelling"
    order: list[Names]
    restrictions: list[Names]


class RejectedOrderDocument(BaseModel):
    """A facet order that fails as a shelling; it refutes this order only."""

    kind: Literal["rejected-order"] = "rejected-order"
    order: list[Names]
    violation: str


class TreeModel(BaseModel):
    dimension: int
    simplex: Names | None = None
    left: "TreeModel | None" = None
    right: "TreeModel | None" = None
    intersection: "TreeModel | None" = None


class ConstructibilityDocument(BaseModel):
    kind: Literal["constructibility"] = "constructibility"
    tree: TreeModel


class SearchReportDocument(BaseModel):
    """Outcome of a search that found nothing, or ran out of budget."""

    kind: Literal["search-report"] = "search-report"
    check: str
    result: Literal["SAT", "UNSAT", "UNKNOWN"]
    nodes_explored: int
    options_generated: int
    wall_time: float
    exhausted: bool


class WitnessModel(BaseModel):
    face: Names
    degree: int
    group: str


class CMVerdictDocument(BaseModel):
    kind: Literal["cm-verdict"] = "cm-verdict"
    holds: bool
    faces_checked: int
    witness: WitnessModel | None = None


class ColoringDocument(BaseModel):
    kind: Literal["coloring"] = "coloring"
    holds: bool
    coloring: dict[str, int] | None = None


class GroupModel(BaseModel):
    dimension: int
    betti: int
    torsion: list[int]


class HomologyDocument(BaseModel):
    kind: Literal["homology"] = "homology"
    groups: list[GroupModel]


CertificateDocument = Annotated[
    PartitioningDocument
    | ShellingDocument
    | RejectedOrderDocument
    | ConstructibilityDocument
    | SearchReportDocument
    | CMVerdictDocument
    | ColoringDocument
    | HomologyDocument,
    Field(discriminator="kind"),
]

_certificate_adapter: TypeAdapter[Any] = TypeAdapter(CertificateDocument)


def _validation_error(source: str, error: ValidationError) -> DocumentParseError:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first["loc"]) or "<root>"
    msg = f"{source}: {location}: {first['msg']}"
    return DocumentParseError(msg)


@dataclass(frozen=True)
class LoadedComplex:
    """A complex with the names it was read with."""

    complex: AnyComplex
    names: VertexMap
    source: str
    provenance: dict[int, tuple[int, int]] | None = None
    description: str | None = None


def load_complex(source: str) -> LoadedComplex:
    """Read a complex file, or a ``corpus:<name>`` reference."""
    if source.startswith(CORPUS_PREFIX):
        return corpus_complex(source.removeprefix(CORPUS_PREFIX))
    raw = load_json(Path(source))
    try:
        document = ComplexDocument.model_validate(raw)
    except ValidationError as e:
        raise _validation_error(source, e) from e
    complex_, names = document.to_complex()
    provenance = None
    if document.provenance is not None:
        provenance = {names.index(label): (p[0], p[1]) for label, p in document.provenance.items()}
    logger.debug("Complex loaded.", source=source, facets=len(complex_.maximal_faces))
    return LoadedComplex(complex_, names, source, provenance, document.description)


def corpus_complex(name: str) -> LoadedComplex:
    entry = corpus_get(name)
    if entry.glued is not None:
        glued = entry.glued
        return LoadedComplex(
            glued.complex, glued.vertex_map, CORPUS_PREFIX + name, glued.provenance, entry.description
        )
    complex_ = entry.complex
    if complex_ is None:
        msg = f"Corpus entry {name!r} is a {entry.kind}, not a complex"
        raise DocumentParseError(msg)
    closure = complex_.closure if isinstance(complex_, RelativeComplex) else complex_
    return LoadedComplex(
        complex_, VertexMap.identity(closure.vertices), CORPUS_PREFIX + name, None, entry.description
    )


def save_complex(loaded: LoadedComplex, path: Path) -> None:
    document = ComplexDocument.from_complex(
        loaded.complex,
        loaded.names,
        description=loaded.description,
        provenance=loaded.provenance,
    )
    save_json(document.model_dump(exclude_none=True), path)


def load_certificate(path: Path) -> BaseModel:
    raw = load_json(path)
    try:
        return _certificate_adapter.validate_python(raw)
    except ValidationError as e:
        raise _validation_error(str(path), e) from e


def save_document(document: BaseModel, path: Path) -> None:
    save_json(document.model_dump(exclude_none=True), path)


# Conversions between certificates and documents; faces are written with the
# complex's own vertex names.


def partitioning_document(partitioning: Partitioning, names: VertexMap) -> PartitioningDocument:
    return PartitioningDocument(
        intervals=[
            IntervalModel(bottom=names.names(i.bottom), top=names.names(i.top))
            for i in partitioning.intervals
        ]
    )


def partitioning_from_document(document: PartitioningDocument, names: VertexMap) -> Partitioning:
    return Partitioning(
        tuple(Interval(names.face(i.bottom), names.face(i.top)) for i in document.intervals)
    )


def shelling_document(shelling: ShellingOrder, names: VertexMap) -> ShellingDocument:
    return ShellingDocument(
        order=[names.names(f) for f in shelling.order],
        restrictions=[names.names(r) for r in shelling.restrictions],
    )


def shelling_from_document(document: ShellingDocument, names: VertexMap) -> ShellingOrder:
    if len(document.order) != len(document.restrictions):
        msg = "Shelling lists a different number of facets and restriction faces"
        raise MalformedCertificateError(msg)
    return ShellingOrder(
        tuple(names.face(f) for f in document.order),
        tuple(names.face(r) for r in document.restrictions),
    )


def _tree(cert: ConstructibilityCert, names: VertexMap) -> TreeModel:
    if cert.is_leaf:
        assert cert.simplex is not None
        return TreeModel(dimension=cert.dimension, simplex=names.names(cert.simplex))
    left, right, meet = cert.children
    return TreeModel(
        dimension=cert.dimension,
        left=_tree(left, names),
        right=_tree(right, names),
        intersection=_tree(meet, names),
    )


def constructibility_document(
    cert: ConstructibilityCert, names: VertexMap
) -> ConstructibilityDocument:
    return ConstructibilityDocument(tree=_tree(cert, names))


def _cert(tree: TreeModel, names: VertexMap) -> ConstructibilityCert:
    return ConstructibilityCert(
        dimension=tree.dimension,
        simplex=names.face(tree.simplex) if tree.simplex is not None else None,
        left=_cert(tree.left, names) if tree.left is not None else None,
        right=_cert(tree.right, names) if tree.right is not None else None,
        intersection=_cert(tree.intersection, names) if tree.intersection is not None else None,
    )


def constructibility_from_document(
    document: ConstructibilityDocument, names: VertexMap
) -> ConstructibilityCert:
    return _cert(document.tree, names)


def search_report_document(check: str, report: SearchReport) -> SearchReportDocument:
    return SearchReportDocument(
        check=check,
        result=report.result.value,
        nodes_explored=report.nodes_explored,
        options_generated=report.options_generated,
        wall_time=report.wall_time,
        exhausted=report.exhausted,
    )


def cm_document(verdict: CMVerdict, names: VertexMap) -> CMVerdictDocument:
    witness = None
    if verdict.witness is not None:
        witness = WitnessModel(
            face=names.names(verdict.witness.face),
            degree=verdict.witness.degree,
            group=str(verdict.witness.group),
        )
    return CMVerdictDocument(holds=verdict.holds, faces_checked=verdict.faces_checked, witness=witness)


def coloring_document(check: BalanceCheck, names: VertexMap) -> ColoringDocument:
    coloring = None
    if check.coloring is not None:
        coloring = {names.label(v): c for v, c in sorted(check.coloring.items())}
    return ColoringDocument(holds=check.holds, coloring=coloring)


def homology_document(profile: HomologyProfile) -> HomologyDocument:
    return HomologyDocument(
        groups=[
            GroupModel(dimension=g.dimension, betti=g.betti, torsion=list(g.torsion))
            for g in profile.groups
        ]
    )


def face_names(face: Face, names: VertexMap) -> str:
    return " ".join(names.names(face)) if len(face) else "∅"
