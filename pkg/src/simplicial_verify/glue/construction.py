"""
Identify N disjoint copies of X along a common subcomplex A.

Vertices of A keep their names; vertex v of X outside A becomes ``v_i`` in
copy i. Glued indices are dense: the vertices of A first, then each copy's
remaining vertices in turn.
"""

import structlog

from simplicial_verify.complex import Face, SimplicialComplex, VertexMap
from simplicial_verify.decompose import (
    ConstructibilityCert,
    ShellingOrder,
    relabel_certificate,
    shelling_to_constructibility,
)
from simplicial_verify.errors import NotSubcomplexError
from simplicial_verify.glue.schemas import GlueResult, GlueSpec

logger = structlog.get_logger(__name__)


def glue(spec: GlueSpec, names: VertexMap | None = None) -> GlueResult:
    """
    Build the glued complex. ``names`` gives the external labels of X's
    vertices; plain indices are used otherwise.
    """
    if not spec.x.contains_complex(spec.a):
        missing = sorted(f for f in spec.a.facets if f not in spec.x)
        msg = f"A is not a subcomplex of X: facet {missing[0]} is missing"
        raise NotSubcomplexError(msg)

    def name(v: int) -> str:
        return names.label(v) if names is not None else str(v)

    shared = sorted(spec.a.vertices)
    private = sorted(spec.x.vertices - spec.a.vertices)
    pairs: list[tuple[str, int]] = []
    provenance: dict[int, tuple[int, int]] = {}
    for v in shared:
        provenance[len(pairs)] = (0, v)
        pairs.append((name(v), len(pairs)))
    for copy in range(1, spec.copies + 1):
        for v in private:
            provenance[len(pairs)] = (copy, v)
            pairs.append((f"{name(v)}_{copy}", len(pairs)))

    index = {(owner, v): i for i, (owner, v) in provenance.items()}
    facets: set[Face] = set()
    for copy in range(1, spec.copies + 1):
        mapping = {v: index[0, v] for v in shared} | {v: index[copy, v] for v in private}
        facets.update(Face.of(mapping[v] for v in f) for f in spec.x.facets)
    glued = SimplicialComplex.from_facets(facets)
    logger.info(
        "Complex glued.",
        copies=spec.copies,
        vertices=len(pairs),
        facets=len(glued.facets),
    )
    return GlueResult(spec=spec, complex=glued, vertex_map=VertexMap(tuple(pairs)), provenance=provenance)


def glue_constructibility_certificate(
    result: GlueResult, x_shelling: ShellingOrder, a_shelling: ShellingOrder
) -> ConstructibilityCert:
    """
    copy 1 ∪ copy 2 meeting in A, then ∪ copy 3 meeting in A, and so on.

    Each copy and A get the certificate derived from their shelling. The tree
    is valid when A is induced in X and of codimension one.
    """
    spec = result.spec
    x_cert = shelling_to_constructibility(spec.x, x_shelling)
    a_cert = relabel_certificate(
        shelling_to_constructibility(spec.a, a_shelling), result.copy_map(1)
    )
    cert = relabel_certificate(x_cert, result.copy_map(1))
    for copy in range(2, spec.copies + 1):
        piece = relabel_certificate(x_cert, result.copy_map(copy))
        cert = ConstructibilityCert.node(cert, piece, a_cert)
    logger.debug("Glued certificate assembled.", copies=spec.copies)
    return cert
