"""
Constructibility certificates.

A d-complex is constructible if it is a simplex, or the union of two
constructible d-complexes whose intersection is a constructible
(d−1)-complex. Only verification is offered; certificates come from the user
or from a shelling.
"""

from collections.abc import Mapping, Sequence

import structlog

from simplicial_verify.complex import Face, SimplicialComplex, intersection
from simplicial_verify.decompose.schemas import CheckResult, ConstructibilityCert, ShellingOrder
from simplicial_verify.decompose.shelling import verify_shelling
from simplicial_verify.errors import MalformedCertificateError

logger = structlog.get_logger(__name__)


def _check_node(cert: ConstructibilityCert, path: str) -> str | None:
    """First violation in the subtree at ``path``, or None."""
    if cert.is_leaf:
        assert cert.simplex is not None
        if cert.left is not None or cert.right is not None or cert.intersection is not None:
            msg = f"{path}: a leaf cannot have children"
            raise MalformedCertificateError(msg)
        if cert.dimension != cert.simplex.dimension:
            return f"{path}: leaf {cert.simplex} is annotated with dimension {cert.dimension}"
        return None

    left, right, meet = cert.children
    d = cert.dimension
    if left.dimension != d or right.dimension != d:
        return f"{path}: parts have dimensions {left.dimension} and {right.dimension}, expected {d}"
    if meet.dimension != d - 1:
        return f"{path}: intersection has dimension {meet.dimension}, expected {d - 1}"
    for child, name in ((left, "left"), (right, "right"), (meet, "intersection")):
        violation = _check_node(child, f"{path}.{name}")
        if violation is not None:
            return violation
    if not left.complex.is_pure or not right.complex.is_pure:
        return f"{path}: a part is not pure"
    actual = intersection(left.complex, right.complex)
    if actual != meet.complex:
        return f"{path}: left ∩ right is {actual}, certificate claims {meet.complex}"
    return None


def verify_constructibility(
    complex_: SimplicialComplex, cert: ConstructibilityCert
) -> CheckResult[ConstructibilityCert]:
    """
    Recursively check leaf simplices, the (d, d, d−1) annotations and the
    union/intersection identities on facet sets; the root must build
    ``complex_`` exactly.
    """
    violation = _check_node(cert, "root")
    if violation is None and cert.complex != complex_:
        violation = f"root: certificate builds {cert.complex}, not the given complex"
    if violation is not None:
        logger.debug("Constructibility certificate rejected.", violation=violation)
        return CheckResult(holds=False, violation=violation)
    return CheckResult(holds=True, certificate=cert)


def _patch(top: Face, restriction: Sequence[int]) -> ConstructibilityCert:
    """
    Certificate for the complex generated by {top − v : v ∈ restriction}.

    Adding the simplex top − w to the patch of the remaining vertices meets it
    in the patch of top − w, which is again of this form.
    """
    *rest, w = restriction
    if not rest:
        return ConstructibilityCert.leaf(top.without(w))
    return ConstructibilityCert.node(
        _patch(top, rest),
        ConstructibilityCert.leaf(top.without(w)),
        _patch(top.without(w), rest),
    )


def shelling_to_constructibility(
    complex_: SimplicialComplex, shelling: ShellingOrder
) -> ConstructibilityCert:
    """
    Left-deep certificate: step j attaches F_j along the faces of F_j that do
    not contain R_j.
    """
    checked = verify_shelling(complex_, shelling.order)
    if not checked.holds or checked.certificate is None:
        msg = f"Not a shelling: {checked.violation}"
        raise MalformedCertificateError(msg)
    if checked.certificate.restrictions != shelling.restrictions:
        msg = "Shelling restriction faces do not match the facet order"
        raise MalformedCertificateError(msg)
    if not shelling.order:
        msg = "The void complex has no constructibility certificate"
        raise MalformedCertificateError(msg)

    cert = ConstructibilityCert.leaf(shelling.order[0])
    for facet, restriction in zip(shelling.order[1:], shelling.restrictions[1:], strict=True):
        cert = ConstructibilityCert.node(
            cert,
            ConstructibilityCert.leaf(facet),
            _patch(facet, restriction.vertices),
        )
    return cert


def relabel_certificate(
    cert: ConstructibilityCert, mapping: Mapping[int, int]
) -> ConstructibilityCert:
    """Apply a vertex map to every simplex of the tree."""
    if cert.is_leaf:
        assert cert.simplex is not None
        return ConstructibilityCert.leaf(Face.of(mapping[v] for v in cert.simplex))
    left, right, meet = cert.children
    return ConstructibilityCert(
        dimension=cert.dimension,
        left=relabel_certificate(left, mapping),
        right=relabel_certificate(right, mapping),
        intersection=relabel_certificate(meet, mapping),
    )
