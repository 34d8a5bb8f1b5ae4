import pytest
import structlog

from simplicial_verify.complex import Face, SimplicialComplex
from simplicial_verify.corpus import complex_from_strings, corpus_get
from simplicial_verify.corpus.data import A, B, QBAR
from simplicial_verify.decompose import (
    ConstructibilityCert,
    ShellingOrder,
    relabel_certificate,
    shelling_to_constructibility,
    verify_constructibility,
    verify_shelling,
)
from simplicial_verify.errors import MalformedCertificateError
from simplicial_verify.glue import glue_constructibility_certificate

logger = structlog.get_logger(__name__)

leaf = ConstructibilityCert.leaf
node = ConstructibilityCert.node


def _shelling(complex_: SimplicialComplex, order: tuple[str, ...]) -> ShellingOrder:
    shelling = verify_shelling(complex_, [Face.parse(s) for s in order]).certificate
    assert shelling is not None
    return shelling


def test_two_triangles() -> None:
    complex_ = complex_from_strings(["012", "123"])
    cert = node(leaf(Face.parse("012")), leaf(Face.parse("123")), leaf(Face.parse("12")))
    result = verify_constructibility(complex_, cert)
    assert result.holds
    assert cert.internal_nodes == 1


@pytest.mark.parametrize(("name", "order"), [("A", A), ("B", B), ("Qbar", QBAR)])
def test_certificates_from_shellings(name: str, order: tuple[str, ...]) -> None:
    complex_ = corpus_get(name).complex
    assert isinstance(complex_, SimplicialComplex)
    cert = shelling_to_constructibility(complex_, _shelling(complex_, order))
    result = verify_constructibility(complex_, cert)
    assert result.holds, result.violation
    # one union step per facet after the first
    assert cert.internal_nodes == len(order) - 1


def test_qbar_takes_thirteen_union_steps(qbar: SimplicialComplex) -> None:
    cert = shelling_to_constructibility(qbar, _shelling(qbar, QBAR))
    assert cert.internal_nodes == 13


def test_three_glued_copies_are_constructible(qbar: SimplicialComplex, a: SimplicialComplex) -> None:
    entry = corpus_get("C3")
    assert entry.glued is not None
    cert = glue_constructibility_certificate(entry.glued, _shelling(qbar, QBAR), _shelling(a, A))
    result = verify_constructibility(entry.glued.complex, cert)
    assert result.holds, result.violation
    assert cert.complex == entry.glued.complex
    logger.info("Glued certificate verified.", union_steps=cert.internal_nodes)


def test_wrong_intersection_is_rejected() -> None:
    complex_ = complex_from_strings(["012", "123"])
    cert = node(leaf(Face.parse("012")), leaf(Face.parse("123")), leaf(Face.parse("13")))
    result = verify_constructibility(complex_, cert)
    assert not result.holds
    assert result.violation == "root: left ∩ right is {12}, certificate claims {13}"


def test_wrong_dimension_annotation_is_rejected() -> None:
    complex_ = complex_from_strings(["012", "123"])
    cert = node(leaf(Face.parse("012")), leaf(Face.parse("123")), leaf(Face.parse("1")))
    result = verify_constructibility(complex_, cert)
    assert not result.holds
    assert result.violation == "root: intersection has dimension 0, expected 1"


def test_triangles_meeting_in_a_vertex_are_rejected() -> None:
    complex_ = complex_from_strings(["012", "234"])
    cert = node(leaf(Face.parse("012")), leaf(Face.parse("234")), leaf(Face.parse("2")))
    assert not verify_constructibility(complex_, cert).holds


def test_root_must_build_the_complex() -> None:
    complex_ = complex_from_strings(["012", "123", "234"])
    cert = node(leaf(Face.parse("012")), leaf(Face.parse("123")), leaf(Face.parse("12")))
    result = verify_constructibility(complex_, cert)
    assert not result.holds
    assert result.violation is not None
    assert result.violation.startswith("root: certificate builds")


def test_malformed_trees_raise() -> None:
    complex_ = complex_from_strings(["012", "123"])
    missing = ConstructibilityCert(dimension=2, left=leaf(Face.parse("012")))
    with pytest.raises(MalformedCertificateError):
        verify_constructibility(complex_, missing)

    leaf_with_child = ConstructibilityCert(
        dimension=2, simplex=Face.parse("012"), left=leaf(Face.parse("123"))
    )
    with pytest.raises(MalformedCertificateError):
        verify_constructibility(complex_, leaf_with_child)


def test_shelling_must_be_valid(a: SimplicialComplex) -> None:
    bad = ShellingOrder(
        tuple(Face.parse(s) for s in ("026", "347", "023", "234", "478")),
        (Face(),) * 5,
    )
    with pytest.raises(MalformedCertificateError):
        shelling_to_constructibility(a, bad)


def test_relabel_certificate() -> None:
    cert = node(leaf(Face.parse("012")), leaf(Face.parse("123")), leaf(Face.parse("12")))
    moved = relabel_certificate(cert, {0: 5, 1: 6, 2: 7, 3: 8})
    assert moved.complex == complex_from_strings(["567", "678"])
    assert verify_constructibility(moved.complex, moved).holds
