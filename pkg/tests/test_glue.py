import pytest
import structlog

from simplicial_verify.complex import (
    Face,
    RelativeComplex,
    SimplicialComplex,
    VertexMap,
    VertexPermutation,
    f_vector,
    is_automorphism,
    relabel,
    ridge_degrees,
)
from simplicial_verify.corpus import complex_from_strings
from simplicial_verify.errors import GlueSpecError, NotSubcomplexError, SimplicialVerifyError
from simplicial_verify.glue import GlueSpec, check_glue_hypotheses, glue

logger = structlog.get_logger(__name__)


@pytest.mark.parametrize(
    ("copies", "expected"),
    [
        (2, (1, 13, 51, 67, 28)),
        (3, (1, 16, 71, 98, 42)),
        (25, (1, 82, 511, 780, 350)),
    ],
)
def test_face_counts(
    qbar: SimplicialComplex,
    a: SimplicialComplex,
    q: RelativeComplex,
    copies: int,
    expected: tuple[int, ...],
) -> None:
    result = glue(GlueSpec(qbar, a, copies))
    f = f_vector(result.complex)
    assert f.entries == expected
    # N copies of X minus N-1 extra copies of A
    assert f == f_vector(qbar).scaled(copies) - f_vector(a).scaled(copies - 1)
    assert f == f_vector(a) + f_vector(q).scaled(copies)
    assert len(result.vertex_map) == result.complex.n_vertices


def test_one_copy_is_x(qbar: SimplicialComplex, a: SimplicialComplex) -> None:
    result = glue(GlueSpec(qbar, a, 1))
    assert relabel(qbar, result.copy_map(1)) == result.complex


def test_vertex_names_and_provenance(qbar: SimplicialComplex, a: SimplicialComplex) -> None:
    result = glue(GlueSpec(qbar, a, 3))
    # A's seven vertices come first and keep their names
    assert result.vertex_map.labels[:7] == ["0", "2", "3", "4", "6", "7", "8"]
    assert result.vertex_map.labels[7:10] == ["1_1", "5_1", "9_1"]
    assert result.vertex_map.labels[-1] == "9_3"
    assert result.provenance[0] == (0, 0)
    assert result.provenance[7] == (1, 1)
    assert result.provenance[15] == (3, 9)
    with pytest.raises(ValueError, match="out of range"):
        result.copy_map(4)


def test_external_names_are_used(qbar: SimplicialComplex, a: SimplicialComplex) -> None:
    names = VertexMap(tuple((f"v{i}", i) for i in sorted(qbar.vertices)))
    result = glue(GlueSpec(qbar, a, 2), names)
    assert result.vertex_map.labels[0] == "v0"
    assert "v9_2" in result.vertex_map.labels


def test_copies_are_interchangeable(qbar: SimplicialComplex, a: SimplicialComplex) -> None:
    result = glue(GlueSpec(qbar, a, 3))
    first, second = result.copy_map(1), result.copy_map(2)
    swap = {first[v]: second[v] for v in qbar.vertices - a.vertices}
    swap |= {second[v]: first[v] for v in qbar.vertices - a.vertices}
    assert is_automorphism(result.complex, VertexPermutation.from_mapping(swap))


def test_triangles_of_a_lie_in_three_facets(qbar: SimplicialComplex, a: SimplicialComplex) -> None:
    result = glue(GlueSpec(qbar, a, 3))
    degrees = ridge_degrees(result.complex)
    shared = relabel(a, result.copy_map(1))
    assert isinstance(shared, SimplicialComplex)
    for triangle in shared.facets:
        assert degrees[triangle] == 3


def test_glue_requires_a_subcomplex(qbar: SimplicialComplex, a: SimplicialComplex) -> None:
    with pytest.raises(NotSubcomplexError):
        glue(GlueSpec(a, qbar, 2))
    with pytest.raises(GlueSpecError, match="at least 1"):
        GlueSpec(qbar, a, 0)
    with pytest.raises(SimplicialVerifyError):
        GlueSpec(qbar, a, -2)


def test_hypotheses_for_many_copies(qbar: SimplicialComplex, a: SimplicialComplex) -> None:
    hypotheses = check_glue_hypotheses(GlueSpec(qbar, a, 25))
    assert hypotheses.k == 24
    assert hypotheses.codimension == 1
    assert hypotheses.conditions_hold
    assert hypotheses.copies_exceed_k
    assert hypotheses.theorem_applies
    assert all(satisfied for _, _, satisfied in hypotheses.rows())


def test_hypotheses_for_few_copies(qbar: SimplicialComplex, a: SimplicialComplex) -> None:
    hypotheses = check_glue_hypotheses(GlueSpec(qbar, a, 3))
    assert hypotheses.conditions_hold
    assert not hypotheses.theorem_applies
    assert hypotheses.rows()[-1] == ("copies > k", "3 > 24", False)


def test_hypotheses_flag_a_non_induced_subcomplex(
    xprime: SimplicialComplex, aprime: SimplicialComplex
) -> None:
    hypotheses = check_glue_hypotheses(GlueSpec(xprime, aprime, 2))
    assert hypotheses.x_cm.holds
    assert hypotheses.a_cm.holds
    assert hypotheses.induced is not None
    assert not hypotheses.induced.holds
    assert hypotheses.induced.witness == Face.parse("14")
    assert not hypotheses.conditions_hold
    logger.info("Hypotheses checked.", rows=hypotheses.rows())


def test_hypotheses_for_a_simplex_and_a_facet() -> None:
    simplex = complex_from_strings(["0123"])
    facet = complex_from_strings(["012"])
    hypotheses = check_glue_hypotheses(GlueSpec(simplex, facet, 9))
    assert hypotheses.conditions_hold
    assert hypotheses.k == 8
    assert hypotheses.theorem_applies
