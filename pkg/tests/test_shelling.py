from itertools import combinations, permutations

import pytest
import structlog

from simplicial_verify.complex import Face, SimplicialComplex, h_vector
from simplicial_verify.corpus import complex_from_strings, corpus_get
from simplicial_verify.corpus.data import A, APRIME, B, QBAR, XPRIME
from simplicial_verify.decompose import (
    SearchConfig,
    SearchResult,
    ShellingOrder,
    find_partitioning,
    find_shelling,
    h_from_restrictions,
    partitioning_from_shelling,
    verify_partitioning,
    verify_shelling,
)
from simplicial_verify.errors import MalformedCertificateError, SearchBudgetExceededError

logger = structlog.get_logger(__name__)


def _faces(strings: tuple[str, ...]) -> list[Face]:
    return [Face.parse(s) for s in strings]


def _oracle_shellable(complex_: SimplicialComplex) -> bool:
    """Some order where each facet meets the earlier ones in a pure (d-1)-complex."""
    facets = complex_.maximal_faces
    for order in permutations(facets):
        ok = True
        for j in range(1, len(order)):
            meets = [order[j].intersection(order[i]) for i in range(j)]
            maximal = [m for m in meets if not any(m != n and m.issubset(n) for n in meets)]
            if any(len(m) != len(order[j]) - 1 for m in maximal):
                ok = False
                break
        if ok:
            return True
    return False


def _small_pure_complexes() -> list[SimplicialComplex]:
    complexes = []
    for size in range(1, 5):
        candidates = [Face(c) for c in combinations(range(4), size)]
        for n in range(1, len(candidates) + 1):
            complexes.extend(
                SimplicialComplex.from_facets(chosen) for chosen in combinations(candidates, n)
            )
    return complexes


@pytest.mark.parametrize(
    ("name", "order"),
    [("B", B), ("Qbar", QBAR), ("A", A), ("Xprime", XPRIME), ("Aprime", APRIME)],
)
def test_listed_orders_are_shellings(name: str, order: tuple[str, ...]) -> None:
    complex_ = corpus_get(name).complex
    assert isinstance(complex_, SimplicialComplex)
    result = verify_shelling(complex_, _faces(order))
    assert result.holds, result.violation
    assert result.certificate is not None
    assert result.certificate.restrictions[0] == Face()
    # the restriction faces count the h-vector
    assert h_from_restrictions(result.certificate, complex_) == h_vector(complex_)
    assert verify_partitioning(complex_, partitioning_from_shelling(result.certificate)).holds


def test_qbar_restriction_sizes(qbar: SimplicialComplex) -> None:
    result = verify_shelling(qbar, _faces(QBAR))
    assert result.certificate is not None
    assert h_from_restrictions(result.certificate).entries == (1, 6, 7, 0, 0)
    assert result.certificate.restrictions[1] == Face.parse("6")
    assert result.certificate.restrictions[4] == Face.parse("48")


def test_bad_step_names_minimal_new_faces() -> None:
    complex_ = complex_from_strings(["012", "123", "234"])
    assert verify_shelling(complex_, _faces(("012", "123", "234"))).holds

    result = verify_shelling(complex_, _faces(("012", "234", "123")))
    assert not result.holds
    assert result.violation == "step 2 (234): new faces have minimal elements 3 4"


def test_order_must_permute_the_facets(a: SimplicialComplex) -> None:
    with pytest.raises(MalformedCertificateError):
        verify_shelling(a, _faces(A[:-1]))
    with pytest.raises(MalformedCertificateError):
        verify_shelling(a, _faces((*A, "026")))
    with pytest.raises(MalformedCertificateError):
        verify_shelling(a, _faces((*A[:-1], "012")))


def test_restrictions_must_match_the_order(a: SimplicialComplex) -> None:
    shelling = verify_shelling(a, _faces(A)).certificate
    assert shelling is not None
    tampered = ShellingOrder(shelling.order, (Face(),) * len(shelling.order))
    with pytest.raises(MalformedCertificateError):
        h_from_restrictions(tampered, a)


def test_search_finds_a_shelling(a: SimplicialComplex) -> None:
    outcome = find_shelling(a)
    assert outcome.report.result is SearchResult.SAT
    assert outcome.certificate is not None
    assert verify_shelling(a, outcome.certificate.order).certificate == outcome.certificate


def test_simplex_is_shellable() -> None:
    tetrahedron = complex_from_strings(["0123"])
    outcome = find_shelling(tetrahedron)
    assert outcome.certificate == ShellingOrder((Face.parse("0123"),), (Face(),))


def test_non_cohen_macaulay_complexes_are_not_shellable(bjorner: SimplicialComplex) -> None:
    assert not find_shelling(bjorner).found
    outcome = find_shelling(complex_from_strings(["01", "23"]))
    assert outcome.report.result is SearchResult.UNSAT
    assert outcome.report.exhausted


def test_search_agrees_with_brute_force() -> None:
    for complex_ in _small_pure_complexes():
        shellable = find_shelling(complex_).found
        assert shellable == _oracle_shellable(complex_), str(complex_)
        if shellable:
            assert find_partitioning(complex_).found


def test_budget_overrun_is_unknown(ziegler: SimplicialComplex) -> None:
    with pytest.raises(SearchBudgetExceededError) as excinfo:
        find_shelling(ziegler, SearchConfig(budget_seconds=-1.0, check_interval=1))
    assert excinfo.value.report.result is SearchResult.UNKNOWN
    assert not excinfo.value.report.exhausted


@pytest.mark.slow
def test_ziegler_ball_is_not_shellable(ziegler: SimplicialComplex) -> None:
    outcome = find_shelling(ziegler)
    logger.info("Shelling search finished.", nodes=outcome.report.nodes_explored)
    assert outcome.report.result is SearchResult.UNSAT
