import random
import threading
from itertools import combinations

import pytest
import structlog

from simplicial_verify.complex import (
    Face,
    RelativeComplex,
    SimplicialComplex,
    h_vector,
)
from simplicial_verify.corpus import complex_from_strings, corpus_get
from simplicial_verify.decompose import (
    CoverProblem,
    ExactCoverSolver,
    Interval,
    Partitioning,
    SearchClock,
    SearchConfig,
    SearchResult,
    find_partitioning,
    h_from_restrictions,
    partition_problem,
    verify_partitioning,
)
from simplicial_verify.errors import (
    MalformedCertificateError,
    NotPureError,
    SearchBudgetExceededError,
    SearchCancelledError,
)

logger = structlog.get_logger(__name__)


def _oracle_partitionable(complex_: SimplicialComplex) -> bool:
    """Try every choice of bottom for every facet, keeping intervals disjoint."""
    facets = complex_.maximal_faces
    total = len(complex_.faces)

    def extend(i: int, covered: frozenset[Face]) -> bool:
        if i == len(facets):
            return len(covered) == total
        for bottom in facets[i].subsets():
            block = frozenset(Interval(bottom, facets[i]).faces())
            if not block & covered and extend(i + 1, covered | block):
                return True
        return False

    return extend(0, frozenset())


def _small_pure_complexes() -> list[SimplicialComplex]:
    """Every pure complex on the vertices 0..3 with facets of one size 1..4."""
    complexes = []
    for size in range(1, 5):
        candidates = [Face(c) for c in combinations(range(4), size)]
        for n in range(1, len(candidates) + 1):
            for chosen in combinations(candidates, n):
                complexes.append(SimplicialComplex.from_facets(chosen))
    return complexes


def _random_pure_complexes(count: int, seed: int) -> list[SimplicialComplex]:
    rng = random.Random(seed)
    complexes = []
    for _ in range(count):
        n_vertices = rng.randint(3, 6)
        size = rng.randint(2, 3)
        candidates = [Face(c) for c in combinations(range(n_vertices), size)]
        n_facets = rng.randint(1, min(5, len(candidates)))
        complexes.append(SimplicialComplex.from_facets(rng.sample(candidates, n_facets)))
    return complexes


def test_bjorner_partitioning(bjorner: SimplicialComplex) -> None:
    given = Partitioning(
        (
            Interval(Face(), Face.parse("156")),
            Interval(Face.parse("2"), Face.parse("123")),
            Interval(Face.parse("3"), Face.parse("134")),
            Interval(Face.parse("4"), Face.parse("124")),
            Interval(Face.parse("234"), Face.parse("234")),
        )
    )
    assert verify_partitioning(bjorner, given).holds
    assert h_from_restrictions(given, bjorner) == h_vector(bjorner)

    outcome = find_partitioning(bjorner)
    assert outcome.found
    assert outcome.report.result is SearchResult.SAT
    assert outcome.certificate is not None
    assert verify_partitioning(bjorner, outcome.certificate).holds


def test_verifier_names_first_violation(bjorner: SimplicialComplex) -> None:
    overlapping = Partitioning(
        (
            Interval(Face(), Face.parse("156")),
            Interval(Face(), Face.parse("123")),
            Interval(Face.parse("3"), Face.parse("134")),
            Interval(Face.parse("4"), Face.parse("124")),
            Interval(Face.parse("234"), Face.parse("234")),
        )
    )
    result = verify_partitioning(bjorner, overlapping)
    assert not result.holds
    assert result.violation == "face ∅ is covered 2 times"

    missing = Partitioning(overlapping.intervals[:4])
    result = verify_partitioning(bjorner, missing)
    assert not result.holds
    assert result.violation == "facet 234 is not the top of any interval"

    with pytest.raises(MalformedCertificateError):
        Interval(Face.parse("5"), Face.parse("123"))


def test_relative_intervals_must_avoid_removed_faces(q: RelativeComplex) -> None:
    # [∅, F] contains ∅, which lies in B
    top = q.maximal_faces[0]
    intervals = tuple(Interval(Face(), f) for f in q.maximal_faces)
    result = verify_partitioning(q, Partitioning(intervals))
    assert not result.holds
    assert result.violation == f"face ∅ of [∅,{top}] lies in the removed subcomplex"


@pytest.mark.parametrize("name", ["Q", "Qbar-A", "Qprime"])
def test_relative_counterexamples_are_unsat(name: str) -> None:
    complex_ = corpus_get(name).complex
    assert complex_ is not None
    outcome = find_partitioning(complex_)
    logger.info("Partition search finished.", name=name, nodes=outcome.report.nodes_explored)
    assert not outcome.found
    assert outcome.report.result is SearchResult.UNSAT
    assert outcome.report.exhausted


@pytest.mark.parametrize("name", ["ziegler-Z", "Qbar", "C2", "bjorner", "square"])
def test_partitionable_entries(name: str) -> None:
    complex_ = corpus_get(name).complex
    assert complex_ is not None
    outcome = find_partitioning(complex_)
    assert outcome.certificate is not None
    assert verify_partitioning(complex_, outcome.certificate).holds
    # restriction sizes always count the h-vector
    assert h_from_restrictions(outcome.certificate, complex_) == h_vector(complex_)


def test_search_agrees_with_brute_force_on_four_vertices() -> None:
    complexes = _small_pure_complexes()
    for complex_ in complexes:
        outcome = find_partitioning(complex_)
        assert outcome.found == _oracle_partitionable(complex_), str(complex_)
        if outcome.certificate is not None:
            assert verify_partitioning(complex_, outcome.certificate).holds
    logger.info("Small complexes checked.", count=len(complexes))


def test_search_agrees_with_brute_force_on_random_complexes() -> None:
    for complex_ in _random_pure_complexes(100, seed=2024):
        outcome = find_partitioning(complex_)
        assert outcome.found == _oracle_partitionable(complex_), str(complex_)


def test_search_is_deterministic(qbar: SimplicialComplex) -> None:
    first = find_partitioning(qbar)
    second = find_partitioning(qbar)
    assert first.certificate == second.certificate
    assert first.report.nodes_explored == second.report.nodes_explored
    assert first.report.options_generated == second.report.options_generated


@pytest.mark.parametrize("name", ["Qprime", "bjorner", "Qbar", "C2"])
def test_parallel_search_matches_sequential(name: str) -> None:
    complex_ = corpus_get(name).complex
    assert complex_ is not None
    sequential = find_partitioning(complex_)
    parallel = find_partitioning(complex_, SearchConfig(workers=2))
    assert parallel.certificate == sequential.certificate
    assert parallel.report.result == sequential.report.result
    assert parallel.report.nodes_explored == sequential.report.nodes_explored


def test_budget_overrun_is_unknown(qprime: RelativeComplex) -> None:
    config = SearchConfig(budget_seconds=-1.0, check_interval=1)
    with pytest.raises(SearchBudgetExceededError) as excinfo:
        find_partitioning(qprime, config)
    report = excinfo.value.report
    assert report.result is SearchResult.UNKNOWN
    assert not report.exhausted


def test_non_pure_input_is_rejected() -> None:
    with pytest.raises(NotPureError):
        find_partitioning(complex_from_strings(["012", "3"]))


def test_cover_problem_shape(qprime: RelativeComplex) -> None:
    problem = partition_problem(qprime)
    assert isinstance(problem, CoverProblem)
    assert problem.items == qprime.faces
    # every option is an interval inside Q'
    for interval, row in zip(problem.options, problem.rows, strict=True):
        assert interval.bottom in qprime
        assert len(row) == 2 ** (len(interval.top) - len(interval.bottom))


def test_exact_cover_solver() -> None:
    # Knuth's example: options 1 and 4 and 5 (0-based: 0, 3, 4) cover items 0..6
    options = [(2, 4, 5), (0, 3, 6), (1, 2, 5), (0, 3), (1, 6), (3, 4, 6)]
    solver = ExactCoverSolver(7)
    for option in options:
        solver.add_option(option)
    solution = solver.solve(SearchClock(None))
    assert solution is not None
    assert sorted(solution) == [0, 3, 4]

    single = ExactCoverSolver(2)
    single.add_option((0, 1))
    single.add_option((1,))
    clock = SearchClock(None)
    assert single.solve(clock) == [0]
    assert clock.nodes == 2


@pytest.mark.slow
def test_three_glued_copies_are_not_partitionable() -> None:
    complex_ = corpus_get("C3").complex
    assert complex_ is not None
    outcome = find_partitioning(complex_, SearchConfig(workers=4))
    assert outcome.report.result is SearchResult.UNSAT


def test_clock_reads_the_cancel_flag_every_interval() -> None:
    stop = threading.Event()
    clock = SearchClock(None, interval=4, cancel=stop)
    for _ in range(4):
        clock.tick()
    stop.set()
    for _ in range(3):
        clock.tick()
    with pytest.raises(SearchCancelledError):
        clock.tick()
    assert clock.nodes == 8


def test_parallel_budget_overrun_stops_every_branch() -> None:
    complex_ = corpus_get("C2").complex
    assert complex_ is not None
    config = SearchConfig(budget_seconds=-1.0, workers=2, check_interval=1)
    with pytest.raises(SearchBudgetExceededError) as excinfo:
        find_partitioning(complex_, config)
    assert excinfo.value.report.result is SearchResult.UNKNOWN
