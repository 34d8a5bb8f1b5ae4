import random

import pytest
import structlog
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_smith_normal_form

from simplicial_verify.complex import RelativeComplex, SimplicialComplex, cone
from simplicial_verify.corpus import complex_from_strings, corpus_get, default_library
from simplicial_verify.homology import (
    boundary_matrix,
    divisibility_chain,
    euler_characteristic,
    reduced_homology,
    smith_normal_form,
)

logger = structlog.get_logger(__name__)

# six-vertex real projective plane
RP2 = ["124", "126", "134", "135", "156", "235", "236", "245", "346", "456"]

CORPUS_COMPLEXES = [
    pytest.param(name, marks=pytest.mark.slow) if name == "C25" else name
    for name in default_library().list_entries()
    if default_library().get_entry(name).kind != "permutation"
]


def _oracle_invariants(rows: list[list[int]]) -> tuple[int, ...]:
    if not rows or not rows[0]:
        return ()
    snf = sympy_smith_normal_form(Matrix(rows), domain=ZZ)
    n = min(snf.shape)
    return tuple(abs(int(snf[i, i])) for i in range(n) if snf[i, i] != 0)


def test_smith_form_matches_sympy() -> None:
    rng = random.Random(7)
    for _ in range(60):
        n_rows, n_cols = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[rng.randint(-6, 6) for _ in range(n_cols)] for _ in range(n_rows)]
        ours = smith_normal_form(rows).diagonal
        assert ours == _oracle_invariants(rows), rows


def test_smith_form_of_boundaries_matches_sympy() -> None:
    for facets in (RP2, ["012", "013", "023", "123"], ["01", "12", "23", "03"]):
        complex_ = complex_from_strings(facets)
        for i in range(complex_.dimension + 2):
            rows = [list(r) for r in boundary_matrix(complex_, i).entries]
            assert smith_normal_form(rows).diagonal == _oracle_invariants(rows)


def test_smith_form_edge_cases() -> None:
    assert smith_normal_form([]).diagonal == ()
    assert smith_normal_form([[0, 0], [0, 0]]).rank == 0
    assert smith_normal_form([[2, 0], [0, 3]]).diagonal == (1, 6)
    assert smith_normal_form([[4]]).torsion == (4,)
    assert divisibility_chain([6, 4, 0]) == (2, 12)


@pytest.mark.parametrize("name", CORPUS_COMPLEXES)
def test_boundary_of_boundary_vanishes(name: str) -> None:
    complex_ = corpus_get(name).complex
    assert complex_ is not None
    for i in range(1, complex_.dimension + 1):
        product = boundary_matrix(complex_, i - 1).compose(boundary_matrix(complex_, i))
        assert all(x == 0 for row in product for x in row), (name, i)


def test_augmentation_row() -> None:
    triangle = complex_from_strings(["012"])
    augmentation = boundary_matrix(triangle, 0)
    assert augmentation.shape == (1, 3)
    assert augmentation.entries == ((1, 1, 1),)
    edges = boundary_matrix(triangle, 1)
    # columns 01 02 12, rows 0 1 2
    assert edges.entries == ((-1, -1, 0), (1, 0, -1), (0, 1, 1))


@pytest.mark.parametrize("name", CORPUS_COMPLEXES)
def test_euler_poincare(name: str) -> None:
    complex_ = corpus_get(name).complex
    assert complex_ is not None
    profile = reduced_homology(complex_)
    alternating = sum((-1) ** g.dimension * g.betti for g in profile.groups)
    assert alternating == euler_characteristic(complex_), name
    logger.info("Homology computed.", name=name, homology=str(profile))


def test_sphere_and_cycle() -> None:
    sphere = complex_from_strings(["012", "013", "023", "123"])
    assert str(reduced_homology(sphere)) == "H2 = Z"
    square = complex_from_strings(["01", "12", "23", "03"])
    assert str(reduced_homology(square)) == "H1 = Z"
    two_points = complex_from_strings(["0", "1"])
    assert str(reduced_homology(two_points)) == "H0 = Z"


def test_torsion() -> None:
    profile = reduced_homology(complex_from_strings(RP2))
    assert str(profile) == "H1 = Z/2"
    assert profile.group(1).torsion == (2,)
    assert profile.group(2).is_zero


def test_cone_is_acyclic() -> None:
    sphere = complex_from_strings(["012", "013", "023", "123"])
    assert reduced_homology(cone(sphere, 4)).is_zero
    assert reduced_homology(cone(complex_from_strings(RP2), 0)).is_zero


def test_void_and_trivial() -> None:
    assert reduced_homology(SimplicialComplex.void()).is_zero
    trivial = reduced_homology(SimplicialComplex.trivial())
    assert trivial.group(-1).betti == 1
    assert str(trivial) == "H-1 = Z"


def test_relative_homology_of_q(q: RelativeComplex) -> None:
    # (Z, B) with Z and B both balls
    assert reduced_homology(q).is_zero


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_smith_form_ignores_row_and_column_order(seed: int, qbar: SimplicialComplex) -> None:
    rng = random.Random(seed)
    matrices = [boundary_matrix(complex_from_strings(RP2), 2), boundary_matrix(qbar, 3)]
    for matrix in matrices:
        rows = [list(r) for r in matrix.entries]
        expected = smith_normal_form(rows).diagonal
        for _ in range(5):
            shuffled = rng.sample(rows, len(rows))
            columns = rng.sample(range(len(rows[0])), len(rows[0]))
            permuted = [[row[c] for c in columns] for row in shuffled]
            assert smith_normal_form(permuted).diagonal == expected
