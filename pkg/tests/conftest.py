import pytest

from simplicial_verify.complex import RelativeComplex, SimplicialComplex
from simplicial_verify.corpus import corpus_get


def _absolute(name: str) -> SimplicialComplex:
    complex_ = corpus_get(name).complex
    assert isinstance(complex_, SimplicialComplex)
    return complex_


@pytest.fixture
def ziegler() -> SimplicialComplex:
    return _absolute("ziegler-Z")


@pytest.fixture
def b() -> SimplicialComplex:
    return _absolute("B")


@pytest.fixture
def qbar() -> SimplicialComplex:
    return _absolute("Qbar")


@pytest.fixture
def a() -> SimplicialComplex:
    return _absolute("A")


@pytest.fixture
def xprime() -> SimplicialComplex:
    return _absolute("Xprime")


@pytest.fixture
def aprime() -> SimplicialComplex:
    return _absolute("Aprime")


@pytest.fixture
def bjorner() -> SimplicialComplex:
    return _absolute("bjorner")


@pytest.fixture
def q() -> RelativeComplex:
    complex_ = corpus_get("Q").complex
    assert isinstance(complex_, RelativeComplex)
    return complex_


@pytest.fixture
def qprime() -> RelativeComplex:
    complex_ = corpus_get("Qprime").complex
    assert isinstance(complex_, RelativeComplex)
    return complex_
