"""
Corpus Library Module for simplicial-verify

This module holds the built-in complexes that the acceptance suite runs on:
Ziegler's ball and the complexes derived from it, the glued family C_N, the
small relative counterexample Q', Björner's example, and a few elementary
fixtures. Each entry carries the properties it is expected to have.
"""

from collections.abc import Iterable
from functools import cache

import structlog

from simplicial_verify.complex import Face, RelativeComplex, SimplicialComplex, VertexPermutation
from simplicial_verify.corpus import data
from simplicial_verify.corpus.schemas import CorpusEntry, Expectation
from simplicial_verify.errors import UnknownCorpusEntryError
from simplicial_verify.glue import GlueSpec

logger = structlog.get_logger(__name__)


def complex_from_strings(facets: Iterable[str]) -> SimplicialComplex:
    return SimplicialComplex.from_facets(Face.parse(s) for s in facets)


class CorpusLibrary:
    """
    A registry of named corpus entries.

    Attributes:
        entries (dict[str, CorpusEntry]): Entries by name, in registration order.
    """

    def __init__(self) -> None:
        self.entries: dict[str, CorpusEntry] = {}
        self._initialize_default_entries()

    def _initialize_default_entries(self) -> None:
        z = complex_from_strings(data.ZIEGLER_Z)
        b = complex_from_strings(data.B)
        qbar = complex_from_strings(data.QBAR)
        a = complex_from_strings(data.A)
        xprime = complex_from_strings(data.XPRIME)
        aprime = complex_from_strings(data.APRIME)

        default_entries = [
            CorpusEntry(
                name="ziegler-Z",
                object=z,
                expected=Expectation(
                    n_vertices=10,
                    n_facets=21,
                    dimension=3,
                    cohen_macaulay=True,
                    partitionable=True,
                    shellable=False,
                    homology="acyclic",
                    slow=frozenset({"shell"}),
                    budgets=(("partition", 60.0), ("shell", 3600.0)),
                    notes=("constructible, but no certificate is stored",),
                ),
                description="Ziegler's nonshellable triangulation of the 3-ball",
                citation="nonshellable 3-ball with 10 vertices and 21 facets",
            ),
            CorpusEntry(
                name="B",
                object=b,
                expected=Expectation(
                    n_facets=7,
                    dimension=3,
                    cohen_macaulay=True,
                    shellable=True,
                    shelling_order=data.B,
                    constructible=True,
                    homology="acyclic",
                    induced_in="ziegler-Z",
                ),
                description="Z restricted to the vertices 0,2,3,4,6,7,8",
                citation="the given order is a shelling of B",
            ),
            CorpusEntry(
                name="Qbar",
                object=qbar,
                expected=Expectation(
                    n_vertices=10,
                    n_facets=14,
                    dimension=3,
                    f=(1, 10, 31, 36, 14),
                    h=(1, 6, 7, 0, 0),
                    cohen_macaulay=True,
                    partitionable=True,
                    shellable=True,
                    shelling_order=data.QBAR,
                    constructible=True,
                    balanced=False,
                    homology="acyclic",
                ),
                description="combinatorial closure of Q, a shellable 3-ball",
                citation="facets of Q in shelling order; vector table",
            ),
            CorpusEntry(
                name="A",
                object=a,
                expected=Expectation(
                    n_vertices=7,
                    n_facets=5,
                    dimension=2,
                    f=(1, 7, 11, 5, 0),
                    h=(1, 4, 0, 0, 0),
                    cohen_macaulay=True,
                    shellable=True,
                    shelling_order=data.A,
                    constructible=True,
                    homology="acyclic",
                    induced_in="Qbar",
                ),
                description="Qbar minus Q, a shellable 2-ball",
                citation="facets of A; vector table",
            ),
            CorpusEntry(
                name="Q",
                object=RelativeComplex(z, b),
                expected=Expectation(
                    n_facets=14,
                    dimension=3,
                    f=(0, 3, 20, 31, 14),
                    h=(0, 3, 11, 0, 0),
                    cohen_macaulay=True,
                    partitionable=False,
                    minimal_faces=("1", "5", "9"),
                    same_faces_as="Qbar-A",
                    budgets=(("partition", 300.0),),
                ),
                description="the relative complex (Z, B)",
                citation="Q is Cohen-Macaulay and not partitionable",
            ),
            CorpusEntry(
                name="Qbar-A",
                object=RelativeComplex(qbar, a),
                expected=Expectation(
                    f=(0, 3, 20, 31, 14),
                    h=(0, 3, 11, 0, 0),
                    same_faces_as="Q",
                ),
                description="Q presented as (Qbar, A)",
                citation="Q = (Qbar, A)",
            ),
            CorpusEntry(
                name="C2",
                object=GlueSpec(qbar, a, 2),
                expected=Expectation(
                    f=(1, 13, 51, 67, 28),
                    cohen_macaulay=True,
                    partitionable=True,
                    budgets=(("partition", 60.0),),
                ),
                description="two copies of Qbar glued along A",
                citation="C_2 is partitionable",
            ),
            CorpusEntry(
                name="C3",
                object=GlueSpec(qbar, a, 3),
                expected=Expectation(
                    n_vertices=16,
                    n_facets=42,
                    f=(1, 16, 71, 98, 42),
                    h=(1, 12, 29, 0, 0),
                    cohen_macaulay=True,
                    partitionable=False,
                    constructible=True,
                    balanced=False,
                    homology="acyclic",
                    slow=frozenset({"partition"}),
                    budgets=(("partition", 7200.0),),
                    notes=(
                        "depth 4 and Stanley depth 3",
                        "contractible but not a ball: each triangle of A lies in three facets",
                    ),
                ),
                description="three copies of Qbar glued along A",
                citation="C_3 is Cohen-Macaulay and not partitionable",
            ),
            CorpusEntry(
                name="C25",
                object=GlueSpec(qbar, a, 25),
                expected=Expectation(
                    n_vertices=82,
                    f=(1, 82, 511, 780, 350),
                    cohen_macaulay=True,
                    slow=frozenset({"cm"}),
                    notes=("not partitionable by the pigeonhole argument; not searched",),
                ),
                description="25 copies of Qbar glued along A (A has 24 faces)",
                citation="C_25 is Cohen-Macaulay and not partitionable",
            ),
            CorpusEntry(
                name="Xprime",
                object=xprime,
                expected=Expectation(
                    n_facets=5,
                    dimension=3,
                    cohen_macaulay=True,
                    shellable=True,
                    shelling_order=data.XPRIME,
                    homology="acyclic",
                    induced_in="ziegler-Z",
                ),
                description="Z restricted to the vertices 1,4,5,7,8,9",
                citation="X' is a shellable 3-ball",
            ),
            CorpusEntry(
                name="Aprime",
                object=aprime,
                expected=Expectation(
                    n_facets=4,
                    dimension=2,
                    cohen_macaulay=True,
                    shellable=True,
                    shelling_order=data.APRIME,
                    homology="acyclic",
                ),
                description="a non-induced 2-ball in the boundary of X'",
                citation="A' is a shellable 2-ball",
            ),
            CorpusEntry(
                name="Qprime",
                object=RelativeComplex(xprime, aprime),
                expected=Expectation(
                    f=(0, 0, 5, 10, 5),
                    cohen_macaulay=True,
                    partitionable=False,
                    budgets=(("partition", 10.0),),
                    notes=("depth 4 and Stanley depth 3",),
                ),
                description="the relative complex (X', A')",
                citation="Q' is Cohen-Macaulay and not partitionable",
            ),
            CorpusEntry(
                name="bjorner",
                object=complex_from_strings(data.BJORNER),
                expected=Expectation(
                    h=(1, 3, 0, 1),
                    cohen_macaulay=False,
                    cm_witness="1",
                    partitionable=True,
                    partitioning=data.BJORNER_PARTITIONING,
                    budgets=(("partition", 60.0),),
                ),
                description="Björner's partitionable complex that is not Cohen-Macaulay",
                citation="vertex 1 fails Reisner's criterion",
            ),
            CorpusEntry(
                name="tau",
                object=VertexPermutation.from_cycles(data.TAU_CYCLES),
                expected=Expectation(
                    automorphism_of=("Qbar",),
                    fixes=("A",),
                    face_images=(("48", "26"),),
                ),
                description="the triple transposition (0 7)(2 4)(6 8)",
                citation="tau is a simplicial automorphism of Qbar",
            ),
            CorpusEntry(
                name="tetrahedron",
                object=complex_from_strings(data.TETRAHEDRON),
                expected=Expectation(
                    f=(1, 4, 6, 4, 1),
                    h=(1, 0, 0, 0, 0),
                    cohen_macaulay=True,
                    partitionable=True,
                    shellable=True,
                    constructible=True,
                    balanced=True,
                    homology="acyclic",
                ),
                description="a single 3-simplex",
                citation="a simplex is balanced and shellable",
            ),
            CorpusEntry(
                name="tetrahedron-boundary",
                object=complex_from_strings(data.TETRAHEDRON_BOUNDARY),
                expected=Expectation(
                    f=(1, 4, 6, 4),
                    h=(1, 1, 1, 1),
                    cohen_macaulay=True,
                    shellable=True,
                    homology="H2 = Z",
                ),
                description="boundary of the tetrahedron, a 2-sphere",
                citation="the 2-sphere has reduced homology Z in degree 2 only",
            ),
            CorpusEntry(
                name="square",
                object=complex_from_strings(data.SQUARE),
                expected=Expectation(
                    f=(1, 4, 4),
                    h=(1, 2, 1),
                    cohen_macaulay=True,
                    partitionable=True,
                    shellable=True,
                    balanced=True,
                    homology="H1 = Z",
                ),
                description="the 4-cycle",
                citation="a connected graph is Cohen-Macaulay",
            ),
        ]

        for entry in default_entries:
            self.add_entry(entry)

    def add_entry(self, entry: CorpusEntry) -> None:
        self.entries[entry.name] = entry
        logger.debug("Corpus entry added.", name=entry.name, kind=entry.kind)

    def get_entry(self, name: str) -> CorpusEntry:
        """
        Raises:
            UnknownCorpusEntryError: If no entry has this name.
        """
        if name not in self.entries:
            msg = f"Unknown corpus entry {name!r}; known: {', '.join(self.entries)}"
            raise UnknownCorpusEntryError(msg)
        return self.entries[name]

    def list_entries(self) -> list[str]:
        return list(self.entries)


@cache
def default_library() -> CorpusLibrary:
    return CorpusLibrary()


def corpus_get(name: str) -> CorpusEntry:
    return default_library().get_entry(name)
