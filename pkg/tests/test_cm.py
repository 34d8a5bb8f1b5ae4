import random

import pytest
import structlog

from simplicial_verify.cm import CMConfig, cm_report, is_cohen_macaulay
from simplicial_verify.complex import Face, SimplicialComplex, enumerate_faces, link
from simplicial_verify.corpus import complex_from_strings, corpus_get
from simplicial_verify.glue import GlueSpec, glue
from simplicial_verify.settings import settings

logger = structlog.get_logger(__name__)


@pytest.mark.parametrize(
    "name",
    ["ziegler-Z", "B", "Qbar", "A", "Q", "Qbar-A", "Xprime", "Aprime", "Qprime", "C2", "C3"],
)
def test_cohen_macaulay_entries(name: str) -> None:
    complex_ = corpus_get(name).complex
    assert complex_ is not None
    verdict = is_cohen_macaulay(complex_)
    logger.info("CM checked.", name=name, faces=verdict.faces_checked)
    assert verdict.holds
    assert verdict.witness is None


def test_bjorner_fails_at_vertex_one(bjorner: SimplicialComplex) -> None:
    verdict = is_cohen_macaulay(bjorner)
    assert not verdict.holds
    assert verdict.witness is not None
    assert verdict.witness.face == Face.parse("1")
    assert verdict.witness.degree == 0
    assert verdict.witness.group.betti == 1
    # the empty face passes, vertex 1 is next
    assert verdict.faces_checked == 2
    assert str(verdict.witness) == "face 1: H0(link) = Z"


def test_disconnected_graph_fails_at_empty_face() -> None:
    verdict = is_cohen_macaulay(complex_from_strings(["01", "23"]))
    assert not verdict.holds
    assert verdict.witness is not None
    assert verdict.witness.face == Face()


def test_spheres_and_points_are_cohen_macaulay() -> None:
    assert is_cohen_macaulay(complex_from_strings(["012", "013", "023", "123"])).holds
    assert is_cohen_macaulay(complex_from_strings(["0", "1", "2"])).holds
    assert is_cohen_macaulay(SimplicialComplex.trivial()).holds


def test_report_table(bjorner: SimplicialComplex) -> None:
    report = cm_report(bjorner)
    assert not report.holds
    assert len(report.rows) == len(bjorner.faces)
    frame = report.to_frame()
    assert list(frame.columns) == ["face", "link_dim", "homology", "ok"]
    failing = frame[~frame["ok"]]
    assert failing["face"].tolist() == ["1"]
    assert failing["homology"].tolist() == ["H0 = Z"]


def test_full_scan_counts_every_face(bjorner: SimplicialComplex) -> None:
    verdict = is_cohen_macaulay(bjorner, CMConfig(stop_at_first=False))
    assert verdict.faces_checked == len(bjorner.faces)
    assert verdict.witness is not None
    assert verdict.witness.face == Face.parse("1")


def test_parallel_witness_matches_sequential(bjorner: SimplicialComplex) -> None:
    sequential = is_cohen_macaulay(bjorner)
    parallel = is_cohen_macaulay(bjorner, CMConfig(workers=2))
    assert parallel.holds == sequential.holds
    assert parallel.witness == sequential.witness


def test_config_defaults_come_from_settings() -> None:
    config = CMConfig.load({})
    assert config.workers == settings.threads
    assert config.stop_at_first
    assert not CMConfig.load({"stop_at_first": False}).stop_at_first


@pytest.mark.slow
def test_c25_is_cohen_macaulay() -> None:
    complex_ = corpus_get("C25").complex
    assert complex_ is not None
    assert is_cohen_macaulay(complex_).holds


@pytest.mark.parametrize("name", ["Qbar", "A", "B", "Q", "Xprime"])
def test_links_of_cohen_macaulay_complexes_are_cohen_macaulay(name: str) -> None:
    complex_ = corpus_get(name).complex
    assert complex_ is not None
    faces = enumerate_faces(complex_)
    rng = random.Random(name)
    for face in rng.sample(faces, min(12, len(faces))):
        assert is_cohen_macaulay(link(complex_, face)).holds, str(face)


@pytest.mark.parametrize("copies", [1, 4, 5])
def test_gluing_along_a_codimension_one_ball_keeps_cohen_macaulay(
    copies: int, qbar: SimplicialComplex, a: SimplicialComplex
) -> None:
    glued = glue(GlueSpec(qbar, a, copies)).complex
    verdict = is_cohen_macaulay(glued)
    logger.info("Glued complex checked.", copies=copies, faces=verdict.faces_checked)
    assert verdict.holds
