"""
Cohen-Macaulay verification by Reisner's criterion.

A complex passes iff for every face σ of Δ (including ∅)
    H̃_i(link σ) = 0 for all i < dim link_Δ(σ),
with the relative version using the pair (link_Δ σ, link_Γ σ).
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import pandas as pd
import structlog

from simplicial_verify.cm.config import CMConfig
from simplicial_verify.complex import AnyComplex, Face, RelativeComplex, link
from simplicial_verify.homology import HomologyGroup, HomologyProfile, reduced_homology

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class LinkRow:
    """One line of the per-face table."""

    face: Face
    link_dimension: int
    profile: HomologyProfile
    failure: HomologyGroup | None

    @property
    def passes(self) -> bool:
        return self.failure is None


@dataclass(frozen=True)
class CMWitness:
    """The first face whose link violates Reisner's criterion."""

    face: Face
    degree: int
    group: HomologyGroup

    def __str__(self) -> str:
        return f"face {self.face}: H{self.degree}(link) = {self.group}"


@dataclass(frozen=True)
class CMVerdict:
    holds: bool
    witness: CMWitness | None = None
    faces_checked: int = 0


@dataclass(frozen=True)
class CMReport:
    rows: tuple[LinkRow, ...]

    @property
    def holds(self) -> bool:
        return all(row.passes for row in self.rows)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "face": str(row.face),
                    "link_dim": row.link_dimension,
                    "homology": str(row.profile),
                    "ok": row.passes,
                }
                for row in self.rows
            ]
        )


def link_row(complex_: AnyComplex, face: Face) -> LinkRow:
    lk = link(complex_, face)
    dim = lk.closure.dimension if isinstance(lk, RelativeComplex) else lk.dimension
    profile = reduced_homology(lk)
    return LinkRow(face, dim, profile, profile.first_nonzero_below(dim))


def _link_rows(complex_: AnyComplex, faces: list[Face]) -> list[LinkRow]:
    return [link_row(complex_, face) for face in faces]


def _tested_faces(complex_: AnyComplex) -> tuple[Face, ...]:
    # every face of Δ, also those in Γ for a relative complex
    if isinstance(complex_, RelativeComplex):
        return complex_.closure.faces
    return complex_.faces


def _chunks(faces: tuple[Face, ...], n: int) -> list[list[Face]]:
    size = max(1, -(-len(faces) // n))
    return [list(faces[i : i + size]) for i in range(0, len(faces), size)]


def cm_report(complex_: AnyComplex, config: CMConfig | None = None) -> CMReport:
    """Link dimension and homology for every face, in canonical order."""
    config = config or CMConfig()
    faces = _tested_faces(complex_)
    if config.workers > 1 and len(faces) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            parts = pool.map(
                _link_rows,
                [complex_] * config.workers,
                _chunks(faces, config.workers),
            )
            rows = [row for part in parts for row in part]
    else:
        rows = _link_rows(complex_, list(faces))
    return CMReport(tuple(rows))


def is_cohen_macaulay(complex_: AnyComplex, config: CMConfig | None = None) -> CMVerdict:
    """
    Reisner's criterion over all faces in increasing dimension.

    The witness is the first failing face in canonical order, whatever the
    worker count.
    """
    config = config or CMConfig()
    log = logger.bind(faces=len(_tested_faces(complex_)), workers=config.workers)

    if config.workers > 1 or not config.stop_at_first:
        rows = cm_report(complex_, config).rows
        failing = next((row for row in rows if not row.passes), None)
        checked = len(rows)
    else:
        failing = None
        checked = 0
        for face in _tested_faces(complex_):
            row = link_row(complex_, face)
            checked += 1
            if not row.passes:
                failing = row
                break

    if failing is None or failing.failure is None:
        log.debug("Reisner criterion holds.", checked=checked)
        return CMVerdict(holds=True, faces_checked=checked)

    witness = CMWitness(failing.face, failing.failure.dimension, failing.failure)
    log.info("Reisner criterion fails.", witness=str(witness))
    return CMVerdict(holds=False, witness=witness, faces_checked=checked)
