"""
Corpus Verification Service for simplicial-verify

Runs every applicable checker on a corpus entry and compares the outcome with
the entry's expectation. Failures, budget overruns and skipped checks are rows
of the report; nothing here raises for a wrong answer.
"""

import time
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum

import pandas as pd
import structlog

from simplicial_verify.cm import CMConfig, is_cohen_macaulay
from simplicial_verify.complex import (
    AnyComplex,
    Face,
    SimplicialComplex,
    VertexPermutation,
    apply_permutation,
    f_vector,
    h_vector,
    is_automorphism,
    is_balanced,
    is_induced,
    minimal_faces,
)
from simplicial_verify.corpus.library import CorpusLibrary, default_library
from simplicial_verify.corpus.schemas import CorpusEntry, Expectation
from simplicial_verify.decompose import (
    Interval,
    Partitioning,
    SearchConfig,
    ShellingOrder,
    find_partitioning,
    find_shelling,
    h_from_restrictions,
    shelling_to_constructibility,
    verify_constructibility,
    verify_partitioning,
    verify_shelling,
)
from simplicial_verify.errors import SearchBudgetExceededError, SimplicialVerifyError
from simplicial_verify.glue import glue_constructibility_certificate
from simplicial_verify.homology import reduced_homology

logger = structlog.get_logger(__name__)


class CheckStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    BUDGET = "BUDGET"
    SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class CheckRow:
    entry: str
    check: str
    expected: str
    actual: str
    status: CheckStatus
    seconds: float
    citation: str

    @property
    def mark(self) -> str:
        return {
            CheckStatus.PASS: "✓",
            CheckStatus.FAIL: "✗",
            CheckStatus.BUDGET: "?",
            CheckStatus.SKIPPED: "-",
        }[self.status]


@dataclass(frozen=True)
class CorpusReport:
    rows: tuple[CheckRow, ...]

    @property
    def ok(self) -> bool:
        """No check failed; budget overruns and skips do not count as failures."""
        return all(row.status is not CheckStatus.FAIL for row in self.rows)

    def failures(self) -> list[CheckRow]:
        return [row for row in self.rows if row.status is CheckStatus.FAIL]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "entry": row.entry,
                    "check": row.check,
                    "expected": row.expected,
                    "actual": row.actual,
                    "": row.mark,
                    "seconds": round(row.seconds, 3),
                    "citation": row.citation,
                }
                for row in self.rows
            ],
            columns=["entry", "check", "expected", "actual", "", "seconds", "citation"],
        )


def _padded(values: tuple[int, ...], length: int) -> tuple[int, ...]:
    return values + (0,) * (length - len(values))


def _same_vector(expected: tuple[int, ...], actual: tuple[int, ...]) -> bool:
    """Equal up to trailing zeros, as vectors of different dimensions are compared."""
    n = max(len(expected), len(actual))
    return _padded(expected, n) == _padded(actual, n)


def _fmt(values: tuple[int, ...]) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _yes(flag: bool) -> str:  # noqa: FBT001
    return "yes" if flag else "no"


class CorpusVerifier:
    """
    Service running the acceptance checks of the corpus.

    Attributes:
        library (CorpusLibrary): Where entries are looked up.
        skip_slow (bool): Skip the checks an entry marks as slow.
        budget (float | None): Overrides every per-check search budget.
        workers (int): Worker processes for searches and CM checks.
    """

    def __init__(
        self,
        library: CorpusLibrary | None = None,
        *,
        skip_slow: bool = False,
        budget: float | None = None,
        workers: int = 1,
    ) -> None:
        self.library = library or default_library()
        self.skip_slow = skip_slow
        self.budget = budget
        self.workers = workers
        self.logger = logger.bind(service="corpus")

    def verify(self, names: list[str] | None = None) -> CorpusReport:
        names = self.library.list_entries() if names is None else names
        rows: list[CheckRow] = []
        for name in names:
            rows.extend(self.verify_entry(self.library.get_entry(name)))
        report = CorpusReport(tuple(rows))
        self.logger.info(
            "Corpus verified.",
            entries=len(names),
            checks=len(rows),
            failures=len(report.failures()),
        )
        return report

    def verify_entry(self, entry: CorpusEntry) -> list[CheckRow]:
        rows = [
            self._run(entry, check, runner)
            for check, runner in self._checks(entry)
        ]
        self.logger.debug("Entry verified.", entry=entry.name, checks=len(rows))
        return rows

    def _checks(self, entry: CorpusEntry) -> list[tuple[str, Callable[[], tuple[str, str, bool]]]]:
        exp = entry.expected
        complex_ = entry.complex
        checks: list[tuple[str, Callable[[], tuple[str, str, bool]]]] = []
        if complex_ is None:
            if exp.automorphism_of or exp.fixes or exp.face_images:
                checks.append(("automorphism", lambda: self._automorphism(entry)))
            return checks
        if exp.n_vertices is not None or exp.n_facets is not None or exp.dimension is not None:
            checks.append(("shape", lambda: self._shape(exp, complex_)))
        if exp.f is not None:
            f = exp.f
            checks.append(("f", lambda: self._vector(f, f_vector(complex_).entries)))
        if exp.h is not None:
            h = exp.h
            checks.append(("h", lambda: self._vector(h, h_vector(complex_).entries)))
        if exp.minimal_faces is not None:
            checks.append(("minimal-faces", lambda: self._minimal(exp, complex_)))
        if exp.same_faces_as is not None:
            checks.append(("presentation", lambda: self._presentation(exp, complex_)))
        if exp.induced_in is not None:
            checks.append(("induced", lambda: self._induced(exp, complex_)))
        if exp.homology is not None:
            checks.append(("homology", lambda: self._homology(exp, complex_)))
        if exp.cohen_macaulay is not None:
            checks.append(("cm", lambda: self._cm(exp, complex_)))
        if exp.partitionable is not None:
            checks.append(("partition", lambda: self._partition(exp, complex_)))
        if exp.shellable is not None and isinstance(complex_, SimplicialComplex):
            checks.append(("shell", lambda: self._shell(exp, complex_)))
        if exp.constructible is not None:
            checks.append(("constructible", lambda: self._constructible(entry)))
        if exp.balanced is not None and isinstance(complex_, SimplicialComplex):
            checks.append(("balanced", lambda: self._balanced(exp, complex_)))
        return checks

    def _run(
        self,
        entry: CorpusEntry,
        check: str,
        runner: Callable[[], tuple[str, str, bool]],
    ) -> CheckRow:
        if self.skip_slow and check in entry.expected.slow:
            return CheckRow(entry.name, check, "", "skipped (slow)", CheckStatus.SKIPPED, 0.0, entry.citation)
        started = time.monotonic()
        try:
            expected, actual, passed = runner()
            status = CheckStatus.PASS if passed else CheckStatus.FAIL
        except SearchBudgetExceededError as e:
            expected, actual, status = "", f"UNKNOWN ({e})", CheckStatus.BUDGET
        except SimplicialVerifyError as e:
            self.logger.exception("Check raised.", entry=entry.name, check=check)
            expected, actual, status = "", f"error: {e}", CheckStatus.FAIL
        seconds = time.monotonic() - started
        if status is CheckStatus.FAIL:
            self.logger.warning("Check failed.", entry=entry.name, check=check, actual=actual)
        return CheckRow(entry.name, check, expected, actual, status, seconds, entry.citation)

    def _search_config(self, exp: Expectation, check: str) -> SearchConfig:
        budget = self.budget if self.budget is not None else exp.budget(check)
        return SearchConfig(budget_seconds=budget, workers=self.workers)

    @staticmethod
    def _shape(exp: Expectation, complex_: AnyComplex) -> tuple[str, str, bool]:
        pairs = [
            ("vertices", exp.n_vertices, complex_.n_vertices),
            ("facets", exp.n_facets, len(complex_.maximal_faces)),
            ("dim", exp.dimension, complex_.dimension),
        ]
        asserted = [(label, e, a) for label, e, a in pairs if e is not None]
        expected = ", ".join(f"{label} {e}" for label, e, _ in asserted)
        actual = ", ".join(f"{label} {a}" for label, _, a in asserted)
        return expected, actual, all(e == a for _, e, a in asserted)

    @staticmethod
    def _vector(expected: tuple[int, ...], actual: tuple[int, ...]) -> tuple[str, str, bool]:
        return _fmt(expected), _fmt(actual), _same_vector(expected, actual)

    @staticmethod
    def _minimal(exp: Expectation, complex_: AnyComplex) -> tuple[str, str, bool]:
        assert exp.minimal_faces is not None
        actual = " ".join(str(f) for f in minimal_faces(complex_))
        expected = " ".join(exp.minimal_faces)
        return expected, actual, actual == expected

    def _presentation(self, exp: Expectation, complex_: AnyComplex) -> tuple[str, str, bool]:
        assert exp.same_faces_as is not None
        other = self.library.get_entry(exp.same_faces_as).complex
        assert other is not None
        same = other.face_masks == complex_.face_masks
        return f"faces of {exp.same_faces_as}", "identical" if same else "different", same

    def _induced(self, exp: Expectation, complex_: AnyComplex) -> tuple[str, str, bool]:
        assert exp.induced_in is not None
        parent = self.library.get_entry(exp.induced_in).complex
        assert isinstance(parent, SimplicialComplex)
        assert isinstance(complex_, SimplicialComplex)
        check = is_induced(parent, complex_)
        actual = "induced" if check.holds else f"not induced (minimal face {check.witness})"
        return f"induced in {exp.induced_in}", actual, check.holds

    @staticmethod
    def _homology(exp: Expectation, complex_: AnyComplex) -> tuple[str, str, bool]:
        assert exp.homology is not None
        actual = str(reduced_homology(complex_))
        return exp.homology, actual, actual == exp.homology

    def _cm(self, exp: Expectation, complex_: AnyComplex) -> tuple[str, str, bool]:
        verdict = is_cohen_macaulay(complex_, CMConfig(workers=self.workers))
        expected = "CM" if exp.cohen_macaulay else f"not CM (face {exp.cm_witness})"
        if verdict.holds:
            return expected, "CM", bool(exp.cohen_macaulay)
        assert verdict.witness is not None
        actual = f"not CM ({verdict.witness})"
        passed = not exp.cohen_macaulay and (
            exp.cm_witness is None or str(verdict.witness.face) == exp.cm_witness
        )
        return expected, actual, passed

    def _partition(self, exp: Expectation, complex_: AnyComplex) -> tuple[str, str, bool]:
        expected = "SAT" if exp.partitionable else "UNSAT"
        if exp.partitioning is not None:
            given = Partitioning(
                tuple(Interval(Face.parse(r), Face.parse(f)) for r, f in exp.partitioning)
            )
            check = verify_partitioning(complex_, given)
            if not check.holds:
                return expected, f"given partitioning rejected: {check.violation}", False
        outcome = find_partitioning(complex_, self._search_config(exp, "partition"))
        actual = f"{outcome.report.result.value} ({outcome.report.nodes_explored} nodes)"
        if outcome.certificate is None:
            return expected, actual, not exp.partitionable
        check = verify_partitioning(complex_, outcome.certificate)
        consistent = _same_vector(
            h_from_restrictions(outcome.certificate, complex_).entries,
            h_vector(complex_).entries,
        )
        if not check.holds or not consistent:
            return expected, f"{actual}; certificate rejected", False
        return expected, actual, bool(exp.partitionable)

    def _shelling(self, exp: Expectation, complex_: SimplicialComplex) -> ShellingOrder | None:
        if exp.shelling_order is not None:
            check = verify_shelling(complex_, [Face.parse(s) for s in exp.shelling_order])
            return check.certificate
        return find_shelling(complex_, self._search_config(exp, "shell")).certificate

    def _shell(self, exp: Expectation, complex_: SimplicialComplex) -> tuple[str, str, bool]:
        expected = "shellable" if exp.shellable else "not shellable"
        if exp.shelling_order is not None:
            shelling = self._shelling(exp, complex_)
            actual = "given order is a shelling" if shelling else "given order rejected"
        else:
            outcome = find_shelling(complex_, self._search_config(exp, "shell"))
            shelling = outcome.certificate
            actual = f"{outcome.report.result.value} ({outcome.report.nodes_explored} nodes)"
        if shelling is None:
            return expected, actual, not exp.shellable
        h = h_from_restrictions(shelling, complex_).entries
        if not _same_vector(h, h_vector(complex_).entries):
            return expected, f"{actual}; restriction h-vector {_fmt(h)} differs", False
        partition = verify_partitioning(
            complex_, Partitioning(shelling.intervals())
        )
        if not partition.holds:
            return expected, f"{actual}; induced partitioning rejected", False
        return expected, actual, bool(exp.shellable)

    def _constructible(self, entry: CorpusEntry) -> tuple[str, str, bool]:
        exp = entry.expected
        expected = "certificate verifies" if exp.constructible else "no certificate"
        if entry.glued is not None:
            spec = entry.glued.spec
            x_shelling = find_shelling(spec.x).certificate
            a_shelling = find_shelling(spec.a).certificate
            if x_shelling is None or a_shelling is None:
                return expected, "no shelling of the glued parts", False
            cert = glue_constructibility_certificate(entry.glued, x_shelling, a_shelling)
            complex_ = entry.glued.complex
        else:
            complex_ = entry.complex
            assert isinstance(complex_, SimplicialComplex)
            shelling = self._shelling(exp, complex_)
            if shelling is None:
                return expected, "no shelling to derive a certificate from", False
            cert = shelling_to_constructibility(complex_, shelling)
        check = verify_constructibility(complex_, cert)
        actual = (
            f"verified ({cert.internal_nodes} union steps)"
            if check.holds
            else f"rejected: {check.violation}"
        )
        return expected, actual, check.holds == exp.constructible

    @staticmethod
    def _balanced(exp: Expectation, complex_: SimplicialComplex) -> tuple[str, str, bool]:
        check = is_balanced(complex_)
        return _yes(bool(exp.balanced)), _yes(check.holds), check.holds == exp.balanced

    def _automorphism(self, entry: CorpusEntry) -> tuple[str, str, bool]:
        exp = entry.expected
        perm = entry.object
        assert isinstance(perm, VertexPermutation)
        parts_expected: list[str] = []
        parts_actual: list[str] = []
        passed = True
        for name in exp.automorphism_of:
            target = self.library.get_entry(name).complex
            assert target is not None
            holds = is_automorphism(target, perm)
            parts_expected.append(f"automorphism of {name}")
            parts_actual.append(f"automorphism of {name}: {_yes(holds)}")
            passed &= holds
        for name in exp.fixes:
            target = self.library.get_entry(name).complex
            assert target is not None
            holds = apply_permutation(target, perm) == target
            parts_expected.append(f"fixes {name}")
            parts_actual.append(f"fixes {name}: {_yes(holds)}")
            passed &= holds
        for source, image in exp.face_images:
            actual = perm.image(Face.parse(source))
            parts_expected.append(f"{source} -> {image}")
            parts_actual.append(f"{source} -> {actual}")
            passed &= actual == Face.parse(image)
        return "; ".join(parts_expected), "; ".join(parts_actual), passed


def corpus_verify(
    name: str | None = None,
    *,
    skip_slow: bool = False,
    budget: float | None = None,
    workers: int = 1,
) -> CorpusReport:
    """Verify one entry, or the whole corpus when ``name`` is None."""
    verifier = CorpusVerifier(skip_slow=skip_slow, budget=budget, workers=workers)
    return verifier.verify(None if name is None else [name])
