"""
Partitionability: verification of partitionings and an exact search.

The search is an exact cover problem. Items are the faces of Φ; options are the
intervals [R, F] with F a facet and R ⊆ F a face of Φ. For a relative complex
(Δ, Γ), convexity makes R ∉ Γ equivalent to [R, F] ⊆ Φ. Every facet F is
covered only by intervals with top F, so "each facet is a top exactly once"
follows from the cover and is not encoded.
"""

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from multiprocessing import Manager
from dataclasses import dataclass
from typing import override

from simplicial_verify.complex import AnyComplex, Face, RelativeComplex
from simplicial_verify.complex.operations import require_pure
from simplicial_verify.decompose.base import BaseSearch, CancelFlag, SearchClock
from simplicial_verify.decompose.config import SearchConfig
from simplicial_verify.decompose.exact_cover import ExactCoverSolver
from simplicial_verify.decompose.schemas import (
    CheckResult,
    Interval,
    Partitioning,
    SearchOutcome,
    ShellingOrder,
)
from simplicial_verify.errors import (
    MalformedCertificateError,
    SearchBudgetExceededError,
    SearchCancelledError,
)


@dataclass(frozen=True)
class CoverProblem:
    """The exact cover instance of a complex, in canonical order."""

    items: tuple[Face, ...]
    options: tuple[Interval, ...]
    rows: tuple[tuple[int, ...], ...]


def partition_problem(complex_: AnyComplex) -> CoverProblem:
    items = complex_.faces
    position = {face.mask: i for i, face in enumerate(items)}
    options: list[Interval] = []
    rows: list[tuple[int, ...]] = []
    for top in complex_.maximal_faces:
        for bottom in top.subsets():
            if bottom not in complex_:
                continue
            interval = Interval(bottom, top)
            options.append(interval)
            rows.append(tuple(position[f.mask] for f in interval.faces()))
    return CoverProblem(tuple(items), tuple(options), tuple(rows))


def _build_solver(n_items: int, rows: tuple[tuple[int, ...], ...]) -> ExactCoverSolver:
    solver = ExactCoverSolver(n_items)
    for row in rows:
        solver.add_option(row)
    return solver


def _search_branch(
    n_items: int,
    rows: tuple[tuple[int, ...], ...],
    option: int,
    deadline: float | None,
    interval: int,
    cancel: CancelFlag | None = None,
) -> tuple[list[int] | None, int, bool]:
    """
    Worker entry point: (solution, nodes, stopped) for one root branch.

    ``stopped`` is set when the budget ran out or a sibling settled the search.
    """
    clock = SearchClock(deadline, interval, cancel)
    solver = _build_solver(n_items, rows)
    try:
        solution = solver.solve_branch(option, clock)
    except (SearchBudgetExceededError, SearchCancelledError):
        return None, clock.nodes, True
    return solution, clock.nodes, False


class PartitionSearch(BaseSearch[Partitioning]):
    """Exhaustive partitionability search for pure absolute or relative complexes."""

    name = "partition"

    @override
    def run(self, complex_: AnyComplex) -> SearchOutcome[Partitioning]:
        require_pure(complex_)
        started = time.monotonic()
        problem = partition_problem(complex_)
        self.logger.debug(
            "Exact cover built.", items=len(problem.items), options=len(problem.options)
        )
        deadline = self.deadline(started)
        if self.config.workers > 1:
            solution, nodes = self._run_parallel(problem, deadline, started)
        else:
            clock = SearchClock(deadline, self.config.check_interval)
            solver = _build_solver(len(problem.items), problem.rows)
            try:
                solution = solver.solve(clock)
            except SearchBudgetExceededError as e:
                raise self._budget_error(e, clock.nodes, len(problem.options), started) from e
            nodes = clock.nodes

        certificate = None
        if solution is not None:
            intervals = sorted((problem.options[i] for i in solution), key=lambda i: i.top)
            certificate = Partitioning(tuple(intervals))
        return self._outcome(certificate, nodes, len(problem.options), started)

    def _run_parallel(
        self, problem: CoverProblem, deadline: float | None, started: float
    ) -> tuple[list[int] | None, int]:
        """
        Fan the root branches out to worker processes.

        The answer is the first SAT branch in search order and the node count is
        what the sequential search would report: the root plus every branch up
        to and including the winner. Once the answer is settled, the branches
        still running see the shared stop flag within one clock interval.
        """
        solver = _build_solver(len(problem.items), problem.rows)
        branches = solver.root_branches()
        if branches is None:
            return [], 1
        nodes = 1
        with Manager() as manager, ProcessPoolExecutor(max_workers=self.config.workers) as pool:
            stop = manager.Event()
            futures = [
                pool.submit(
                    _search_branch,
                    len(problem.items),
                    problem.rows,
                    option,
                    deadline,
                    self.config.check_interval,
                    stop,
                )
                for option in branches
            ]
            try:
                for future in futures:
                    solution, branch_nodes, stopped = future.result()
                    nodes += branch_nodes
                    # earlier branches are all read, so only the budget stops this one
                    if stopped:
                        error = SearchBudgetExceededError("Search budget exhausted", report=None)
                        raise self._budget_error(error, nodes, len(problem.options), started)
                    if solution is not None:
                        return solution, nodes
            finally:
                stop.set()
                for pending in futures:
                    pending.cancel()
        return None, nodes


def find_partitioning(
    complex_: AnyComplex, config: SearchConfig | None = None
) -> SearchOutcome[Partitioning]:
    return PartitionSearch(config).run(complex_)


def verify_partitioning(complex_: AnyComplex, partitioning: Partitioning) -> CheckResult[Partitioning]:
    """
    Check tops = facets, containment in Φ, disjointness and coverage, in that
    order; the first violation is reported.
    """
    require_pure(complex_)
    for interval in partitioning.intervals:
        if not interval.bottom.issubset(interval.top):
            msg = f"Interval {interval} has bottom outside top"
            raise MalformedCertificateError(msg)

    tops = Counter(partitioning.tops)
    for facet in complex_.maximal_faces:
        if tops[facet] == 0:
            return CheckResult(holds=False, violation=f"facet {facet} is not the top of any interval")
        if tops[facet] > 1:
            return CheckResult(holds=False, violation=f"facet {facet} is the top of {tops[facet]} intervals")
    extra = sorted(set(tops) - set(complex_.maximal_faces))
    if extra:
        return CheckResult(holds=False, violation=f"interval top {extra[0]} is not a facet")

    covered: Counter[Face] = Counter()
    for interval in partitioning.intervals:
        for face in interval.faces():
            if face not in complex_:
                where = "lies in the removed subcomplex" if isinstance(complex_, RelativeComplex) else "is not a face"
                return CheckResult(holds=False, violation=f"face {face} of {interval} {where}")
            covered[face] += 1

    for face in complex_.faces:
        if covered[face] > 1:
            return CheckResult(holds=False, violation=f"face {face} is covered {covered[face]} times")
    for face in complex_.faces:
        if covered[face] == 0:
            return CheckResult(holds=False, violation=f"face {face} is not covered")
    return CheckResult(holds=True, certificate=partitioning)


def partitioning_from_shelling(shelling: ShellingOrder) -> Partitioning:
    """The partitioning [R_j, F_j] induced by a shelling."""
    return Partitioning(shelling.intervals())
