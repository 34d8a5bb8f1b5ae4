"""
Shellings: verification of a given facet order and an exhaustive search.

A facet F_j added after F_1..F_{j-1} has the restriction face
    R_j = {v ∈ F_j : F_j − v lies in an earlier facet}.
The new faces of F_j have a unique minimal element iff R_j itself is new, that
is, iff R_j lies in no earlier facet; the new faces are then [R_j, F_j].
"""

import time
from collections.abc import Sequence
from typing import override

from simplicial_verify.complex import Face, SimplicialComplex
from simplicial_verify.complex.operations import require_pure
from simplicial_verify.decompose.base import BaseSearch, SearchClock
from simplicial_verify.decompose.config import SearchConfig
from simplicial_verify.decompose.schemas import CheckResult, SearchOutcome, ShellingOrder
from simplicial_verify.errors import MalformedCertificateError, SearchBudgetExceededError


def restriction_mask(facet: int, earlier: Sequence[int]) -> int:
    """Bitmask of R for ``facet`` attached after the facets ``earlier``."""
    r = 0
    bits = facet
    while bits:
        bit = bits & -bits
        bits ^= bit
        ridge = facet & ~bit
        if any(ridge & ~e == 0 for e in earlier):
            r |= bit
    return r


def is_shelling_step(facet: int, earlier: Sequence[int]) -> tuple[bool, int]:
    r = restriction_mask(facet, earlier)
    return not any(r & ~e == 0 for e in earlier), r


def minimal_new_faces(facet: Face, earlier: Sequence[Face]) -> list[Face]:
    new = [f for f in facet.subsets() if not any(f.issubset(e) for e in earlier)]
    return [f for f in new if not any(g != f and g.issubset(f) for g in new)]


def _check_permutation(complex_: SimplicialComplex, order: Sequence[Face]) -> None:
    if len(order) != len(set(order)):
        msg = "Facet order lists a facet twice"
        raise MalformedCertificateError(msg)
    if set(order) != complex_.facets:
        unknown = sorted(set(order) - complex_.facets)
        missing = sorted(complex_.facets - set(order))
        detail = f"{unknown[0]} is not a facet" if unknown else f"facet {missing[0]} is missing"
        msg = f"Facet order is not a permutation of the facets: {detail}"
        raise MalformedCertificateError(msg)


def verify_shelling(
    complex_: SimplicialComplex, order: Sequence[Face]
) -> CheckResult[ShellingOrder]:
    """
    Check a facet order step by step and return all restriction faces.

    The violation names the first bad step and its minimal new faces.
    """
    require_pure(complex_)
    _check_permutation(complex_, order)
    masks = [f.mask for f in order]
    restrictions: list[Face] = []
    for j, facet in enumerate(order):
        ok, r = is_shelling_step(masks[j], masks[:j])
        if not ok:
            minimal = " ".join(str(f) for f in minimal_new_faces(facet, order[:j]))
            return CheckResult(
                holds=False,
                violation=f"step {j + 1} ({facet}): new faces have minimal elements {minimal}",
            )
        restrictions.append(Face.from_mask(r))
    return CheckResult(holds=True, certificate=ShellingOrder(tuple(order), tuple(restrictions)))


class ShellingSearch(BaseSearch[ShellingOrder]):
    """
    Depth-first search over facet orders.

    Whether a facet may come next depends only on the set of facets already
    placed, so sets from which no completion exists are remembered and never
    re-entered. Candidates are tried in canonical facet order. The search runs
    in a single process.
    """

    name = "shelling"

    @override
    def run(self, complex_: SimplicialComplex) -> SearchOutcome[ShellingOrder]:
        require_pure(complex_)
        started = time.monotonic()
        facets = complex_.maximal_faces
        masks = complex_.facet_masks
        n = len(facets)
        if self.config.workers > 1:
            self.logger.debug("Shelling search runs sequentially.", workers=self.config.workers)

        clock = SearchClock(self.deadline(started), self.config.check_interval)
        dead: set[int] = set()
        order: list[int] = []
        candidates = 0

        def extend(used: int) -> bool:
            nonlocal candidates
            clock.tick()
            if len(order) == n:
                return True
            earlier = [masks[i] for i in order]
            for i in range(n):
                if used >> i & 1:
                    continue
                candidates += 1
                ok, _ = is_shelling_step(masks[i], earlier)
                if not ok:
                    continue
                nxt = used | 1 << i
                if nxt in dead:
                    continue
                order.append(i)
                if extend(nxt):
                    return True
                order.pop()
                dead.add(nxt)
            return False

        try:
            found = extend(0)
        except SearchBudgetExceededError as e:
            raise self._budget_error(e, clock.nodes, candidates, started) from e

        certificate = None
        if found:
            result = verify_shelling(complex_, [facets[i] for i in order])
            certificate = result.certificate
        self.logger.debug("Dead facet sets recorded.", dead=len(dead))
        return self._outcome(certificate, clock.nodes, candidates, started)


def find_shelling(
    complex_: SimplicialComplex, config: SearchConfig | None = None
) -> SearchOutcome[ShellingOrder]:
    return ShellingSearch(config).run(complex_)
