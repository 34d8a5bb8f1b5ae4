from dataclasses import dataclass

import structlog

from simplicial_verify.complex import BaseComplex, f_vector
from simplicial_verify.homology.chains import boundary_matrix
from simplicial_verify.homology.smith import SmithForm, smith_normal_form

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class HomologyGroup:
    """H̃_i ≅ Z^betti ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k."""

    dimension: int
    betti: int = 0
    torsion: tuple[int, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __str__(self) -> str:
        parts = (["Z"] if self.betti == 1 else [f"Z^{self.betti}"] if self.betti else [])
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology in every degree -1..d."""

    groups: tuple[HomologyGroup, ...] = ()

    def group(self, dimension: int) -> HomologyGroup:
        for g in self.groups:
            if g.dimension == dimension:
                return g
        return HomologyGroup(dimension)

    def first_nonzero_below(self, bound: int) -> HomologyGroup | None:
        """The lowest nonvanishing group of degree < bound, if any."""
        return next((g for g in self.groups if g.dimension < bound and not g.is_zero), None)

    def is_acyclic_below(self, bound: int) -> bool:
        return self.first_nonzero_below(bound) is None

    @property
    def is_zero(self) -> bool:
        return all(g.is_zero for g in self.groups)

    @property
    def betti_numbers(self) -> tuple[int, ...]:
        return tuple(g.betti for g in self.groups)

    def __str__(self) -> str:
        nonzero = [f"H{g.dimension} = {g}" for g in self.groups if not g.is_zero]
        return "; ".join(nonzero) if nonzero else "acyclic"


def boundary_smith_forms(complex_: BaseComplex) -> dict[int, SmithForm]:
    """Smith forms of ∂_i for 0 <= i <= d+1."""
    return {
        i: smith_normal_form(boundary_matrix(complex_, i).entries)
        for i in range(complex_.dimension + 2)
    }


def reduced_homology(complex_: BaseComplex) -> HomologyProfile:
    """
    betti_i = dim C_i - rank ∂_i - rank ∂_{i+1}; torsion in degree i is the
    nontrivial invariant factors of ∂_{i+1}.

    The void complex has no nonzero group; {∅} has H̃_{-1} = Z.
    """
    forms = boundary_smith_forms(complex_)
    empty = SmithForm()
    groups = []
    for i in range(-1, complex_.dimension + 1):
        n_i = len(complex_.faces_of_dimension(i))
        below = forms.get(i, empty)
        above = forms.get(i + 1, empty)
        groups.append(HomologyGroup(i, n_i - below.rank - above.rank, above.torsion))
    return HomologyProfile(tuple(groups))


def euler_characteristic(complex_: BaseComplex) -> int:
    """Reduced Euler characteristic: sum of (-1)^i f_i over i >= -1."""
    f = f_vector(complex_)
    return sum((-1) ** i * f.f(i) for i in range(-1, complex_.dimension + 1))
