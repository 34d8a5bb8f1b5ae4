"""
Elementary combinatorics on absolute and relative complexes: links, induced
subcomplexes, closures, relabelings, automorphisms and balancedness.
"""

from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

import structlog

from simplicial_verify.complex.base import BaseComplex
from simplicial_verify.complex.face import Face, VertexPermutation
from simplicial_verify.complex.relative import RelativeComplex
from simplicial_verify.complex.simplicial import SimplicialComplex, maximal_masks
from simplicial_verify.errors import (
    InvalidFaceError,
    NotPureError,
    NotSubcomplexError,
    PermutationError,
)

logger = structlog.get_logger(__name__)

AnyComplex = SimplicialComplex | RelativeComplex


def enumerate_faces(complex_: BaseComplex) -> list[Face]:
    """Every face exactly once, by dimension then lexicographic."""
    return list(complex_.faces)


def link(complex_: AnyComplex, face: Face) -> AnyComplex:
    """
    link(σ) = {τ : τ∩σ = ∅, τ∪σ ∈ Δ}.

    For a relative complex the result is the pair (link_Δ(σ), link_Γ(σ)). The
    link of a facet is the trivial complex; the link of a non-face is void.
    """
    if isinstance(complex_, RelativeComplex):
        return RelativeComplex(link(complex_.closure, face), link(complex_.removed, face))
    m = face.mask
    containing = [f for f in complex_.facet_masks if m & ~f == 0]
    if not containing:
        return SimplicialComplex.void()
    # facets through σ form an antichain, so do their differences with σ
    return SimplicialComplex(frozenset(Face.from_mask(f & ~m) for f in containing))


def induced_subcomplex(complex_: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    """Δ|_W: all faces of Δ contained in W."""
    w = Face.of(vertices).mask
    if complex_.is_void:
        return SimplicialComplex.void()
    return SimplicialComplex(
        frozenset(Face.from_mask(m) for m in maximal_masks(f & w for f in complex_.facet_masks))
    )


def intersection(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    if first.is_void or second.is_void:
        return SimplicialComplex.void()
    masks = maximal_masks(f & g for f in first.facet_masks for g in second.facet_masks)
    return SimplicialComplex(frozenset(Face.from_mask(m) for m in masks))


def union(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex.from_facets(first.facets | second.facets)


def cone(complex_: SimplicialComplex, apex: int) -> SimplicialComplex:
    """Cone over a new vertex ``apex``."""
    if apex in complex_.vertices:
        msg = f"Cone apex {apex} is already a vertex"
        raise InvalidFaceError(msg)
    bit = Face((apex,)).mask
    return SimplicialComplex(frozenset(Face.from_mask(f | bit) for f in complex_.facet_masks))


def combinatorial_closure(
    relative: RelativeComplex,
) -> tuple[SimplicialComplex, SimplicialComplex]:
    """
    The canonical pair (Φ̄, Φ̄∖Φ) of a relative complex.

    Φ̄ is generated by the maximal faces of Φ; Φ̄∖Φ = Φ̄ ∩ Γ is a subcomplex of
    strictly smaller dimension.
    """
    closure = SimplicialComplex(frozenset(relative.maximal_faces))
    return closure, intersection(closure, relative.removed)


def minimal_faces(complex_: BaseComplex) -> list[Face]:
    """Faces none of whose codimension-one subfaces lie in the complex."""
    return [
        f
        for f in complex_.faces
        if not any(f.without(v) in complex_ for v in f)
    ]


@dataclass(frozen=True)
class InducedCheck:
    holds: bool
    witness: Face | None = None


def is_induced(complex_: SimplicialComplex, sub: SimplicialComplex) -> InducedCheck:
    """
    Whether ``sub`` = X|vertices(sub); equivalently every minimal face of X∖sub
    is a vertex. The witness is the first minimal face of X∖sub that is not.
    """
    if not complex_.contains_complex(sub):
        msg = "Second complex is not a subcomplex of the first"
        raise NotSubcomplexError(msg)
    for face in minimal_faces(RelativeComplex(complex_, sub)):
        if face.dimension != 0:
            return InducedCheck(holds=False, witness=face)
    return InducedCheck(holds=True)


def relabel(complex_: AnyComplex, mapping: Mapping[int, int]) -> AnyComplex:
    """Apply an injective vertex map defined on every vertex of the complex."""
    if isinstance(complex_, RelativeComplex):
        return RelativeComplex(
            relabel(complex_.closure, mapping), relabel(complex_.removed, mapping)
        )
    missing = sorted(v for v in complex_.vertices if v not in mapping)
    if missing:
        msg = f"Vertex map is undefined on {missing}"
        raise InvalidFaceError(msg)
    images = [mapping[v] for v in complex_.vertices]
    if len(set(images)) != len(images):
        msg = "Vertex map is not injective"
        raise InvalidFaceError(msg)
    return SimplicialComplex(frozenset(Face.of(mapping[v] for v in f) for f in complex_.facets))


def apply_permutation(complex_: AnyComplex, permutation: VertexPermutation) -> AnyComplex:
    """Relabel by a permutation that must map the vertex set onto itself."""
    vertices = complex_.closure.vertices if isinstance(complex_, RelativeComplex) else complex_.vertices
    mapping = {v: permutation(v) for v in vertices}
    if set(mapping.values()) != vertices:
        outside = sorted(set(mapping.values()) - vertices)
        msg = f"Permutation {permutation} is not a bijection on the vertex set (moves onto {outside})"
        raise PermutationError(msg)
    return relabel(complex_, mapping)


def is_automorphism(complex_: AnyComplex, permutation: VertexPermutation) -> bool:
    image = apply_permutation(complex_, permutation)
    if isinstance(complex_, RelativeComplex):
        return image.face_masks == complex_.face_masks
    return image == complex_


def ridge_degrees(complex_: SimplicialComplex) -> dict[Face, int]:
    """How many facets contain each codimension-one face of a pure complex."""
    require_pure(complex_)
    counts: Counter[Face] = Counter()
    for facet in complex_.facets:
        for v in facet:
            counts[facet.without(v)] += 1
    return dict(sorted(counts.items()))


def boundary_complex(complex_: SimplicialComplex) -> SimplicialComplex:
    """The subcomplex generated by ridges lying in exactly one facet."""
    if complex_.dimension < 0:
        return SimplicialComplex.void()
    ridges = [r for r, n in ridge_degrees(complex_).items() if n == 1]
    return SimplicialComplex.from_facets(ridges)


@dataclass(frozen=True)
class BalanceCheck:
    holds: bool
    coloring: dict[int, int] | None = None


def is_balanced(complex_: SimplicialComplex) -> BalanceCheck:
    """
    Whether the vertices admit a (d+1)-coloring making every facet rainbow.

    For a pure complex this is a proper (d+1)-coloring of the 1-skeleton.
    Exhaustive backtracking in vertex order; a vertex may only open the next
    unused color, which removes color-permutation symmetry.
    """
    require_pure(complex_)
    n_colors = complex_.dimension + 1
    order = sorted(complex_.vertices)
    neighbours: dict[int, set[int]] = {v: set() for v in order}
    for facet in complex_.facets:
        for v in facet:
            neighbours[v].update(u for u in facet if u != v)
    coloring: dict[int, int] = {}

    def assign(position: int, used: int) -> bool:
        if position == len(order):
            return True
        v = order[position]
        taken = {coloring[u] for u in neighbours[v] if u in coloring}
        for color in range(min(n_colors, used + 1)):
            if color in taken:
                continue
            coloring[v] = color
            if assign(position + 1, max(used, color + 1)):
                return True
            del coloring[v]
        return False

    if not assign(0, 0):
        logger.debug("No balanced coloring.", colors=n_colors)
        return BalanceCheck(holds=False)
    return BalanceCheck(holds=True, coloring=dict(coloring))


def require_pure(complex_: BaseComplex) -> None:
    if not complex_.is_pure:
        dims = sorted({f.dimension for f in complex_.maximal_faces})
        msg = f"Complex is not pure (facet dimensions {dims})"
        raise NotPureError(msg)
