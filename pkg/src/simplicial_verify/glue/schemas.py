"""
Schema classes for the gluing construction.
"""

from dataclasses import dataclass

from simplicial_verify.cm import CMVerdict
from simplicial_verify.complex import InducedCheck, SimplicialComplex, VertexMap
from simplicial_verify.errors import GlueSpecError


@dataclass(frozen=True)
class GlueSpec:
    """N copies of ``x`` identified along the subcomplex ``a``."""

    x: SimplicialComplex
    a: SimplicialComplex
    copies: int

    def __post_init__(self) -> None:
        if self.copies < 1:
            msg = f"Number of copies must be at least 1, got {self.copies}"
            raise GlueSpecError(msg)

    @property
    def k(self) -> int:
        """Number of faces of A, the empty face included."""
        return len(self.a.faces)

    @property
    def codimension(self) -> int:
        return self.x.dimension - self.a.dimension


@dataclass(frozen=True)
class GlueResult:
    """
    The glued complex with its naming.

    ``provenance`` maps every glued vertex index to ``(copy, original vertex)``;
    copy 0 marks a vertex of A, shared by all copies.
    """

    spec: GlueSpec
    complex: SimplicialComplex
    vertex_map: VertexMap
    provenance: dict[int, tuple[int, int]]

    def copy_map(self, copy: int) -> dict[int, int]:
        """Original vertex of X -> glued vertex, for copy ``copy`` (1-based)."""
        if not 1 <= copy <= self.spec.copies:
            msg = f"Copy {copy} out of range 1..{self.spec.copies}"
            raise ValueError(msg)
        return {
            original: index
            for index, (owner, original) in self.provenance.items()
            if owner in {0, copy}
        }


@dataclass(frozen=True)
class GlueHypotheses:
    """
    Which hypotheses of the gluing theorem hold for a spec.

    ``conditions_hold`` covers X and A Cohen-Macaulay with A induced of
    codimension at most one; ``theorem_applies`` also needs more copies than A
    has faces.
    """

    x_cm: CMVerdict
    a_cm: CMVerdict
    subcomplex: bool
    induced: InducedCheck | None
    codimension: int
    k: int
    copies: int

    @property
    def copies_exceed_k(self) -> bool:
        return self.copies > self.k

    @property
    def conditions_hold(self) -> bool:
        return (
            self.x_cm.holds
            and self.a_cm.holds
            and self.subcomplex
            and self.induced is not None
            and self.induced.holds
            and self.codimension <= 1
        )

    @property
    def theorem_applies(self) -> bool:
        return self.conditions_hold and self.copies_exceed_k

    def rows(self) -> list[tuple[str, str, bool]]:
        """(hypothesis, value, satisfied) lines for printing."""
        induced = (
            "n/a"
            if self.induced is None
            else "yes"
            if self.induced.holds
            else f"no (minimal face {self.induced.witness})"
        )
        return [
            ("X Cohen-Macaulay", "yes" if self.x_cm.holds else f"no ({self.x_cm.witness})", self.x_cm.holds),
            ("A Cohen-Macaulay", "yes" if self.a_cm.holds else f"no ({self.a_cm.witness})", self.a_cm.holds),
            ("A subcomplex of X", "yes" if self.subcomplex else "no", self.subcomplex),
            ("A induced in X", induced, self.induced is not None and self.induced.holds),
            ("codimension <= 1", str(self.codimension), self.codimension <= 1),
            ("copies > k", f"{self.copies} > {self.k}", self.copies_exceed_k),
        ]
