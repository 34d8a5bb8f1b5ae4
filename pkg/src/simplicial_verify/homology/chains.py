from dataclasses import dataclass

from simplicial_verify.complex import BaseComplex, Face


@dataclass(frozen=True)
class BoundaryMatrix:
    """
    Dense matrix of ∂_i : C_i -> C_{i-1} of the augmented chain complex.

    Rows are the faces of dimension i-1, columns the faces of dimension i, both
    in canonical order and both restricted to faces of the (relative) complex.
    """

    dimension: int
    rows: tuple[Face, ...]
    cols: tuple[Face, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def compose(self, other: "BoundaryMatrix") -> list[list[int]]:
        """The product self · other (∂_{i-1} · ∂_i when self is ∂_{i-1})."""
        n_inner = len(self.cols)
        return [
            [
                sum(self.entries[r][k] * other.entries[k][c] for k in range(n_inner))
                for c in range(len(other.cols))
            ]
            for r in range(len(self.rows))
        ]


def boundary_matrix(complex_: BaseComplex, dimension: int) -> BoundaryMatrix:
    """
    Entry (τ, σ) is (-1)^j when τ = σ minus its j-th vertex, 0 otherwise.

    ∂_0 is the augmentation (all ones) when ∅ is a face; dimensions outside
    the complex give empty matrices.
    """
    rows = complex_.faces_of_dimension(dimension - 1)
    cols = complex_.faces_of_dimension(dimension)
    position = {face: i for i, face in enumerate(rows)}
    dense = [[0] * len(cols) for _ in rows]
    for c, sigma in enumerate(cols):
        for j, v in enumerate(sigma.vertices):
            r = position.get(sigma.without(v))
            if r is not None:
                dense[r][c] = -1 if j % 2 else 1
    return BoundaryMatrix(dimension, rows, cols, tuple(tuple(row) for row in dense))
