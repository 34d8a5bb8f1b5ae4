"""
f- and h-vectors.

For a (relative) complex of dimension d the f-vector is (f_{-1}, ..., f_d) and
the h-vector (h_0, ..., h_{d+1}) with
    h_k = sum_{i=0}^{k} (-1)^(k-i) C(d+1-i, k-i) f_{i-1}.
"""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from math import comb

from simplicial_verify.complex.base import BaseComplex


@dataclass(frozen=True)
class FVector:
    """Face counts; ``entries[0]`` is f_{-1}."""

    entries: tuple[int, ...]

    def f(self, i: int) -> int:
        """f_i, for -1 <= i <= d (0 outside)."""
        j = i + 1
        return self.entries[j] if 0 <= j < len(self.entries) else 0

    @property
    def dimension(self) -> int:
        return len(self.entries) - 2

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __add__(self, other: "FVector") -> "FVector":
        n = max(len(self), len(other))
        return FVector(tuple(self.f(i - 1) + other.f(i - 1) for i in range(n)))

    def __sub__(self, other: "FVector") -> "FVector":
        n = max(len(self), len(other))
        return FVector(tuple(self.f(i - 1) - other.f(i - 1) for i in range(n)))

    def scaled(self, factor: int) -> "FVector":
        return FVector(tuple(factor * x for x in self.entries))

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.entries) + ")"


@dataclass(frozen=True)
class HVector:
    """``entries[k]`` is h_k, 0 <= k <= d+1."""

    entries: tuple[int, ...]

    def h(self, k: int) -> int:
        return self.entries[k] if 0 <= k < len(self.entries) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.entries) + ")"


def f_vector(complex_: BaseComplex) -> FVector:
    d = complex_.dimension
    counts = [0] * (d + 2)
    for face in complex_.faces:
        counts[face.dimension + 1] += 1
    return FVector(tuple(counts))


def h_from_f(f: Sequence[int]) -> HVector:
    d = len(f) - 2
    h = [
        sum((-1) ** (k - i) * comb(d + 1 - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 2)
    ]
    return HVector(tuple(h))


def f_from_h(h: Sequence[int]) -> FVector:
    """Inverse transform: f_{j-1} = sum_{i=0}^{j} C(d+1-i, j-i) h_i."""
    d = len(h) - 2
    f = [sum(comb(d + 1 - i, j - i) * h[i] for i in range(j + 1)) for j in range(d + 2)]
    return FVector(tuple(f))


def h_vector(complex_: BaseComplex) -> HVector:
    """Computed for any complex; the standard interpretation needs purity."""
    return h_from_f(f_vector(complex_).entries)


def h_vector_obstruction(h: HVector | Sequence[int]) -> str | None:
    """
    Reason why ``h`` cannot be the h-vector of a Cohen-Macaulay complex, or None.

    Checks the two conditions CM h-vectors satisfy: every entry is
    non-negative, and once an entry after the first positive one is zero, all
    later entries are zero. Leading zeros occur for relative complexes.
    """
    entries = tuple(h)
    for k, x in enumerate(entries):
        if x < 0:
            return f"h_{k} = {x} is negative"
    first = next((k for k, x in enumerate(entries) if x > 0), len(entries))
    for k, x in enumerate(entries):
        if k > first and x == 0:
            later = [(j, y) for j, y in enumerate(entries) if j > k and y > 0]
            if later:
                j, y = later[0]
                return f"h_{k} = 0 but h_{j} = {y} > 0"
    return None
