"""
Faces, vertex labels and vertex permutations.

A face is stored both as a strictly increasing tuple of vertex indices and as an
integer bitmask; the bitmask drives every subset test in the search kernels.
"""

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property, total_ordering

from simplicial_verify.errors import InvalidFaceError, PermutationError


@total_ordering
@dataclass(frozen=True)
class Face:
    """An immutable finite set of vertex indices, in canonical (sorted) form."""

    vertices: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        previous = -1
        for v in self.vertices:
            if v < 0:
                msg = f"Negative vertex index {v} in face {self.vertices}"
                raise InvalidFaceError(msg)
            if v <= previous:
                msg = f"Face vertices must be strictly increasing: {self.vertices}"
                raise InvalidFaceError(msg)
            previous = v

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "Face":
        """Build a face from any iterable of vertex indices (duplicates merged)."""
        vs = list(vertices)
        for v in vs:
            if v < 0:
                msg = f"Negative vertex index {v}"
                raise InvalidFaceError(msg)
        return cls(tuple(sorted(set(vs))))

    @classmethod
    def from_mask(cls, mask: int) -> "Face":
        vertices: list[int] = []
        while mask:
            low = mask & -mask
            vertices.append(low.bit_length() - 1)
            mask ^= low
        return cls(tuple(vertices))

    @classmethod
    def parse(cls, text: str) -> "Face":
        """Parse the compact digit form (``"0237"``) or a separated list (``"1-12"``)."""
        text = text.strip()
        if text in {"", "∅", "{}"}:
            return cls()
        for sep in ("-", " ", ","):
            if sep in text:
                return cls.of(int(t) for t in text.split(sep) if t)
        return cls.of(int(ch) for ch in text)

    @cached_property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    @property
    def dimension(self) -> int:
        return len(self.vertices) - 1

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Canonical order: by dimension, then lexicographic."""
        return (len(self.vertices), self.vertices)

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Face):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.vertices

    def issubset(self, other: "Face") -> bool:
        return self.mask & ~other.mask == 0

    def union(self, other: "Face") -> "Face":
        return Face.from_mask(self.mask | other.mask)

    def intersection(self, other: "Face") -> "Face":
        return Face.from_mask(self.mask & other.mask)

    def difference(self, other: "Face") -> "Face":
        return Face.from_mask(self.mask & ~other.mask)

    def without(self, vertex: int) -> "Face":
        return Face(tuple(v for v in self.vertices if v != vertex))

    def subsets(self) -> list["Face"]:
        """All subsets, in canonical order."""
        subs: list[Face] = []
        m = self.mask
        sub = m
        while True:
            subs.append(Face.from_mask(sub))
            if sub == 0:
                break
            sub = (sub - 1) & m
        return sorted(subs)

    def __str__(self) -> str:
        if not self.vertices:
            return "∅"
        if all(v < 10 for v in self.vertices):  # noqa: PLR2004
            return "".join(str(v) for v in self.vertices)
        return "-".join(str(v) for v in self.vertices)


def canonical_faces(faces: Iterable[Face]) -> list[Face]:
    return sorted(faces)


@dataclass(frozen=True)
class VertexMap:
    """
    Bijection between external vertex names and internal indices.

    Documents index their labels densely by position, whatever the labels look
    like, so face masks stay as wide as the vertex count.
    """

    pairs: tuple[tuple[str, int], ...]
    _by_label: dict[str, int] = field(init=False, repr=False, compare=False)
    _by_index: dict[int, str] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        by_label: dict[str, int] = {}
        by_index: dict[int, str] = {}
        for label, index in self.pairs:
            if label in by_label:
                msg = f"Duplicate vertex label {label!r}"
                raise InvalidFaceError(msg)
            if index in by_index:
                msg = f"Vertex index {index} has two labels"
                raise InvalidFaceError(msg)
            if index < 0:
                msg = f"Negative vertex index {index}"
                raise InvalidFaceError(msg)
            by_label[label] = index
            by_index[index] = label
        object.__setattr__(self, "_by_label", by_label)
        object.__setattr__(self, "_by_index", by_index)

    @classmethod
    def from_labels(cls, labels: Sequence[str]) -> "VertexMap":
        return cls(tuple((label, i) for i, label in enumerate(labels)))

    @classmethod
    def identity(cls, indices: Iterable[int]) -> "VertexMap":
        return cls(tuple((str(i), i) for i in sorted(set(indices))))

    def index(self, label: str) -> int:
        try:
            return self._by_label[label]
        except KeyError as e:
            msg = f"Unknown vertex label {label!r}"
            raise InvalidFaceError(msg) from e

    def label(self, index: int) -> str:
        try:
            return self._by_index[index]
        except KeyError as e:
            msg = f"No label for vertex index {index}"
            raise InvalidFaceError(msg) from e

    def has_label(self, label: str) -> bool:
        return label in self._by_label

    @property
    def labels(self) -> list[str]:
        return [self._by_index[i] for i in sorted(self._by_index)]

    def face(self, labels: Iterable[str]) -> Face:
        return Face.of(self.index(label) for label in labels)

    def names(self, face: Face) -> list[str]:
        return [self.label(v) for v in face]

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class VertexPermutation:
    """
    A permutation of vertex indices; vertices outside the domain are fixed.

    Stored as sorted ``(source, image)`` pairs so the value is hashable.
    """

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        sources = [s for s, _ in self.pairs]
        images = [t for _, t in self.pairs]
        if len(set(sources)) != len(sources):
            msg = f"Permutation defines a vertex twice: {self.pairs}"
            raise PermutationError(msg)
        if set(sources) != set(images):
            msg = f"Permutation is not a bijection on its domain: {self.pairs}"
            raise PermutationError(msg)
        if any(v < 0 for v in sources):
            msg = "Permutation contains a negative vertex index"
            raise PermutationError(msg)

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "VertexPermutation":
        return cls(tuple(sorted((s, t) for s, t in mapping.items() if s != t)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> "VertexPermutation":
        """Build from disjoint cycles, e.g. ``[(0, 7), (2, 4), (6, 8)]``."""
        mapping: dict[int, int] = {}
        for cycle in cycles:
            for i, v in enumerate(cycle):
                if v in mapping:
                    msg = f"Cycles are not disjoint at vertex {v}"
                    raise PermutationError(msg)
                mapping[v] = cycle[(i + 1) % len(cycle)]
        return cls.from_mapping(mapping)

    @classmethod
    def identity(cls) -> "VertexPermutation":
        return cls()

    @cached_property
    def mapping(self) -> dict[int, int]:
        return dict(self.pairs)

    def __call__(self, vertex: int) -> int:
        return self.mapping.get(vertex, vertex)

    def image(self, face: Face) -> Face:
        return Face.of(self(v) for v in face)

    def inverse(self) -> "VertexPermutation":
        return VertexPermutation(tuple(sorted((t, s) for s, t in self.pairs)))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        result: list[tuple[int, ...]] = []
        for start, _ in self.pairs:
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            v = self(start)
            while v != start:
                cycle.append(v)
                seen.add(v)
                v = self(v)
            result.append(tuple(cycle))
        return result

    def __str__(self) -> str:
        if not self.pairs:
            return "id"
        return "".join("(" + " ".join(str(v) for v in c) + ")" for c in self.cycles())
