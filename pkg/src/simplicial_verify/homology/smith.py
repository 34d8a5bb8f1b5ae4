"""
Integer Smith normal form.

Only the invariant factors are computed (no transformation matrices). The
elimination runs on a sparse row dictionary with exact Python integers; the
pivot is the nonzero entry of smallest absolute value, ties broken by
(row, column) position.
"""

from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass
from math import gcd

Rows = dict[int, dict[int, int]]
Columns = defaultdict[int, set[int]]


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d_1 | d_2 | ... of an integer matrix (nonzero ones only)."""

    diagonal: tuple[int, ...] = ()

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SmithForm:
    rows: Rows = {}
    cols: Columns = defaultdict(set)
    for r, row in enumerate(matrix):
        entries = {c: int(v) for c, v in enumerate(row) if v}
        if entries:
            rows[r] = entries
            for c in entries:
                cols[c].add(r)

    pivots: list[int] = []
    while rows:
        r, c = _choose_pivot(rows)
        pivots.append(_eliminate(rows, cols, r, c))
    return SmithForm(divisibility_chain(pivots))


def divisibility_chain(values: Sequence[int]) -> tuple[int, ...]:
    """Turn a diagonal into invariant factors via (a, b) -> (gcd, lcm)."""
    d = [abs(v) for v in values if v]
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return tuple(d)


def _choose_pivot(rows: Rows) -> tuple[int, int]:
    best: tuple[int, int, int] | None = None
    for r, entries in rows.items():
        for c, v in entries.items():
            key = (abs(v), r, c)
            if best is None or key < best:
                best = key
        # rows are visited in increasing order, so a unit here cannot be beaten
        if best is not None and best[0] == 1:
            break
    assert best is not None
    return best[1], best[2]


def _add_row(rows: Rows, cols: Columns, src: int, dst: int, factor: int) -> None:
    """row[dst] += factor * row[src]."""
    target = rows[dst]
    for c, v in rows[src].items():
        value = target.get(c, 0) + factor * v
        if value:
            if c not in target:
                cols[c].add(dst)
            target[c] = value
        elif c in target:
            del target[c]
            cols[c].discard(dst)
    if not target:
        del rows[dst]


def _eliminate(rows: Rows, cols: Columns, r: int, c: int) -> int:
    """Reduce row r and column c to the single entry (r, c); return |pivot|."""
    while True:
        p = rows[r][c]
        cleared = True
        for other in sorted(cols[c] - {r}):
            q = rows[other][c] // p
            if q:
                _add_row(rows, cols, r, other, -q)
            if other in rows and c in rows[other]:
                cleared = False
        if not cleared:
            r = min(cols[c], key=lambda x: (abs(rows[x][c]), x))
            continue

        # column c is zero outside row r, so column operations only touch row r
        row = rows[r]
        for other in sorted(k for k in row if k != c):
            remainder = row[other] % p
            if remainder:
                row[other] = remainder
            else:
                del row[other]
                cols[other].discard(r)
        if len(row) > 1:
            c = min(row, key=lambda k: (abs(row[k]), k))
            continue

        del rows[r]
        cols[c].discard(r)
        return abs(p)
