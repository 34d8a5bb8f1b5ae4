"""
Exact cover by Algorithm X on dancing links.

Column choice takes the item with fewest remaining options, ties broken by
item index; options are tried in insertion order. With canonical insertion
order the first solution found is reproducible run to run.
"""

from collections.abc import Sequence

from simplicial_verify.decompose.base import SearchClock


class _Column:
    __slots__ = ("down", "index", "left", "right", "size", "up")

    def __init__(self, index: int) -> None:
        self.index = index
        self.size = 0
        self.left: _Column = self
        self.right: _Column = self
        self.up: _Column | _Node = self
        self.down: _Column | _Node = self


class _Node:
    __slots__ = ("column", "down", "left", "option", "right", "up")

    def __init__(self, column: _Column, option: int) -> None:
        self.column = column
        self.option = option
        self.left: _Node = self
        self.right: _Node = self
        self.up: _Column | _Node = self
        self.down: _Column | _Node = self


class ExactCoverSolver:
    """
    Single-use exact cover solver over items ``0..n_items-1``.

    After a successful ``solve`` the link structure is left covered.
    """

    def __init__(self, n_items: int) -> None:
        self.header = _Column(-1)
        self.columns = [_Column(i) for i in range(n_items)]
        last = self.header
        for col in self.columns:
            col.left = last
            col.right = self.header
            last.right = col
            self.header.left = col
            last = col
        self.n_options = 0

    def add_option(self, items: Sequence[int]) -> int:
        """Append an option covering ``items``; returns its id."""
        option = self.n_options
        self.n_options += 1
        first: _Node | None = None
        for index in sorted(set(items)):
            column = self.columns[index]
            node = _Node(column, option)
            node.down = column
            node.up = column.up
            column.up.down = node
            column.up = node
            column.size += 1
            if first is None:
                first = node
            else:
                node.left = first.left
                node.right = first
                first.left.right = node
                first.left = node
        return option

    def _cover(self, column: _Column) -> None:
        column.right.left = column.left
        column.left.right = column.right
        row = column.down
        while row is not column:
            assert isinstance(row, _Node)
            node = row.right
            while node is not row:
                node.down.up = node.up
                node.up.down = node.down
                node.column.size -= 1
                node = node.right
            row = row.down

    def _uncover(self, column: _Column) -> None:
        row = column.up
        while row is not column:
            assert isinstance(row, _Node)
            node = row.left
            while node is not row:
                node.column.size += 1
                node.down.up = node
                node.up.down = node
                node = node.left
            row = row.up
        column.right.left = column
        column.left.right = column

    def _choose_column(self) -> _Column | None:
        col = self.header.right
        if col is self.header:
            return None
        best = col
        while col is not self.header:
            if col.size < best.size:
                best = col
            col = col.right
        return best

    def _column_rows(self, column: _Column) -> list[_Node]:
        rows: list[_Node] = []
        row = column.down
        while row is not column:
            assert isinstance(row, _Node)
            rows.append(row)
            row = row.down
        return rows

    def _select(self, row: _Node) -> None:
        node = row.right
        while node is not row:
            self._cover(node.column)
            node = node.right

    def _deselect(self, row: _Node) -> None:
        node = row.left
        while node is not row:
            self._uncover(node.column)
            node = node.left

    def _search(self, solution: list[int], clock: SearchClock) -> bool:
        clock.tick()
        column = self._choose_column()
        if column is None:
            return True
        if column.size == 0:
            return False
        self._cover(column)
        for row in self._column_rows(column):
            solution.append(row.option)
            self._select(row)
            if self._search(solution, clock):
                return True
            self._deselect(row)
            solution.pop()
        self._uncover(column)
        return False

    def solve(self, clock: SearchClock) -> list[int] | None:
        """First solution as a list of option ids, or None if none exists."""
        solution: list[int] = []
        return solution if self._search(solution, clock) else None

    def root_branches(self) -> list[int] | None:
        """
        Options tried at the root, in search order.

        None when there is no item left to cover (the empty cover is a solution).
        """
        column = self._choose_column()
        if column is None:
            return None
        return [row.option for row in self._column_rows(column)]

    def solve_branch(self, option: int, clock: SearchClock) -> list[int] | None:
        """Solve the subtree below choosing ``option`` at the root."""
        column = self._choose_column()
        assert column is not None
        row = next(r for r in self._column_rows(column) if r.option == option)
        self._cover(column)
        self._select(row)
        solution = [option]
        return solution if self._search(solution, clock) else None
