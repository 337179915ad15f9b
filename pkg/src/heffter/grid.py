"""Partially filled integer grids, diagonals, line orderings and partial sums.

A grid is an m x n array in which some cells hold a nonzero integer and the
rest are empty.  Rows and columns are indexed from 0; all cell arithmetic is
done modulo the grid order while entries are exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Literal, Mapping, Sequence

Cell = tuple[int, int]
LineKind = Literal["row", "col"]


def diagonal_cells(n: int, d: int) -> list[Cell]:
    """Cells of diagonal d of an n x n grid: (i+d mod n, i) for i in 0..n-1."""
    if not 0 <= d < n:
        raise ValueError(f"diagonal label {d} out of range for order {n}")
    return [((i + d) % n, i) for i in range(n)]


@dataclass(frozen=True)
class HeffterGrid:
    """Immutable partially filled integer matrix.

    ``entries`` maps (row, col) to a nonzero integer.  Empty cells are simply
    absent from the mapping; an empty cell contributes 0 to any sum.
    """

    m: int
    n: int
    entries: Mapping[Cell, int]

    def __post_init__(self) -> None:
        if self.m <= 0 or self.n <= 0:
            raise ValueError("grid dimensions must be positive")
        for (i, j), e in self.entries.items():
            if e == 0:
                raise ValueError(f"cell ({i},{j}) holds 0; empty cells must be absent")
            if not (0 <= i < self.m and 0 <= j < self.n):
                raise ValueError(f"cell ({i},{j}) outside {self.m}x{self.n} grid")
        object.__setattr__(self, "entries", dict(self.entries))

    # -- basic queries ---------------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.m == self.n

    def entry(self, i: int, j: int) -> int | None:
        return self.entries.get((i, j))

    def entry_or_zero(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def row_cells(self, a: int) -> list[Cell]:
        """Filled cells of row a, by increasing column."""
        self._check_line("row", a)
        return sorted((c for c in self.entries if c[0] == a), key=lambda c: c[1])

    def col_cells(self, a: int) -> list[Cell]:
        """Filled cells of column a, by increasing row."""
        self._check_line("col", a)
        return sorted((c for c in self.entries if c[1] == a), key=lambda c: c[0])

    def line_cells(self, kind: LineKind, a: int) -> list[Cell]:
        return self.row_cells(a) if kind == "row" else self.col_cells(a)

    def _check_line(self, kind: LineKind, a: int) -> None:
        bound = self.m if kind == "row" else self.n
        if not 0 <= a < bound:
            raise ValueError(f"{kind} index {a} out of range")

    def fills_per_row(self) -> list[int]:
        counts = [0] * self.m
        for i, _ in self.entries:
            counts[i] += 1
        return counts

    def fills_per_col(self) -> list[int]:
        counts = [0] * self.n
        for _, j in self.entries:
            counts[j] += 1
        return counts

    def line_sum(self, kind: LineKind, a: int) -> int:
        """Exact integer sum of the filled entries on one row or column."""
        self._check_line(kind, a)
        axis = 0 if kind == "row" else 1
        return sum(e for c, e in self.entries.items() if c[axis] == a)

    def support(self) -> tuple[set[int], list[int]]:
        """Absolute values of all entries, plus the values x with both +x and -x present."""
        seen: set[int] = set()
        conflicts: set[int] = set()
        values = set(self.entries.values())
        for e in values:
            if -e in values:
                conflicts.add(abs(e))
            seen.add(abs(e))
        return seen, sorted(conflicts)

    def diagonal_entry(self, d: int, kind: LineKind, a: int) -> int:
        """Entry of diagonal d on row/column a; 0 when the cell is empty.

        Defined for square grids only: for row a the cell is (a, a-d),
        for column a it is (a+d, a).
        """
        if not self.is_square:
            raise ValueError("diagonals are defined for square grids only")
        n = self.n
        if kind == "row":
            return self.entry_or_zero(a, (a - d) % n)
        return self.entry_or_zero((a + d) % n, a)

    def nonempty_diagonals(self) -> list[int]:
        if not self.is_square:
            raise ValueError("diagonals are defined for square grids only")
        return sorted({(i - j) % self.n for i, j in self.entries})


# -- line orderings ------------------------------------------------------


def natural_order(grid: HeffterGrid, kind: LineKind, a: int) -> list[Cell]:
    """Left-to-right for rows, top-to-bottom for columns."""
    return grid.line_cells(kind, a)


def diagonal_order(grid: HeffterGrid, kind: LineKind, a: int) -> list[Cell]:
    """Filled cells of a line of a square grid by increasing diagonal label."""
    if not grid.is_square:
        raise ValueError("diagonal order is defined for square grids only")
    n = grid.n
    cells = []
    for d in range(n):
        cell = (a, (a - d) % n) if kind == "row" else ((a + d) % n, a)
        if cell in grid.entries:
            cells.append(cell)
    return cells


# -- partial sums --------------------------------------------------------


@dataclass(frozen=True)
class PartialSumTrace:
    """Running prefix sums of one line under a given ordering.

    ``sums`` are exact integers; residues modulo ``modulus`` are exposed both
    in [0, M) and in the symmetric range [-(M-1)/2, (M-1)/2].
    """

    kind: LineKind
    index: int
    cells: tuple[Cell, ...]
    entries: tuple[int, ...]
    sums: tuple[int, ...]
    modulus: int

    @property
    def residues(self) -> tuple[int, ...]:
        return tuple(s % self.modulus for s in self.sums)

    @property
    def symmetric_residues(self) -> tuple[int, ...]:
        M = self.modulus
        return tuple(r - M if r > (M - 1) // 2 else r for r in self.residues)

    def first_collision(self) -> tuple[int, int] | None:
        """Lexicographically smallest position pair with equal residues."""
        seen: dict[int, int] = {}
        best: tuple[int, int] | None = None
        for pos, r in enumerate(self.residues):
            if r in seen:
                pair = (seen[r], pos)
                if best is None or pair < best:
                    best = pair
            else:
                seen[r] = pos
        return best

    @property
    def all_distinct(self) -> bool:
        return len(set(self.residues)) == len(self.residues)


def partial_sums(
    grid: HeffterGrid,
    kind: LineKind,
    a: int,
    ordering: Sequence[Cell],
    modulus: int,
) -> PartialSumTrace:
    """Prefix sums of one line's entries visited in the given cell order."""
    if modulus <= 0:
        raise ValueError("modulus must be positive")
    line = set(grid.line_cells(kind, a))
    if set(ordering) != line or len(ordering) != len(line):
        raise ValueError(f"ordering does not cover the filled cells of {kind} {a}")
    entries = tuple(grid.entries[c] for c in ordering)
    sums = []
    s = 0
    for e in entries:
        s += e
        sums.append(s)
    return PartialSumTrace(kind, a, tuple(ordering), entries, tuple(sums), modulus)


def is_simple(
    grid: HeffterGrid,
    kind: LineKind,
    a: int,
    ordering: Sequence[Cell],
    modulus: int,
) -> tuple[bool, tuple[int, int] | None]:
    """Whether the line's partial sums are pairwise distinct modulo ``modulus``.

    Returns (verdict, witness); the witness is the smallest offending
    position pair when the verdict is False.
    """
    trace = partial_sums(grid, kind, a, ordering, modulus)
    if trace.all_distinct:
        return True, None
    return False, trace.first_collision()
