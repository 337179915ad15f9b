import pytest

from heffter.grid import (
    HeffterGrid,
    diagonal_cells,
    diagonal_order,
    is_simple,
    natural_order,
    partial_sums,
)


def small_grid():
    return HeffterGrid(3, 3, {(0, 0): 1, (0, 1): 2, (1, 1): -3, (1, 2): 4, (2, 0): -5, (2, 2): 6})


def test_rejects_zero_entry():
    with pytest.raises(ValueError):
        HeffterGrid(2, 2, {(0, 0): 0})


def test_rejects_out_of_range_cell():
    with pytest.raises(ValueError):
        HeffterGrid(2, 2, {(2, 0): 1})


def test_rejects_bad_dimensions():
    with pytest.raises(ValueError):
        HeffterGrid(0, 3, {})


def test_entry_lookup():
    g = small_grid()
    assert g.entry(0, 0) == 1
    assert g.entry(0, 2) is None
    assert g.entry_or_zero(0, 2) == 0


def test_fill_counts():
    g = small_grid()
    assert g.fills_per_row() == [2, 2, 2]
    assert g.fills_per_col() == [2, 2, 2]


def test_line_cells_sorted():
    g = small_grid()
    assert g.row_cells(0) == [(0, 0), (0, 1)]
    assert g.col_cells(2) == [(1, 2), (2, 2)]
    with pytest.raises(ValueError):
        g.row_cells(3)


def test_line_sum():
    g = small_grid()
    assert g.line_sum("row", 0) == 3
    assert g.line_sum("col", 0) == -4


def test_support_and_conflicts():
    g = HeffterGrid(2, 2, {(0, 0): 3, (0, 1): -3, (1, 0): 5})
    sup, conflicts = g.support()
    assert sup == {3, 5}
    assert conflicts == [3]


def test_diagonal_cells_cover_grid():
    n = 7
    cells = [c for d in range(n) for c in diagonal_cells(n, d)]
    assert len(set(cells)) == n * n
    assert all(cell == ((i + 2) % n, i) for i, cell in zip(range(n), diagonal_cells(n, 2)))
    with pytest.raises(ValueError):
        diagonal_cells(n, n)


def test_nonempty_diagonals():
    g = small_grid()
    # cells (0,0),(1,1),(2,2) are D_0; (0,1),(1,2) are D_2; (2,0) is D_2 too
    assert g.nonempty_diagonals() == [0, 2]


def test_diagonal_entry():
    g = small_grid()
    assert g.diagonal_entry(0, "row", 1) == -3
    assert g.diagonal_entry(2, "row", 0) == 2  # row 0, column (0-2)%3 = 1
    assert g.diagonal_entry(2, "col", 0) == -5


def test_diagonal_requires_square():
    g = HeffterGrid(2, 3, {(0, 0): 1})
    with pytest.raises(ValueError):
        g.nonempty_diagonals()


def test_natural_vs_diagonal_order():
    g = small_grid()
    assert natural_order(g, "row", 0) == [(0, 0), (0, 1)]
    # diagonal order of row 0 visits columns 0, 2, 1 (labels d = 0, 1, 2)
    assert diagonal_order(g, "row", 0) == [(0, 0), (0, 1)]
    assert diagonal_order(g, "col", 0) == [(0, 0), (2, 0)]


def test_partial_sums_exact_and_residues():
    g = small_grid()
    trace = partial_sums(g, "row", 1, natural_order(g, "row", 1), 7)
    assert trace.sums == (-3, 1)
    assert trace.residues == (4, 1)
    assert trace.symmetric_residues == (-3, 1)
    assert trace.all_distinct


def test_partial_sums_rejects_wrong_ordering():
    g = small_grid()
    with pytest.raises(ValueError):
        partial_sums(g, "row", 0, [(0, 0)], 7)


def test_first_collision_is_smallest_pair():
    g = HeffterGrid(1, 4, {(0, 0): 5, (0, 1): 7, (0, 2): -7, (0, 3): 7})
    trace = partial_sums(g, "row", 0, natural_order(g, "row", 0), 100)
    assert trace.sums == (5, 12, 5, 12)
    assert trace.first_collision() == (0, 2)
    ok, witness = is_simple(g, "row", 0, natural_order(g, "row", 0), 100)
    assert not ok and witness == (0, 2)


def test_grid_is_immutable():
    g = small_grid()
    with pytest.raises(AttributeError):
        g.m = 5
