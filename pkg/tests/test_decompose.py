import pytest

from heffter.decompose import (
    NotADecomposition,
    NotSimple,
    base_cycle,
    canonical_cycle,
    cols_system,
    cycle_edges,
    develop,
    orthogonality,
    read_system,
    rows_system,
    system_from_text,
    system_to_text,
    write_system,
)
from heffter.grid import HeffterGrid, natural_order

from oracle_tables import H17_12_ROW0_CYCLE


def test_canonical_cycle_rotation_and_reflection():
    assert canonical_cycle([3, 1, 2]) == (1, 2, 3)
    assert canonical_cycle([3, 2, 1]) == (1, 2, 3)
    assert canonical_cycle([5, 9, 2, 7]) == (2, 7, 5, 9)


def test_cycle_edges_undirected():
    assert cycle_edges([0, 3, 1]) == [(0, 3), (1, 3), (0, 1)]


def test_base_cycle_matches_partial_sums(h17_12):
    cyc = base_cycle(h17_12, "row", 0, natural_order(h17_12, "row", 0), 409)
    assert cyc == H17_12_ROW0_CYCLE
    assert cyc[-1] == 0


def test_base_cycle_rejects_collisions():
    g = HeffterGrid(1, 3, {(0, 0): 1, (0, 1): 5, (0, 2): -6})
    with pytest.raises(NotSimple):
        base_cycle(g, "row", 0, natural_order(g, "row", 0), 5)


def test_base_cycle_rejects_nonzero_total():
    g = HeffterGrid(1, 2, {(0, 0): 1, (0, 1): 3})
    with pytest.raises(NotSimple):
        base_cycle(g, "row", 0, natural_order(g, "row", 0), 11)


def test_develop_counts_and_translates():
    system = develop([(0, 1, 3)], 7)
    assert len(system.cycles) == 7
    assert system.is_complete
    # translate by 1 of (0,1,3) canonicalizes to (1,2,4)
    assert (1, 2, 4) in system.cycles


def test_develop_detects_double_cover():
    # (0,1,3) and its own translate cover edges twice
    with pytest.raises(NotADecomposition):
        develop([(0, 1, 3), (1, 2, 4)], 7)


def test_row_and_col_systems_are_orthogonal(h17_12):
    rows = rows_system(h17_12, 409)
    cols = cols_system(h17_12, 409)
    assert rows.is_complete and cols.is_complete
    assert len(rows.cycles) == 17 * 409
    ok, worst, _ = orthogonality(rows, cols)
    assert ok and worst == 1


def test_self_join_not_orthogonal(h17_12):
    rows = rows_system(h17_12, 409)
    ok, worst, _ = orthogonality(rows, rows)
    assert not ok and worst == 12


def test_orthogonality_requires_same_modulus():
    a = develop([(0, 1, 3)], 7)
    b = develop([(0, 1, 3)], 13)
    with pytest.raises(ValueError):
        orthogonality(a, b)


def test_cyclic_invariance(h17_12):
    rows = rows_system(h17_12, 409)
    translated = {canonical_cycle([(v + 1) % 409 for v in c]) for c in rows.cycles}
    assert translated == set(rows.cycles)


def test_system_round_trip(tmp_path):
    system = develop([(0, 1, 3)], 7)
    text = system_to_text(system)
    assert text.startswith("#cycles M=7 k=3 count=7\n")
    again = system_from_text(text)
    assert again.cycles == system.cycles
    path = tmp_path / "c.txt"
    write_system(path, system)
    assert read_system(path).cycles == system.cycles


def test_system_parse_errors():
    with pytest.raises(ValueError):
        system_from_text("")
    with pytest.raises(ValueError):
        system_from_text("#cycles M=7 k=3 count=2\n0 1 3\n")
    with pytest.raises(ValueError):
        system_from_text("#cycles M=7 k=3 count=1\n0 1\n")
