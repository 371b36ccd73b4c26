import pytest

from corekit.bijections import distinct_odd_to_sc
from corekit.enumeration import distinct_odd_partitions
from corekit.errors import BoxOutOfDiagram, InvalidModulus
from corekit.hooks import (
    HookTable,
    TCoreWitness,
    gap_criterion,
    gap_witness_box,
    hook_length_formula,
    hook_length_naive,
    hook_table,
    is_t_core_naive,
    is_t_core_sc,
    sc_hook_calc_count,
)
from corekit.partitions import Partition, make_distinct_odd

GAMMA = Partition((7, 5, 4, 4, 2, 1, 1))
LAM = make_distinct_odd([13, 7, 3, 1])
FIGURE_1 = [[13, 10, 8, 7, 4, 2, 1], [10, 7, 5, 4, 1], [8, 5, 3, 2], [7, 4, 2, 1], [4, 1], [2], [1]]


def test_hook_naive_examples():
    assert hook_length_naive(GAMMA, 2, 3) == 5
    assert hook_length_naive(GAMMA, 3, 1) == 8
    assert hook_length_naive(Partition((1,)), 1, 1) == 1


@pytest.mark.parametrize("box", [(1, 8), (8, 1), (0, 1), (5, 3)])
def test_hook_naive_out_of_diagram(box):
    with pytest.raises(BoxOutOfDiagram):
        hook_length_naive(GAMMA, *box)


def test_hook_table():
    assert hook_table(GAMMA).to_json() == FIGURE_1
    assert hook_table(Partition()).rows == ()
    assert hook_table(Partition((2, 1))).to_json() == [[3, 1], [1]]


def test_hook_table_json_round_trip():
    table = hook_table(GAMMA)
    assert HookTable.from_json(table.to_json()) == table
    assert table[4, 1] == 7


def test_hook_table_invariants():
    for p in [GAMMA, Partition((6, 3, 3, 1)), Partition((5,)), Partition((2, 2, 2))]:
        table = hook_table(p)
        assert table.size == p.size
        for row in table.rows:
            assert all(a > b for a, b in zip(row, row[1:]))
        for j in range(1, p.parts[0] + 1):
            col = [table[i, j] for i in range(1, len(p) + 1) if p.parts[i - 1] >= j]
            assert all(a > b for a, b in zip(col, col[1:]))


@pytest.mark.parametrize("box, expected", [((4, 1), 7), ((5, 2), 1), ((6, 1), 2), ((1, 4), 7), ((5, 1), 4), ((7, 1), 1)])
def test_hook_formula_examples(box, expected):
    assert hook_length_formula(LAM, *box) == expected


@pytest.mark.parametrize("box", [(8, 1), (5, 3), (6, 2), (5, 5), (0, 1)])
def test_hook_formula_out_of_diagram(box):
    with pytest.raises(BoxOutOfDiagram):
        hook_length_formula(LAM, *box)


def test_is_t_core_naive():
    assert is_t_core_naive(GAMMA, 6) is True
    w = is_t_core_naive(GAMMA, 7)
    assert isinstance(w, TCoreWitness) and not w
    assert w.box == (1, 4) and w.hook == 7
    assert is_t_core_naive(Partition((1,)), 2) is True


def test_t_equal_one():
    assert is_t_core_naive(Partition(), 1) is True
    assert not is_t_core_naive(Partition((1,)), 1)
    assert not is_t_core_sc(make_distinct_odd([1]), 1)


def test_is_t_core_sc():
    assert is_t_core_sc(LAM, 6) is True
    w = is_t_core_sc(LAM, 7)
    assert w.box == (4, 1) and w.hook == 7
    assert is_t_core_sc(make_distinct_odd([1]), 3) is True


def test_invalid_modulus():
    for fn, arg in ((is_t_core_naive, GAMMA), (is_t_core_sc, LAM), (gap_criterion, LAM)):
        with pytest.raises(InvalidModulus):
            fn(arg, 0)


def test_gap_criterion():
    assert gap_criterion(LAM, 2) == 1
    assert gap_criterion(LAM, 3) is None
    lam = make_distinct_odd([13, 1])
    assert gap_criterion(lam, 4) == 1
    assert not is_t_core_sc(lam, 4)
    # gamma = (7,2,1,1,1,1,1); hook at (4,1) is 0 arm + 3 leg + 1
    assert gap_witness_box(lam, 4, 1) == (4, 1)
    assert hook_table(distinct_odd_to_sc(lam))[4, 1] == 4


@pytest.mark.parametrize("parts, expected", [((13, 7, 3, 1), 14), ((1,), 1), ((5, 3, 1), 6)])
def test_sc_hook_calc_count(parts, expected):
    assert sc_hook_calc_count(make_distinct_odd(parts)) == expected


def test_formula_matches_naive_small():
    for n in range(26):
        for lam in distinct_odd_partitions(n):
            g = distinct_odd_to_sc(lam)
            for (i, j), h in hook_table(g).boxes():
                assert hook_length_formula(lam, i, j) == h
            below = sum(1 for (i, j), _ in hook_table(g).boxes() if i >= j)
            assert below == sc_hook_calc_count(lam)
