from hypothesis import given, settings, strategies as st

from corekit.enumeration import (
    all_partitions,
    distinct_odd_partitions,
    distinct_partitions,
    odd_partitions,
    partition_count_dp,
    sc_t_count_bruteforce,
    sc_t_counts_bruteforce,
    self_conjugate_partitions,
)
from corekit.partitions import Partition


def parts_of(stream):
    return [p.parts for p in stream]


def test_all_partitions_small():
    assert parts_of(all_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert parts_of(all_partitions(0)) == [()]
    assert parts_of(all_partitions(1)) == [(1,)]


def test_partition_count_dp_known_values():
    assert partition_count_dp(10) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_counts_and_uniqueness_n_le_60():
    p = partition_count_dp(60)
    for n in range(61):
        if n <= 40:
            everything = parts_of(all_partitions(n))
            assert len(everything) == p[n] == len(set(everything))
            assert everything == sorted(everything, reverse=True)
        do = parts_of(distinct_odd_partitions(n))
        sc = parts_of(self_conjugate_partitions(n))
        assert len(do) == len(sc) == len(set(sc))
        assert len(parts_of(distinct_partitions(n))) == len(parts_of(odd_partitions(n)))


def test_distinct_odd_examples():
    assert (13, 7, 3, 1) in parts_of(distinct_odd_partitions(24))
    assert parts_of(distinct_odd_partitions(7)) == [(7,)]
    assert parts_of(distinct_odd_partitions(2)) == []


def test_self_conjugate_examples():
    assert (7, 5, 4, 4, 2, 1, 1) in parts_of(self_conjugate_partitions(24))
    assert parts_of(self_conjugate_partitions(3)) == [(2, 1)]
    assert parts_of(self_conjugate_partitions(2)) == []


def test_distinct_and_odd_examples():
    assert parts_of(distinct_partitions(3)) == [(3,), (2, 1)]
    assert parts_of(odd_partitions(3)) == [(3,), (1, 1, 1)]
    assert len(parts_of(distinct_partitions(6))) == len(parts_of(odd_partitions(6))) == 4


def test_sc_t_count_examples():
    assert sc_t_count_bruteforce(6, 2) == 1
    assert sc_t_count_bruteforce(7, 7) == 0
    assert sc_t_count_bruteforce(24, 6) >= 1


def test_pruned_search_equals_exhaustive_filter():
    for t in range(1, 12):
        counts = sc_t_counts_bruteforce(45, t)
        for n in range(46):
            assert counts[n] == sc_t_count_bruteforce(n, t, exhaustive=True), (n, t)


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=41, max_value=60), st.integers(min_value=2, max_value=9))
def test_pruned_search_equals_filter_beyond_default(n, t):
    assert sc_t_count_bruteforce(n, t) == sc_t_count_bruteforce(n, t, exhaustive=True)
