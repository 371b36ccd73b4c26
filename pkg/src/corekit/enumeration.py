"""Brute-force partition generators and direct t-core counts.

These are the oracles the formula routes are checked against, so they only
use diagram-level facts: the hook-folding bijection and arm + leg + 1 hook
lengths. All generators are lazy and yield in lexicographically descending
order.
"""

from __future__ import annotations

from typing import Iterator

from .bijections import distinct_odd_to_sc
from .errors import InvalidModulus
from .hooks import is_t_core_naive
from .partitions import DistinctOddPartition, Partition, conjugate

__all__ = [
    "all_partitions",
    "distinct_partitions",
    "odd_partitions",
    "distinct_odd_partitions",
    "self_conjugate_partitions",
    "sc_t_count_bruteforce",
    "sc_t_counts_bruteforce",
    "sc_t_cores",
    "partition_count_dp",
]


def _gen(n: int, largest: int, step: int, parts_ok, distinct: bool) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        if not parts_ok(first):
            continue
        nxt = first - 1 if distinct else first
        for rest in _gen(n - first, nxt, step, parts_ok, distinct):
            yield (first,) + rest


def all_partitions(n: int) -> Iterator[Partition]:
    for parts in _gen(n, n, 1, lambda x: True, False):
        yield Partition(parts)


def distinct_partitions(n: int) -> Iterator[Partition]:
    for parts in _gen(n, n, 1, lambda x: True, True):
        yield Partition(parts)


def odd_partitions(n: int) -> Iterator[Partition]:
    for parts in _gen(n, n, 1, lambda x: x % 2 == 1, False):
        yield Partition(parts)


def distinct_odd_partitions(n: int) -> Iterator[DistinctOddPartition]:
    for parts in _gen(n, n, 1, lambda x: x % 2 == 1, True):
        yield DistinctOddPartition(Partition(parts))


def self_conjugate_partitions(n: int) -> Iterator[Partition]:
    for lam in distinct_odd_partitions(n):
        yield distinct_odd_to_sc(lam)


def partition_count_dp(n_max: int) -> list[int]:
    """p(0..n_max) by the coin-change recurrence over part sizes."""
    counts = [1] + [0] * n_max
    for part in range(1, n_max + 1):
        for s in range(part, n_max + 1):
            counts[s] += counts[s - part]
    return counts


def _first_row_clean(g: Partition, t: int) -> bool:
    conj = conjugate(g)
    row = g.parts[0]
    # scan from the end of the row, where hooks are smallest
    for j in range(row, 0, -1):
        if (row - j + conj.parts[j - 1]) % t == 0:
            return False
    return True


def sc_t_cores(n_max: int, t: int) -> Iterator[tuple[DistinctOddPartition, Partition]]:
    """Every self-conjugate t-core of size <= n_max, with its distinct-odd partner.

    Grows the distinct-odd partner from its smallest part upward. Putting a
    new largest part on top adds a new first row and column to the diagram
    and leaves every other hook unchanged, so a branch can be cut as soon as
    the new first row holds a hook divisible by t.
    """
    if t < 1:
        raise InvalidModulus(f"t must be >= 1, got {t}")
    stack = [((), 0)]
    while stack:
        parts, size = stack.pop()
        lam = DistinctOddPartition(Partition(parts))
        yield lam, distinct_odd_to_sc(lam)
        start = parts[0] + 2 if parts else 1
        for p in range(start, n_max - size + 1, 2):
            new = (p,) + parts
            g = distinct_odd_to_sc(DistinctOddPartition(Partition(new)))
            if g.part(1) - g.part(2) >= t:
                # the overhang of row 1 past row 2 has hooks 1, 2, ..., and only grows with p
                break
            if _first_row_clean(g, t):
                stack.append((new, size + p))


def sc_t_counts_bruteforce(n_max: int, t: int) -> list[int]:
    """sc_t(n) for n = 0..n_max."""
    counts = [0] * (n_max + 1)
    for lam, g in sc_t_cores(n_max, t):
        counts[lam.size] += 1
    return counts


def sc_t_count_bruteforce(n: int, t: int, exhaustive: bool | None = None) -> int:
    """Number of self-conjugate t-cores of n, by direct hook inspection.

    ``exhaustive=True`` filters every self-conjugate partition of n with
    ``is_t_core_naive``; the default does that for small n and otherwise
    uses the pruned search in :func:`sc_t_cores`.
    """
    if t < 1:
        raise InvalidModulus(f"t must be >= 1, got {t}")
    if exhaustive is None:
        exhaustive = n <= 40
    if exhaustive:
        return sum(1 for g in self_conjugate_partitions(n) if is_t_core_naive(g, t) is True)
    return sc_t_counts_bruteforce(n, t)[n]
