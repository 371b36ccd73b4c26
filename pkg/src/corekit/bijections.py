"""Self-conjugate <-> distinct-odd-parts bijection and explicit t-core builders."""

from __future__ import annotations

from collections import Counter

from .errors import NotSelfConjugate
from .hooks import hook_length_naive
from .partitions import (
    DistinctOddPartition,
    Partition,
    conjugate,
    durfee_side,
    from_frequency,
)

__all__ = [
    "sc_to_distinct_odd",
    "distinct_odd_to_sc",
    "perfectly_triangular",
    "three_core_minus",
    "three_core_plus",
]


def sc_to_distinct_odd(g: Partition) -> DistinctOddPartition:
    """Read off the diagonal hooks of a self-conjugate partition."""
    conj = conjugate(g)
    if conj != g:
        raise NotSelfConjugate(f"{g.parts} is not self-conjugate")
    d = durfee_side(g)
    return DistinctOddPartition(Partition(tuple(hook_length_naive(g, i, i, conj) for i in range(1, d + 1))))


def distinct_odd_to_sc(lam: DistinctOddPartition) -> Partition:
    """Fold each part into a hook with its corner at ``(i, i)``.

    Part ``lam_i`` contributes the corner plus ``(lam_i - 1) / 2`` boxes to
    the right of it and as many below it.
    """
    rows = Counter()
    for i, part in enumerate(lam.parts, start=1):
        leg = (part - 1) // 2
        rows[i] += 1 + leg
        for r in range(i + 1, i + leg + 1):
            rows[r] += 1
    return Partition(tuple(rows[r] for r in range(1, len(rows) + 1)))


def perfectly_triangular(k: int) -> Partition:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return Partition(tuple(range(k, 0, -1)))


def three_core_minus(r: int) -> Partition:
    """Self-conjugate 3-core of size r(3r - 2)."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    freq = {v: 2 for v in range(1, r)}
    for v in range(r, 3 * r - 1, 2):
        freq[v] = freq.get(v, 0) + 1
    return from_frequency(freq)


def three_core_plus(r: int) -> Partition:
    """Self-conjugate 3-core of size r(3r + 2)."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    freq = {v: 2 for v in range(1, r + 1)}
    for v in range(r + 2, 3 * r + 1, 2):
        freq[v] = freq.get(v, 0) + 1
    return from_frequency(freq)
