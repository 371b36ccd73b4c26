"""The supernorm: partitions <-> positive integers through indexed primes.

A part equal to i contributes a factor of the i-th prime, so the partition
with multiplicities m_i maps to prod p_i ** m_i.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from math import isqrt, log

from .enumeration import distinct_odd_partitions, distinct_partitions, odd_partitions
from .hooks import is_t_core_sc
from .partitions import Partition, make_partition, to_frequency
from .bijections import distinct_odd_to_sc, perfectly_triangular, sc_to_distinct_odd

__all__ = [
    "PrimeIndexer",
    "SupernormImage",
    "nth_prime",
    "prime_index",
    "supernorm",
    "supernorm_inverse",
    "is_squarefree_odd_indexed",
    "euler_count_pair",
    "two_core_supernorm_pair",
    "t_core_supernorm_set",
]


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]


class PrimeIndexer:
    """Growable, thread-safe list of primes; ``self[i]`` is the i-th prime (1-indexed)."""

    def __init__(self, limit: int = 1000):
        self._lock = threading.Lock()
        self._limit = limit
        self._primes = _sieve(limit)
        self._index = {p: i for i, p in enumerate(self._primes, start=1)}

    def _grow(self, limit: int):
        with self._lock:
            if limit <= self._limit:
                return
            primes = _sieve(limit)
            # earlier entries are a prefix of the new list; swap atomically
            self._index = {p: i for i, p in enumerate(primes, start=1)}
            self._primes = primes
            self._limit = limit

    def __len__(self):
        return len(self._primes)

    def __getitem__(self, i: int) -> int:
        if i < 1:
            raise IndexError(f"prime indices start at 1, got {i}")
        while i > len(self._primes):
            # p_i < i (ln i + ln ln i) for i >= 6
            bound = int(i * (log(i) + log(log(i)))) + 10 if i >= 6 else 15
            self._grow(max(bound, 2 * self._limit))
        return self._primes[i - 1]

    def index_of(self, p: int) -> int | None:
        while p > self._limit:
            self._grow(max(p, 2 * self._limit))
        return self._index.get(p)

    def primes(self) -> list[int]:
        return list(self._primes)


_PRIMES = PrimeIndexer()


def nth_prime(i: int) -> int:
    return _PRIMES[i]


def prime_index(p: int) -> int | None:
    """i with p = p_i, or None if p is not prime."""
    return _PRIMES.index_of(p)


@dataclass(frozen=True)
class SupernormImage:
    value: int
    factor_indices: dict[int, int] = field(default_factory=dict)

    def __int__(self):
        return self.value


def supernorm(p: Partition) -> SupernormImage:
    freq = to_frequency(p)
    value = 1
    for i, m in freq.items():
        value *= nth_prime(i) ** m
    return SupernormImage(value, freq)


def _factor_indices(n: int) -> dict[int, int]:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    out = {}
    i = 1
    while n > 1:
        p = nth_prime(i)
        if p * p > n:
            # remaining cofactor is prime
            out[prime_index(n)] = out.get(prime_index(n), 0) + 1
            break
        while n % p == 0:
            n //= p
            out[i] = out.get(i, 0) + 1
        i += 1
    return dict(sorted(out.items()))


def supernorm_inverse(n: int) -> Partition:
    parts = []
    for i, m in _factor_indices(n).items():
        parts.extend([i] * m)
    return make_partition(parts)


def is_squarefree_odd_indexed(n: int) -> bool:
    return all(i % 2 == 1 and m == 1 for i, m in _factor_indices(n).items())


def euler_count_pair(n: int) -> tuple[int, int]:
    """(# squarefree integers with prime indices summing to n,
    # integers with only odd-indexed prime factors, indices summing to n)."""
    squarefree = {supernorm(p).value for p in distinct_partitions(n)}
    odd_indexed = {supernorm(p).value for p in odd_partitions(n)}
    return len(squarefree), len(odd_indexed)


def two_core_supernorm_pair(k: int) -> tuple[int, int]:
    """Supernorms of the k-th perfectly triangular partition and of its distinct-odd partner."""
    gamma = perfectly_triangular(k)
    lam = sc_to_distinct_odd(gamma)
    return supernorm(gamma).value, supernorm(lam.inner).value


def t_core_supernorm_set(n: int, t: int) -> list[int]:
    """Sorted supernorms of the distinct-odd partitions of n whose self-conjugate partner is t-core."""
    if n < 1 or t < 2:
        raise ValueError(f"need n >= 1 and t >= 2, got n={n}, t={t}")
    return sorted(supernorm(lam.inner).value for lam in distinct_odd_partitions(n) if is_t_core_sc(lam, t) is True)
