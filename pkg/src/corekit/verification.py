"""Exhaustive cross-checks between formula routes and brute-force oracles.

Each suite returns a list of :class:`Check` results; the CLI ``verify``
command prints them. Sweeps over n fan out to worker processes when
``COREKIT_THREADS`` (or the CPU count) allows more than one.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .bijections import (
    distinct_odd_to_sc,
    perfectly_triangular,
    sc_to_distinct_odd,
    three_core_minus,
    three_core_plus,
)
from .classnumbers import hurwitz, reduced_forms, sc2_count, sc3_count, sc7_bkm, sc7_ono_raji
from .enumeration import (
    all_partitions,
    distinct_odd_partitions,
    distinct_partitions,
    odd_partitions,
    partition_count_dp,
    sc_t_cores,
    sc_t_counts_bruteforce,
    self_conjugate_partitions,
)
from .hooks import (
    _sc_boxes,
    gap_criterion,
    gap_witness_box,
    hook_length_formula,
    hook_table,
    is_t_core_naive,
    is_t_core_sc,
    sc_hook_calc_count,
)
from .partitions import Partition, is_self_conjugate
from .supernorm import euler_count_pair, supernorm, supernorm_inverse, t_core_supernorm_set

__all__ = [
    "Check",
    "SUITES",
    "run_suite",
    "worker_count",
    "parallel_map",
    "hurwitz_oracle",
    "sc7_table",
]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def worker_count() -> int:
    cap = os.environ.get("COREKIT_THREADS")
    n = os.cpu_count() or 1
    if cap:
        n = min(n, max(1, int(cap)))
    return n


def parallel_map(fn, items):
    """Ordered map, in worker processes when more than one worker is allowed."""
    items = list(items)
    workers = worker_count()
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def hurwitz_oracle(D: int) -> Fraction:
    """Weighted count of reduced forms of discriminant -D by scanning a and b directly.

    Independent of :func:`reduced_forms`: no parity shortcut and no
    divisor search, just every ``(a, b)`` with ``|b| <= a`` and the reduced
    conditions checked on the resulting ``c``.
    """
    total = Fraction(0)
    a = 1
    while 3 * a * a <= D:
        for b in range(-a, a + 1):
            num = b * b + D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or ((abs(b) == a or a == c) and b < 0):
                continue
            if a == b == c:
                total += Fraction(1, 3)
            elif b == 0 and a == c:
                total += Fraction(1, 2)
            else:
                total += 1
        a += 1
    return total


def _sc7_row(n):
    na = sc7_ono_raji(n) if n % 2 == 1 and n % 7 != 5 else None
    return sc7_bkm(n), na


def sc7_table(n_max: int) -> list[tuple[int, int, int, int | None]]:
    """Rows ``(n, brute force, four-term formula, single-term formula or None)``."""
    brute = sc_t_counts_bruteforce(n_max, 7)
    formulas = parallel_map(_sc7_row, range(1, n_max + 1))
    return [(n, brute[n], bkm, na) for n, (bkm, na) in zip(range(1, n_max + 1), formulas)]


def _fail(name, bad, limit=3):
    return Check(name, not bad, "" if not bad else f"{len(bad)} mismatches, e.g. {bad[:limit]}")


def suite_hooks(n_max: int) -> list[Check]:
    formula_bad, decision_bad, sym_bad, diag_bad, gap_bad, count_bad = [], [], [], [], [], []
    for n in range(n_max + 1):
        for lam in distinct_odd_partitions(n):
            g = distinct_odd_to_sc(lam)
            table = hook_table(g)
            for (i, j), h in table.boxes():
                if hook_length_formula(lam, i, j) != h:
                    formula_bad.append((g.parts, (i, j)))
                if table[j, i] != h:
                    sym_bad.append((g.parts, (i, j)))
            for i, part in enumerate(lam.parts, start=1):
                if table[i, i] != part:
                    diag_bad.append((lam.parts, i))
            if sum(1 for _ in _sc_boxes(lam.parts)) != sc_hook_calc_count(lam):
                count_bad.append(lam.parts)
            values = set(table.values())
            for t in range(2, 16):
                sc, naive = is_t_core_sc(lam, t), is_t_core_naive(g, t)
                if (sc is True) != (naive is True):
                    decision_bad.append((lam.parts, t))
                i = gap_criterion(lam, t)
                if i is not None and (naive is True or table[gap_witness_box(lam, t, i)] != t or t not in values):
                    gap_bad.append((lam.parts, t))
    return [
        _fail(f"hook formula equals diagram hook, n <= {n_max}", formula_bad),
        _fail(f"sc t-core test equals naive test, t in 2..15, n <= {n_max}", decision_bad),
        _fail("hook table symmetric for self-conjugate partitions", sym_bad),
        _fail("diagonal hooks equal distinct-odd parts", diag_bad),
        _fail("gap criterion implies hook exactly t at predicted box", gap_bad),
        _fail("boxes on/below diagonal equal (n + length)/2", count_bad),
    ]


def suite_bijection(n_max: int) -> list[Check]:
    roundtrip_bad, count_bad, two_core_bad, euler_bad = [], [], [], []
    p_counts = partition_count_dp(min(n_max, 40))
    for n in range(n_max + 1):
        sc = list(self_conjugate_partitions(n))
        for g in sc:
            if distinct_odd_to_sc(sc_to_distinct_odd(g)) != g:
                roundtrip_bad.append(g.parts)
        if sum(1 for _ in distinct_partitions(n)) != sum(1 for _ in odd_partitions(n)):
            euler_bad.append(n)
        if n > 40:
            continue
        everything = list(all_partitions(n))
        filtered = [p for p in everything if is_self_conjugate(p)]
        if len(everything) != p_counts[n] or set(filtered) != set(sc) or len(set(sc)) != len(sc):
            count_bad.append(n)
        two_cores = [p for p in everything if is_t_core_naive(p, 2) is True]
        k = (isqrt(8 * n + 1) - 1) // 2
        if n == 0:
            expected = [Partition()]
        elif k * (k + 1) // 2 == n:
            expected = [perfectly_triangular(k)]
        else:
            expected = []
        if two_cores != expected:
            two_core_bad.append(n)
    brute2 = sc_t_counts_bruteforce(n_max, 2)
    brute3 = sc_t_counts_bruteforce(n_max, 3)
    sc2_bad = [n for n in range(1, n_max + 1) if brute2[n] != sc2_count(n)]
    sc3_bad = [n for n in range(1, n_max + 1) if brute3[n] != sc3_count(n)]
    three_cores = {lam.size: g for lam, g in sc_t_cores(n_max, 3)}
    builder_bad = []
    for r in range(1, n_max + 1):
        for build, n in ((three_core_minus, r * (3 * r - 2)), (three_core_plus, r * (3 * r + 2))):
            if n > n_max:
                continue
            g = build(r)
            if g.size != n or three_cores.get(n) != g:
                builder_bad.append((build.__name__, r))
    return [
        _fail(f"sc <-> distinct-odd round trip, n <= {n_max}", roundtrip_bad),
        _fail("self-conjugate partitions equal filtered partitions, p(n) matches (n <= 40)", count_bad),
        _fail("distinct-part and odd-part counts agree", euler_bad),
        _fail("2-cores are exactly the perfectly triangular partitions (n <= 40)", two_core_bad),
        _fail(f"sc_2 closed form equals brute force, n <= {n_max}", sc2_bad),
        _fail(f"sc_3 closed form equals brute force, n <= {n_max}", sc3_bad),
        _fail("3-core builders equal the unique enumerated 3-core", builder_bad),
    ]


def suite_sc7(n_max: int) -> list[Check]:
    rows = sc7_table(n_max)
    bkm_bad = [(n, b, f) for n, b, f, _ in rows if b != f]
    na_bad = [(n, b, na) for n, b, _, na in rows if na is not None and b != na]
    return [
        _fail(f"four-term class-number formula equals brute-force sc_7, n <= {n_max}", bkm_bad),
        _fail(f"single-term class-number formula equals brute-force sc_7 (odd n, n % 7 != 5), n <= {n_max}", na_bad),
    ]


def suite_supernorm(n_max: int) -> list[Check]:
    rt_bad = [p.parts for n in range(min(n_max, 25) + 1) for p in all_partitions(n) if supernorm_inverse(supernorm(p).value) != p]
    int_bad = [m for m in range(1, 100 * n_max + 1) if supernorm(supernorm_inverse(m)).value != m]
    euler_bad = [n for n in range(1, min(n_max, 40) + 1) if len(set(euler_count_pair(n))) != 1]
    set_bad = []
    for t in (2, 3, 5, 7):
        brute = sc_t_counts_bruteforce(min(n_max, 120), t)
        for n in range(1, min(n_max, 120) + 1):
            if len(t_core_supernorm_set(n, t)) != brute[n]:
                set_bad.append((n, t))
    return [
        _fail("partition -> integer -> partition round trip", rt_bad),
        _fail(f"integer -> partition -> integer round trip, m <= {100 * n_max}", int_bad),
        _fail("squarefree and odd-indexed counts agree", euler_bad),
        _fail("t-core supernorm set size equals brute-force sc_t, t in {2,3,5,7}", set_bad),
    ]


def suite_hurwitz(n_max: int) -> list[Check]:
    d_max = 28 * n_max + 56
    bad = parallel_map(_hurwitz_mismatch, range(1, d_max + 1))
    bad = [d for d in bad if d is not None]
    denom_bad = [d for d in range(1, d_max + 1) if hurwitz(-d).denominator not in (1, 2, 3, 6)]
    return [
        _fail(f"reduced-form enumeration equals direct scan, D <= {d_max}", bad),
        _fail("class-number denominators in {1,2,3,6}", denom_bad),
    ]


def _hurwitz_mismatch(d):
    return None if hurwitz(-d) == hurwitz_oracle(d) else d


SUITES = {
    "hooks": suite_hooks,
    "bijection": suite_bijection,
    "sc7": suite_sc7,
    "supernorm": suite_supernorm,
    "hurwitz": suite_hurwitz,
}


def run_suite(name: str, n_max: int) -> list[Check]:
    if name == "all":
        return [c for suite in SUITES.values() for c in suite(n_max)]
    return SUITES[name](n_max)
