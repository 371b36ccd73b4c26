"""Hook lengths of Young diagrams and t-core tests.

Two independent routes are provided. ``hook_length_naive`` walks the
diagram (arm + leg + 1). ``hook_length_formula`` reads the hook of a
self-conjugate partition straight off the parts of its distinct-odd
partner, without building the diagram. The two t-core decisions mirror
that split.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoxOutOfDiagram, InvalidModulus
from .partitions import DistinctOddPartition, Partition, conjugate

__all__ = [
    "HookTable",
    "TCoreWitness",
    "hook_length_naive",
    "hook_table",
    "hook_length_formula",
    "is_t_core_naive",
    "is_t_core_sc",
    "gap_criterion",
    "gap_witness_box",
    "sc_hook_calc_count",
]


@dataclass(frozen=True)
class HookTable:
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, box):
        i, j = box
        if i < 1 or j < 1 or i > len(self.rows) or j > len(self.rows[i - 1]):
            raise BoxOutOfDiagram(f"box {box} is not in the diagram")
        return self.rows[i - 1][j - 1]

    def boxes(self):
        for i, row in enumerate(self.rows, start=1):
            for j, h in enumerate(row, start=1):
                yield (i, j), h

    def values(self) -> list[int]:
        return [h for row in self.rows for h in row]

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "HookTable":
        return cls(tuple(tuple(int(h) for h in row) for row in data))

    def render(self) -> str:
        """Rows of right-aligned hook lengths, one line per diagram row."""
        if not self.rows:
            return ""
        width = max(len(str(h)) for h in self.values())
        return "\n".join(" ".join(str(h).rjust(width) for h in row) for row in self.rows)


@dataclass(frozen=True)
class TCoreWitness:
    """A box whose hook length is divisible by t.

    Falsy, so ``if is_t_core_naive(p, t):`` reads naturally while a failed
    check still carries its certificate.
    """

    box: tuple[int, int]
    hook: int

    def __bool__(self):
        return False


def _check_box(p: Partition, i: int, j: int):
    if i < 1 or j < 1 or i > len(p) or j > p.parts[i - 1]:
        raise BoxOutOfDiagram(f"box ({i},{j}) is not in the diagram of {p.parts}")


def hook_length_naive(p: Partition, i: int, j: int, _conj: Partition | None = None) -> int:
    _check_box(p, i, j)
    conj = _conj if _conj is not None else conjugate(p)
    arm = p.parts[i - 1] - j
    leg = conj.parts[j - 1] - i
    return arm + leg + 1


def hook_table(p: Partition) -> HookTable:
    conj = conjugate(p)
    return HookTable(tuple(
        tuple(hook_length_naive(p, i, j, conj) for j in range(1, row + 1))
        for i, row in enumerate(p.parts, start=1)
    ))


def _column_count(lam, i: int, j: int) -> int:
    # columns m >= j (within the Durfee square) holding at least i boxes
    return sum(1 for m in range(j, len(lam) + 1) if lam[m - 1] >= 2 * i - 2 * m + 1)


def _in_sc_diagram(lam, i: int, j: int) -> bool:
    # assumes i >= j >= 1
    k = len(lam)
    if i <= k:
        return True
    return j <= k and lam[j - 1] >= 2 * i - 2 * j + 1


def _formula(lam, i: int, j: int) -> int:
    k = len(lam)
    if i <= k:
        return (lam[i - 1] + lam[j - 1]) // 2
    return (lam[j - 1] + 1) // 2 + j - i - 1 + _column_count(lam, i, j)


def hook_length_formula(lam: DistinctOddPartition, i: int, j: int) -> int:
    """Hook length at ``(i, j)`` of the self-conjugate partner of ``lam``.

    Inside the Durfee square the hook is the mean of two diagonal hooks;
    below it, the hook is the length of column ``j`` under the box plus
    the number of columns to the right that still reach row ``i``.
    """
    if i < j:
        i, j = j, i
    parts = lam.parts
    if j < 1 or not _in_sc_diagram(parts, i, j):
        raise BoxOutOfDiagram(f"box ({i},{j}) is not in the diagram for {parts}")
    return _formula(parts, i, j)


def _check_modulus(t):
    if t < 1:
        raise InvalidModulus(f"t must be >= 1, got {t}")


def is_t_core_naive(p: Partition, t: int) -> bool | TCoreWitness:
    """True if no hook of ``p`` is divisible by ``t``.

    Otherwise returns the witness at the first offending box in row-major
    order.
    """
    _check_modulus(t)
    conj = conjugate(p)
    for i, row in enumerate(p.parts, start=1):
        for j in range(1, row + 1):
            h = row - j + conj.parts[j - 1] - i + 1
            if h % t == 0:
                return TCoreWitness((i, j), h)
    return True


def _sc_boxes(parts):
    """Boxes on or below the diagonal, in the order the t-core test visits them."""
    k = len(parts)
    for j in range(1, k + 1):
        for i in range(j, k + 1):
            yield i, j
    if not parts:
        return
    rows = (parts[0] + 1) // 2
    for j in range(1, k + 1):
        for i in range(k + 1, rows + 1):
            if parts[j - 1] >= 2 * i - 2 * j + 1:
                yield i, j


def is_t_core_sc(lam: DistinctOddPartition, t: int) -> bool | TCoreWitness:
    """t-core test for a self-conjugate partition, from its distinct-odd partner.

    Checks the Durfee-square hooks first, then those below the square, each
    family column by column. Witness boxes always have ``i >= j``.
    """
    _check_modulus(t)
    parts = lam.parts
    for i, j in _sc_boxes(parts):
        h = _formula(parts, i, j)
        if h % t == 0:
            return TCoreWitness((i, j), h)
    return True


def gap_criterion(lam: DistinctOddPartition, t: int) -> int | None:
    """Smallest ``i`` with ``lam_i - lam_{i+1} >= 2(t + 1)``, or None.

    A hit proves the self-conjugate partner is not t-core.
    """
    _check_modulus(t)
    parts = lam.parts
    for i in range(1, len(parts)):
        if parts[i - 1] - parts[i] >= 2 * (t + 1):
            return i
    return None


def gap_witness_box(lam: DistinctOddPartition, t: int, i: int) -> tuple[int, int]:
    """Box carrying a hook of exactly ``t`` when the gap after part ``i`` is large."""
    return (i + (lam.parts[i - 1] - 1) // 2 - (t - 1), i)


def sc_hook_calc_count(lam: DistinctOddPartition) -> int:
    return (lam.size + len(lam)) // 2
