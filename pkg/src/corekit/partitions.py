"""Partition data types: validation, conjugation, Durfee square, frequency form.

Boxes of a Young diagram are addressed 1-indexed as ``(row, column)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import NonPositivePart, NotDistinctOdd

__all__ = [
    "Partition",
    "DistinctOddPartition",
    "make_partition",
    "conjugate",
    "is_self_conjugate",
    "durfee_side",
    "to_frequency",
    "from_frequency",
    "make_distinct_odd",
    "parse_partition",
    "format_partition",
]


@dataclass(frozen=True)
class Partition:
    """A non-increasing tuple of positive parts. The empty tuple is allowed."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for x in parts:
            if x <= 0:
                raise NonPositivePart(f"part {x} is not positive")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be non-increasing, got {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, idx):
        return self.parts[idx]

    def part(self, i: int) -> int:
        """1-indexed part, 0 past the end."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __str__(self):
        return format_partition(self)


@dataclass(frozen=True)
class DistinctOddPartition:
    """Partition whose parts are odd and strictly decreasing."""

    inner: Partition

    def __post_init__(self):
        parts = self.inner.parts
        if any(x % 2 == 0 for x in parts):
            raise NotDistinctOdd(f"{parts} has an even part")
        if any(a == b for a, b in zip(parts, parts[1:])):
            raise NotDistinctOdd(f"{parts} has a repeated part")

    @property
    def parts(self) -> tuple[int, ...]:
        return self.inner.parts

    @property
    def size(self) -> int:
        return self.inner.size

    def __len__(self):
        return len(self.inner)

    def __iter__(self):
        return iter(self.inner)

    def __getitem__(self, idx):
        return self.inner[idx]

    def __str__(self):
        return format_partition(self.inner)


def make_partition(parts: Iterable[int]) -> Partition:
    parts = list(parts)
    for x in parts:
        if x <= 0:
            raise NonPositivePart(f"part {x} is not positive")
    return Partition(tuple(sorted(parts, reverse=True)))


def conjugate(p: Partition) -> Partition:
    parts = p.parts
    if not parts:
        return Partition()
    return Partition(tuple(sum(1 for x in parts if x >= j) for j in range(1, parts[0] + 1)))


def is_self_conjugate(p: Partition) -> bool:
    return conjugate(p) == p


def durfee_side(p: Partition) -> int:
    d = 0
    for i, x in enumerate(p.parts, start=1):
        if x < i:
            break
        d = i
    return d


def to_frequency(p: Partition) -> dict[int, int]:
    """Multiplicity map ``{part: count}``, keys ascending."""
    return dict(sorted(Counter(p.parts).items()))


def from_frequency(freq: Mapping[int, int]) -> Partition:
    parts = []
    for value, mult in freq.items():
        if mult < 0:
            raise ValueError(f"negative multiplicity for part {value}")
        parts.extend([value] * mult)
    return make_partition(parts)


def make_distinct_odd(p: Partition | Iterable[int]) -> DistinctOddPartition:
    if not isinstance(p, Partition):
        p = make_partition(p)
    return DistinctOddPartition(p)


def parse_partition(text: str) -> Partition:
    """Parse ``7,5,4,4,2,1,1`` or frequency form such as ``1^2,3``.

    Unsorted input is accepted and sorted. An empty string (or ``()``) is
    the empty partition.
    """
    text = text.strip().strip("()").strip()
    if not text:
        return Partition()
    parts = []
    for tok in text.split(","):
        tok = tok.strip()
        if "^" in tok:
            value, mult = tok.split("^", 1)
            parts.extend([int(value)] * int(mult))
        else:
            parts.append(int(tok))
    return make_partition(parts)


def format_partition(p: Partition | DistinctOddPartition) -> str:
    return ",".join(str(x) for x in p.parts)
