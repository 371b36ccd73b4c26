"""Hurwitz class numbers from reduced binary quadratic forms, and sc_t counts.

Everything is exact: class numbers are ``fractions.Fraction`` values and
the 7-core formulas check integrality before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from numbers import Rational

from .errors import NonIntegralResult, NonNegativeArgument, PreconditionViolated

__all__ = [
    "QuadraticForm",
    "reduced_forms",
    "form_weight",
    "hurwitz",
    "sc2_count",
    "sc3_count",
    "sc7_ono_raji",
    "sc7_bkm",
]


@dataclass(frozen=True, order=True)
class QuadraticForm:
    """ax^2 + bxy + cy^2."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_positive_definite(self) -> bool:
        return self.discriminant < 0 and self.a > 0

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (abs(b) <= a <= c):
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return True

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"


def reduced_forms(D: int) -> list[QuadraticForm]:
    """All reduced positive-definite forms of discriminant -D, primitive or not."""
    if D < 1:
        raise ValueError(f"D must be positive, got {D}")
    if D % 4 not in (0, 3):
        return []
    forms = []
    b = D % 2
    while 3 * b * b <= D:
        ac = (b * b + D) // 4
        a = max(b, 1)
        while a * a <= ac:
            if ac % a == 0:
                c = ac // a
                forms.append(QuadraticForm(a, b, c))
                if 0 < b < a < c:
                    forms.append(QuadraticForm(a, -b, c))
            a += 1
        b += 2
    return forms


def form_weight(f: QuadraticForm) -> Fraction:
    """Inverse of half the automorphism-group order, for a reduced form."""
    if f.a == f.b == f.c:
        return Fraction(1, 3)
    if f.b == 0 and f.a == f.c:
        return Fraction(1, 2)
    return Fraction(1)


def hurwitz(arg) -> Fraction:
    """Hurwitz class number H(arg) for a negative rational ``arg``.

    Non-integral arguments give 0, as do discriminants that are not
    0 or 1 mod 4.
    """
    if not isinstance(arg, Rational):
        arg = Fraction(arg)
    if arg >= 0:
        raise NonNegativeArgument(f"H is only defined for negative arguments, got {arg}")
    if Fraction(arg).denominator != 1:
        return Fraction(0)
    D = -int(arg)
    return sum((form_weight(f) for f in reduced_forms(D)), Fraction(0))


def sc2_count(n: int) -> int:
    """1 if n is triangular, else 0."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    s = isqrt(8 * n + 1)
    return 1 if s * s == 8 * n + 1 else 0


def sc3_count(n: int) -> int:
    """1 if n = r(3r - 2) or r(3r + 2) for some r >= 1, else 0."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    # 3r^2 -+ 2r - n = 0  =>  r = (+-1 + sqrt(1 + 3n)) / 3
    s = isqrt(3 * n + 1)
    if s * s != 3 * n + 1:
        return 0
    return 1 if (s - 1) % 3 == 0 or (s + 1) % 3 == 0 else 0


def _as_count(value: Fraction, n: int) -> int:
    if value.denominator != 1 or value < 0:
        raise NonIntegralResult(f"class-number combination for n={n} gave {value}")
    return int(value)


def sc7_ono_raji(n: int) -> int:
    """sc_7(n) for odd n not congruent to 5 mod 7, by a single class number."""
    if n < 1 or n % 2 == 0 or n % 7 == 5:
        raise PreconditionViolated(f"n must be a positive odd integer with n % 7 != 5, got {n}")
    if n % 4 == 1:
        value = hurwitz(-28 * n - 56) / 4
    elif n % 8 == 3:
        value = hurwitz(-7 * n - 14) / 2
    else:
        value = Fraction(0)
    return _as_count(value, n)


def sc7_bkm(n: int) -> int:
    """sc_7(n) for any n >= 1 as a four-term class-number combination."""
    if n < 1:
        raise PreconditionViolated(f"n must be >= 1, got {n}")
    value = (
        hurwitz(-28 * n - 56)
        - hurwitz(Fraction(-4 * n - 8, 7))
        - 2 * hurwitz(-7 * n - 14)
        + 2 * hurwitz(Fraction(-n - 2, 7))
    ) / 4
    return _as_count(value, n)
