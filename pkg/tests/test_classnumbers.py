from fractions import Fraction

import pytest

from corekit.classnumbers import (
    QuadraticForm,
    form_weight,
    hurwitz,
    reduced_forms,
    sc2_count,
    sc3_count,
    sc7_bkm,
    sc7_ono_raji,
)
from corekit.enumeration import sc_t_counts_bruteforce
from corekit.errors import NonNegativeArgument, PreconditionViolated
from corekit.verification import hurwitz_oracle


def triple_loop_forms(D):
    """Reduced forms of discriminant -D by looping over a, b, c directly."""
    out = []
    for a in range(1, D + 1):
        for b in range(-a, a + 1):
            for c in range(a, D + 1):
                if b * b - 4 * a * c != -D:
                    continue
                if (abs(b) == a or a == c) and b < 0:
                    continue
                out.append((a, b, c))
    return sorted(out)


@pytest.mark.parametrize("D", range(1, 80))
def test_reduced_forms_match_triple_loop(D):
    forms = reduced_forms(D)
    assert sorted(tuple(f) for f in forms) == triple_loop_forms(D)
    assert all(f.is_reduced() and f.is_positive_definite() and f.discriminant == -D for f in forms)


def test_reduced_forms_examples():
    assert reduced_forms(3) == [QuadraticForm(1, 1, 1)]
    assert reduced_forms(23) == [QuadraticForm(1, 1, 6), QuadraticForm(2, 1, 3), QuadraticForm(2, -1, 3)]
    assert reduced_forms(1) == []


def test_weights():
    assert form_weight(QuadraticForm(1, 1, 1)) == Fraction(1, 3)
    assert form_weight(QuadraticForm(2, 2, 2)) == Fraction(1, 3)
    assert form_weight(QuadraticForm(3, 0, 3)) == Fraction(1, 2)
    assert form_weight(QuadraticForm(2, 1, 3)) == 1


@pytest.mark.parametrize("arg, expected", [
    (-3, Fraction(1, 3)),
    (-4, Fraction(1, 2)),
    (-23, 3),
    (-84, 4),
    (-35, 2),
    (-12, Fraction(4, 3)),
    (Fraction(-36, 7), 0),
    (-1, 0),
    (-2, 0),
    (Fraction(-14, 7), 0),
])
def test_hurwitz_examples(arg, expected):
    assert hurwitz(arg) == expected


def test_hurwitz_rejects_nonnegative():
    for arg in (0, 5, Fraction(1, 7)):
        with pytest.raises(NonNegativeArgument):
            hurwitz(arg)


def test_hurwitz_matches_direct_scan():
    for D in range(1, 600):
        assert hurwitz(-D) == hurwitz_oracle(D)
        assert hurwitz(-D).denominator in (1, 2, 3, 6)


def test_sc2_sc3_examples():
    assert (sc2_count(6), sc2_count(5), sc2_count(1)) == (1, 0, 1)
    assert (sc3_count(5), sc3_count(8), sc3_count(2), sc3_count(1)) == (1, 1, 0, 1)


def test_sc7_examples():
    assert sc7_ono_raji(7) == 0
    assert sc7_ono_raji(1) == 1
    assert sc7_ono_raji(3) == 1
    assert sc7_bkm(1) == 1
    assert sc7_bkm(7) == 0
    assert sc7_bkm(2) == 0


@pytest.mark.parametrize("n", [2, 5, 12, 0, -1])
def test_sc7_ono_raji_preconditions(n):
    with pytest.raises(PreconditionViolated):
        sc7_ono_raji(n)


def test_sc7_formulas_match_brute_force_to_120():
    brute = sc_t_counts_bruteforce(120, 7)
    for n in range(1, 121):
        assert sc7_bkm(n) == brute[n]
        if n % 2 and n % 7 != 5:
            assert sc7_ono_raji(n) == brute[n]
