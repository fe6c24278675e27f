import pytest
from hypothesis import given, strategies as st

from brauerc.laurent import DELTA, ONE, ZERO, LaurentPoly, delta_power

terms = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5)
polys = terms.map(LaurentPoly)


def test_zero_coefficients_dropped():
    p = LaurentPoly({2: 3, 1: 0, -1: 1})
    assert p.terms == {2: 3, -1: 1}
    assert LaurentPoly({3: 0}) == ZERO
    assert ZERO.is_zero()


def test_construction_merges_repeated_exponents():
    assert LaurentPoly([(1, 2), (1, -2), (0, 4)]) == 4


def test_str_and_degree_range():
    assert str(LaurentPoly({2: 1, 1: 1, 0: 1})) == "d^2 + d + 1"
    assert str(LaurentPoly({-1: -2, 0: 3})) == "3 - 2*d^-1"
    assert str(ZERO) == "0"
    assert LaurentPoly({-2: 1, 5: 1}).degree_range() == (-2, 5)


def test_units_invert():
    assert DELTA**-1 * DELTA == ONE
    assert (-delta_power(3)) ** -1 == -delta_power(-3)
    with pytest.raises(ValueError):
        (DELTA + 1) ** -1


def test_evaluate_and_shift():
    p = LaurentPoly({1: 2, -1: 3})
    assert p.evaluate(2) == 2 * 2 + 3 * 2**-1
    assert p.shift(2) == LaurentPoly({3: 2, 1: 3})


def test_json_round_trip():
    p = LaurentPoly({-3: 7, 4: -1})
    assert LaurentPoly.from_json(p.to_json()) == p
    assert p.to_json() == {"terms": [[-3, 7], [4, -1]]}


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        LaurentPoly({1: 0.5})


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, st.integers(-4, 4))
def test_evaluation_is_a_homomorphism(a, x):
    from fractions import Fraction

    if x == 0:
        return
    x = Fraction(x)
    b = a * a + 1
    assert b.evaluate(x) == a.evaluate(x) ** 2 + 1


@given(polys)
def test_hash_matches_equality(a):
    b = LaurentPoly(dict(a.terms))
    assert a == b and hash(a) == hash(b)
