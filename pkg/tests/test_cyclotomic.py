import cmath
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from poissonorder.cyclotomic import (Monomial, RootOfUnity, make_root, order_of_power, parse_root,
                                     primitive_root, q_factorial_is_zero, q_number_is_zero)
from poissonorder.errors import InvalidOrder, ParseError

roots = st.builds(make_root, st.integers(-60, 60), st.integers(1, 30))


def as_complex(z):
    return cmath.exp(2j * cmath.pi * float(z.exponent))


@given(roots, roots, roots)
def test_group_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * a.inverse() == make_root(0, 1)


@given(roots, st.integers(-20, 20), st.integers(-20, 20))
def test_power_rules(a, m, n):
    assert a ** (m + n) == a ** m * a ** n
    assert (a ** m) ** n == a ** (m * n)


@given(roots)
def test_order_is_minimal(a):
    n = a.order()
    assert (a ** n).is_one()
    assert all(not (a ** k).is_one() for k in range(1, n))


@given(roots, st.integers(1, 40))
def test_order_of_power(a, k):
    assert order_of_power(a, k) == (a ** k).order()


@given(roots, st.integers(0, 40))
def test_q_number_zero_matches_geometric_sum(q, n):
    # float oracle for 1 + q + ... + q^(n-1)
    s = sum(as_complex(q) ** k for k in range(n))
    assert q_number_is_zero(n, q) == (abs(s) < 1e-9)


@given(roots, st.integers(0, 12))
def test_q_factorial(q, n):
    assert q_factorial_is_zero(n, q) == any(q_number_is_zero(k, q) for k in range(1, n + 1))


def test_normalization_and_parsing():
    assert make_root(7, 5) == make_root(2, 5)
    assert make_root(-1, 2) == make_root(1, 2)
    assert make_root(3, -4) == make_root(-3, 4)
    assert parse_root(" 3/6 ") == make_root(1, 2)
    assert parse_root("4") == make_root(0, 1)
    assert str(primitive_root(12)) == "1/12"


@pytest.mark.parametrize("text", ["3/0", "3/-2"])
def test_bad_order(text):
    with pytest.raises(InvalidOrder):
        parse_root(text)


@pytest.mark.parametrize("text", ["x", "1/2/3", "", "1.5/2"])
def test_bad_text(text):
    with pytest.raises(ParseError):
        parse_root(text)


def test_make_root_zero_order():
    with pytest.raises(InvalidOrder):
        make_root(1, 0)


@given(roots, st.integers(-6, 6), roots, st.integers(-6, 6), st.integers(1, 24))
def test_monomial_evaluation_is_a_homomorphism(c1, e1, c2, e2, N):
    xi = primitive_root(N)
    m1, m2 = Monomial(c1, e1), Monomial(c2, e2)
    assert (m1 * m2).evaluate(xi) == m1.evaluate(xi) * m2.evaluate(xi)
    assert m1.inverse().evaluate(xi) == m1.evaluate(xi).inverse()


def test_monomial_order_and_identity():
    assert Monomial(make_root(1, 3), 0).order() == 3
    assert Monomial(make_root(0, 1), 2).order() is None
    assert Monomial(make_root(0, 1), 0).is_one()
    # p nu^t - 1 at xi
    assert Monomial(make_root(-1, 5), 1).vanishes_minus_one_at(primitive_root(5))
    assert not Monomial(make_root(0, 1), 1).vanishes_minus_one_at(primitive_root(5))


def test_exponent_is_reduced():
    assert RootOfUnity(Fraction(9, 4)).exponent == Fraction(1, 4)
