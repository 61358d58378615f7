import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from progdisc.exactnum import SqrtRational, binomial, exact_sqrt, is_square, vandermonde_check

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=1000)
nonneg = st.fractions(min_value=0, max_value=50, max_denominator=1000)


@pytest.mark.parametrize("n,k,expected", [(5, 2, 10), (7, 0, 1), (4, 6, 0), (4, -1, 0), (0, 0, 1)])
def test_binomial_values(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_binomial_matches_pascal_triangle():
    row = [1]
    for n in range(1, 40):
        row = [1] + [a + b for a, b in zip(row, row[1:])] + [1]
        assert [binomial(n, k) for k in range(n + 1)] == row


@given(st.integers(0, 200), st.integers(0, 200))
def test_binomial_symmetry(n, k):
    if k <= n:
        assert binomial(n, k) == binomial(n, n - k)


@pytest.mark.parametrize("n,m,k", [(2, 3, 2), (5, 4, 0), (4, 3, 7)])
def test_vandermonde_examples(n, m, k):
    assert vandermonde_check(n, m, k)


def test_vandermonde_sweep():
    for n in range(13):
        for m in range(13):
            assert all(vandermonde_check(n, m, k) for k in range(n + m + 1))


def test_vandermonde_range():
    with pytest.raises(ValueError):
        vandermonde_check(2, 2, 5)


@given(fractions.filter(bool), fractions.filter(bool))
def test_rational_round_trip(a, b):
    assert (a / b) * (b / a) == 1


def test_perfect_squares():
    assert is_square(Fraction(9, 25))
    assert not is_square(Fraction(2, 5))
    assert not is_square(Fraction(-1, 4))
    assert exact_sqrt(Fraction(49, 4)) == Fraction(7, 2)
    with pytest.raises(ValueError):
        exact_sqrt(Fraction(3))


@given(st.sampled_from([-1, 1]), nonneg.filter(bool), st.sampled_from([-1, 1]), nonneg.filter(bool))
def test_sqrt_rational_product(s1, q1, s2, q2):
    p = SqrtRational(s1, q1) * SqrtRational(s2, q2)
    assert p.sign == s1 * s2
    assert p.square == q1 * q2
    assert math.isclose(float(p), float(SqrtRational(s1, q1)) * float(SqrtRational(s2, q2)), rel_tol=1e-12)


def test_sqrt_rational_canonical_form():
    with pytest.raises(ValueError):
        SqrtRational(0, Fraction(1))
    with pytest.raises(ValueError):
        SqrtRational(1, Fraction(0))
    with pytest.raises(ValueError):
        SqrtRational(1, Fraction(-1))
    assert SqrtRational.from_rational(Fraction(-3, 5)) == SqrtRational(-1, Fraction(9, 25))
    assert SqrtRational.from_rational(0) == SqrtRational.zero()


def test_sqrt_rational_addition():
    r = SqrtRational.sqrt_of(Fraction(2, 5))
    assert r + SqrtRational.zero() == r
    assert r + r == SqrtRational(1, Fraction(8, 5))
    assert r - r == SqrtRational.zero()
    assert math.isclose(float(r + r), 2 * math.sqrt(0.4))
    with pytest.raises(ValueError):
        r + SqrtRational.sqrt_of(3)


def test_sqrt_rational_rational_part():
    assert SqrtRational.sqrt_of(Fraction(9, 25)).to_fraction() == Fraction(3, 5)
    assert not SqrtRational.sqrt_of(Fraction(2, 5)).is_rational()
    assert str(SqrtRational.sqrt_of(Fraction(2, 5))) == "sqrt(2/5)"
    assert str(-SqrtRational.sqrt_of(Fraction(1, 4))) == "-1/2"
