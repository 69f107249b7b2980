from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hkmonoid.linalg import RationalMatrix, format_rational, full_rank_factorization, parse_rational, rank

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_dim=5):
    m = draw(st.integers(1, max_dim))
    n = draw(st.integers(1, max_dim))
    # bias towards low rank: small entry pool with many zeros
    pool = st.one_of(st.just(Fraction(0)), fractions)
    return RationalMatrix([[draw(pool) for _ in range(n)] for _ in range(m)], n)


def to_sympy(m):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in m.rows])


def test_parse_rational():
    assert parse_rational("1/3") == Fraction(1, 3)
    assert parse_rational("-2") == -2
    assert parse_rational("+7/14") == Fraction(1, 2)
    assert parse_rational(5) == 5


@pytest.mark.parametrize("bad", ["0.5", "1e3", "1/", "/3", "abc", "", "1/-3"])
def test_parse_rational_refuses_inexact(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_parse_rational_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


def test_format_rational():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-1, 3)) == "-1/3"


def test_basic_ops():
    a = RationalMatrix([[1, 2], [3, 4]])
    assert (a @ RationalMatrix.identity(2)) == a
    assert (a - a).is_zero()
    assert a.trace() == 5
    assert a.det() == -2
    assert a.transpose()[0, 1] == 3
    assert (a + a) == a.scale(2)
    with pytest.raises(ValueError):
        RationalMatrix([[1, 2], [3]])


def test_rank_examples():
    assert rank(RationalMatrix([[1, 1], [1, 1]])) == 1
    assert rank(RationalMatrix.zeros(3, 2)) == 0
    assert rank(RationalMatrix.identity(4)) == 4


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_matches_sympy(m):
    assert m.rank() == to_sympy(m).rank()


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(fractions, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_sympy(rows):
    m = RationalMatrix(rows)
    assert m.det() == Fraction(str(to_sympy(m).det()))


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_full_rank_factorization(m):
    C, D = full_rank_factorization(m)
    r = m.rank()
    assert C.shape == (m.nrows, r) and D.shape == (r, m.ncols)
    if r:
        assert C @ D == m
        assert C.rank() == r and D.rank() == r
    else:
        assert m.is_zero()


def test_factorization_of_invertible_is_trivial():
    m = RationalMatrix([[1, 2, 0], [0, 1, 1], [1, 0, 1]])
    C, D = full_rank_factorization(m)
    assert C == RationalMatrix.identity(3) and D == m


def test_factorization_keeps_first_independent_rows():
    m = RationalMatrix([[1, 1, 1], [1, 1, 1], [1, 1, 2]])
    C, D = full_rank_factorization(m)
    assert D.rows == (m.rows[0], m.rows[2])
    assert C == RationalMatrix([[1, 0], [1, 0], [0, 1]])
