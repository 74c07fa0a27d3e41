from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from equimetric.exactq import (
    QPoly, Q, format_rat, height, is_rat_square, parse_rat, rat_sqrt, rational_roots_cubic,
    rationals_of_height, solve_quadratic,
)

rats = st.fractions(max_denominator=10 ** 6)


def test_wire_format():
    assert format_rat(F(5)) == "5/1"
    assert format_rat(F(-6, 4)) == "-3/2"
    assert parse_rat(" -3/2 ") == F(-3, 2)
    assert parse_rat("7") == F(7)


@pytest.mark.parametrize("bad", ["", "1/0", "x", "1.5", "1/2/3"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_rat(bad)


def test_Q_refuses_floats():
    with pytest.raises(TypeError):
        Q(0.5)


@given(rats)
def test_format_roundtrip(x):
    assert parse_rat(format_rat(x)) == x


def test_rat_sqrt_examples():
    assert rat_sqrt(F(9, 4)) == F(3, 2)
    assert rat_sqrt(0) == 0
    assert rat_sqrt(2) is None
    assert rat_sqrt(F(1, 2)) is None
    with pytest.raises(ValueError):
        rat_sqrt(-1)
    assert not is_rat_square(-4)


@given(rats)
def test_rat_sqrt_of_square(y):
    assert rat_sqrt(y * y) == abs(y)


@given(rats, rats, rats)
def test_distributive(x, y, z):
    assert (x + y) * z == x * z + y * z


def test_height():
    assert height(F(-7, 3)) == 7
    assert height(F(2, 9)) == 9
    hs = rationals_of_height(3)
    assert F(0) in hs and F(-3) in hs and F(2, 3) in hs
    assert all(height(x) <= 3 for x in hs)
    assert len(hs) == len(set(hs)) == 2 * len(rationals_of_height(3, positive=True)) + 1


def test_qpoly_horner():
    q = QPoly([1, -2, 0, 3])
    assert q.degree == 3
    for x in (F(0), F(2), F(-1, 3)):
        assert q(x) == 1 - 2 * x + 3 * x ** 3
    assert QPoly([1, 0, 0]).degree == 0
    with pytest.raises(ValueError):
        QPoly([1] * 6)


def test_solve_quadratic_examples():
    assert solve_quadratic(1, -3, 2) == [1, 2]
    assert solve_quadratic(1, 0, -2) == []
    assert solve_quadratic(0, 2, -1) == [F(1, 2)]
    assert solve_quadratic(0, 0, 5) == []
    with pytest.raises(ValueError):
        solve_quadratic(0, 0, 0)


def test_isosceles_quadratic_at_m7():
    # a^2 + a - (m^2 - 1) at m = 7 is a^2 + a - 48, discriminant 193
    assert solve_quadratic(1, 1, -48) == []
    # {6, -7} belongs to a^2 + a - 42
    assert solve_quadratic(1, 1, -42) == [-7, 6]


@given(rats, rats, st.fractions(min_value=F(1, 100), max_value=100, max_denominator=100))
def test_quadratic_recovers_roots(r1, r2, lead):
    roots = solve_quadratic(lead, -lead * (r1 + r2), lead * r1 * r2)
    assert roots == sorted({r1, r2})


def test_cubic_examples():
    m = F(16, 11)
    eq7 = ((m + 1) * (m - 1) ** 2, 0, -m * m * (m + 1), 2 * m * m)
    assert F(8, 3) in rational_roots_cubic(*eq7)
    assert rational_roots_cubic(1, 0, -1, 0) == [-1, 0, 1]
    assert rational_roots_cubic(3, 0, -12, 8) == []
    with pytest.raises(ValueError):
        rational_roots_cubic(0, 1, 1, 1)


@given(st.fractions(max_denominator=12).filter(lambda x: abs(x.numerator) < 200),
       st.fractions(max_denominator=12).filter(lambda x: abs(x.numerator) < 200),
       st.integers(-30, 30))
def test_cubic_contains_planted_roots(r1, r2, c):
    # (x - r1)(x - r2)(x - c)
    a2 = -(r1 + r2 + c)
    a1 = r1 * r2 + c * (r1 + r2)
    a0 = -r1 * r2 * c
    roots = rational_roots_cubic(1, a2, a1, a0)
    assert {r1, r2, F(c)} == set(roots)
