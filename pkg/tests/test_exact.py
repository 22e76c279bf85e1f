from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from instanton_quotients.exact import (
    MonomialUnitary,
    QuadraticScalar,
    Quaternion,
    RationalMatrix3,
    Turn,
    format_rational,
    monomial_product,
    parse_rational,
    quaternion_product,
    turn_eigen_angles,
)
from instanton_quotients.groups.construct import binary_tetrahedral_elements

fractions = st.builds(F, st.integers(-600, 600), st.integers(1, 60))
turns = fractions.map(Turn)
monomials = st.builds(MonomialUnitary, st.booleans(), turns, turns)


def test_rational_wire_format_round_trips():
    for x in [F(0), F(5), F(-1, 4), F(123456789, 987654321)]:
        assert parse_rational(format_rational(x)) == x
    assert format_rational(F(6, 3)) == "2"
    assert format_rational(F(-2, 4)) == "-1/2"


@pytest.mark.parametrize("bad", ["", "1.5", "1e3", "1/2/3", "a", "1/"])
def test_parse_rational_rejects_non_fractions(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@given(fractions, fractions)
def test_fraction_sum_cross_multiplies(x, y):
    s = x + y
    assert s.numerator * x.denominator * y.denominator == s.denominator * (
        x.numerator * y.denominator + y.numerator * x.denominator
    )


def test_turn_reduces_into_unit_interval():
    assert Turn(F(5, 4)).fraction == F(1, 4)
    assert Turn(F(-1, 3)).fraction == F(2, 3)
    assert Turn(1).is_zero
    assert (Turn(F(3, 4)) + Turn(F(1, 2))).fraction == F(1, 4)
    assert Turn(F(3, 8)).order == 8


@given(fractions)
def test_turn_is_in_range(x):
    t = Turn(x)
    assert 0 <= t.fraction < 1
    assert Turn(t.fraction) == t


def test_eigen_turns_examples():
    assert turn_eigen_angles(MonomialUnitary.diagonal(F(1, 4), F(3, 4))) == (Turn(F(1, 4)), Turn(F(3, 4)))
    assert turn_eigen_angles(MonomialUnitary.anti(0, F(1, 2))) == (Turn(F(1, 4)), Turn(F(3, 4)))
    assert turn_eigen_angles(MonomialUnitary.anti(0, 0)) == (Turn(0), Turn(F(1, 2)))


def test_monomial_product_examples():
    i = MonomialUnitary.diagonal(F(1, 4), F(3, 4))
    assert monomial_product(i, i) == MonomialUnitary.diagonal(F(1, 2), F(1, 2))
    w = MonomialUnitary.anti(0, F(1, 2))
    assert monomial_product(w, w) == MonomialUnitary.diagonal(F(1, 2), F(1, 2))
    assert monomial_product(MonomialUnitary.identity(), w) == w


def _as_matrix(m):
    # explicit 2x2 complex matrix with exact turn entries as (turn or None)
    if m.antidiagonal:
        return [[None, m.a], [m.b, None]]
    return [[m.a, None], [None, m.b]]


def _matmul(x, y):
    out = [[None, None], [None, None]]
    for i in range(2):
        for j in range(2):
            terms = [x[i][k] + y[k][j] for k in range(2) if x[i][k] is not None and y[k][j] is not None]
            assert len(terms) <= 1
            out[i][j] = terms[0] if terms else None
    return out


@given(monomials, monomials)
def test_monomial_product_matches_matrix_product(x, y):
    assert _as_matrix(x * y) == _matmul(_as_matrix(x), _as_matrix(y))


@given(monomials, monomials, monomials)
def test_monomial_product_is_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(monomials)
def test_monomial_inverse(m):
    assert (m * m.inverse()).is_identity
    assert (m.inverse() * m).is_identity


@given(fractions, fractions, fractions, fractions)
def test_commuting_diagonal_eigen_turns_add(a, b, c, d):
    x, y = MonomialUnitary.diagonal(a, b), MonomialUnitary.diagonal(c, d)
    ex, ey, exy = x.eigen_turns(), y.eigen_turns(), (x * y).eigen_turns()
    assert exy == (ex[0] + ey[0], ex[1] + ey[1])


def test_quaternion_examples():
    i, j, k = Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)
    assert quaternion_product(i, j) == k
    h = F(1, 2)
    t = Quaternion(h, h, h, h)
    assert t**3 == -Quaternion(1)
    assert t * t.inverse() == Quaternion(1)


def test_hurwitz_units_norm_is_multiplicative():
    units = binary_tetrahedral_elements()
    assert len(set(units)) == 24
    one = QuadraticScalar(1)
    for x in units:
        for y in units:
            assert (x * y).norm2() == one


def test_quadratic_scalar_arithmetic():
    r2 = QuadraticScalar(0, 1, 2)
    assert r2 * r2 == QuadraticScalar(2)
    phi = QuadraticScalar(F(1, 2), F(1, 2), 5)
    assert phi * phi == phi + 1
    assert (phi * phi.inverse()) == QuadraticScalar(1)
    assert abs(float(phi) - 1.6180339887) < 1e-9
    with pytest.raises(ValueError):
        _ = r2 + QuadraticScalar(0, 1, 5)


def test_rational_matrix_rotation_check():
    rz = RationalMatrix3([[0, -1, 0], [1, 0, 0], [0, 0, 1]])
    assert rz.is_rotation()
    assert rz**4 == RationalMatrix3.identity()
    assert rz @ rz.inverse() == RationalMatrix3.identity()
    reflection = RationalMatrix3([[1, 0, 0], [0, 1, 0], [0, 0, -1]])
    assert not reflection.is_rotation()
    # a rational rotation from the Pythagorean triple 3-4-5
    r = RationalMatrix3([[F(3, 5), F(-4, 5), 0], [F(4, 5), F(3, 5), 0], [0, 0, 1]])
    assert r.is_rotation()
    assert r.det() == 1
    assert not RationalMatrix3([[2, 0, 0], [0, 1, 0], [0, 0, F(1, 2)]]).is_rotation()
