import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from instanton_quotients.dedekind import (
    CoprimalityError,
    cotangent_sum,
    d_special,
    d_sum,
    rademacher_defect,
    s_sum,
    sawtooth,
)


def brute_d(a, b, c):
    """Independent oracle: the defining sum, written out without the library."""
    total = F(0)
    for i in range(1, c):
        x, y = F(a * i, c), F(b * i, c)
        sx = F(0) if x.denominator == 1 else x - math.floor(x) - F(1, 2)
        sy = F(0) if y.denominator == 1 else y - math.floor(y) - F(1, 2)
        total += sx * sy
    return total


def test_sawtooth_examples():
    assert sawtooth(7) == 0
    assert sawtooth(F(1, 3)) == F(-1, 6)
    assert sawtooth(F(1, 2)) == 0


@given(st.fractions(max_denominator=1000))
def test_sawtooth_is_odd(x):
    assert sawtooth(-x) == -sawtooth(x)


@pytest.mark.parametrize(
    "b, c, expected",
    [(0, 3, F(0)), (1, 3, F(1, 18)), (2, 5, F(0)), (4, 7, F(1, 14)), (3, 7, F(-1, 14))],
)
def test_s_sum_examples(b, c, expected):
    assert s_sum(b, c) == expected
    assert s_sum(b, c, method="brute") == expected


def test_s_sum_domain():
    with pytest.raises(ValueError):
        s_sum(1, 0)
    with pytest.raises(CoprimalityError):
        s_sum(2, 4)
    # brute force is defined for any numerator
    assert s_sum(2, 4, method="brute") == brute_d(1, 2, 4)


@pytest.mark.parametrize(
    "a, b, c, expected",
    [(1, 1, 2, F(0)), (5, -1, 6, F(5, 18)), (1, 1, 3, F(1, 18))],
)
def test_d_sum_examples(a, b, c, expected):
    assert d_sum(a, b, c) == expected
    assert d_sum(a, b, c, method="brute") == expected
    assert brute_d(a, b, c) == expected


def test_d_sum_rejects_common_factors():
    for args in [(2, 4, 5), (3, 1, 6), (1, 5, 10)]:
        with pytest.raises(CoprimalityError):
            d_sum(*args)


coprime_triples = st.tuples(
    st.integers(-300, 300), st.integers(-300, 300), st.integers(1, 150)
).filter(lambda t: math.gcd(t[0], t[1]) == math.gcd(t[1], t[2]) == math.gcd(t[0], t[2]) == 1)


@given(coprime_triples)
def test_reduce_matches_definition(t):
    a, b, c = t
    assert d_sum(a, b, c) == brute_d(a, b, c)


@given(coprime_triples)
def test_sign_and_periodicity(t):
    a, b, c = t
    assert d_sum(-a, b, c) == -d_sum(a, b, c)
    if math.gcd(a + c, b) == 1:
        assert d_sum(a + c, b, c) == d_sum(a, b, c)


@given(st.integers(-500, 500), st.integers(1, 200))
def test_s_sum_periodic(b, c):
    if math.gcd(b, c) == 1:
        assert s_sum(b + c, c) == s_sum(b, c)


def test_unit_scaling_exhaustive_small_moduli():
    for c in range(1, 30):
        units = [d for d in range(1, c + 1) if math.gcd(d, c) == 1]
        for a in units:
            for b in units:
                if math.gcd(a, b) != 1:
                    continue
                base = d_sum(a, b, c)
                for d in units:
                    a2, b2 = a * d % c or c, b * d % c or c
                    if math.gcd(a2, b2) == 1:
                        assert d_sum(a2, b2, c) == base


@pytest.mark.parametrize("triple", [(1, 1, 2), (1, 2, 3), (3, 5, 7), (7, 11, 13), (2, 9, 25)])
def test_rademacher_examples(triple):
    assert rademacher_defect(*triple) == 0


@given(st.integers(1, 60), st.integers(1, 60), st.integers(1, 60))
def test_rademacher_random(a, b, c):
    if math.gcd(a, b) == math.gcd(b, c) == math.gcd(a, c) == 1:
        assert rademacher_defect(a, b, c) == 0


@pytest.mark.parametrize("x, y, expected", [(1, 3, F(5, 18)), (1, 1, F(0)), (2, 1, F(-1, 8))])
def test_d_special_examples(x, y, expected):
    assert d_special(x, y) == expected
    assert brute_d(2 * x + y, 2 * x - y, 2 * x * y) == expected


def test_d_special_domain():
    for x, y in [(1, 2), (3, 3), (2, 4)]:
        with pytest.raises(CoprimalityError):
            d_special(x, y)
    with pytest.raises(ValueError):
        d_special(0, 1)


def test_cotangent_sum_small_case():
    # s(1, 3) = (1/12)(cot^2(pi/3) + cot^2(2 pi/3)) = (1/12)(2/3)
    assert abs(cotangent_sum(1, 1, 3) - 1 / 18) < 1e-12
