import cmath
import math
from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from instanton_quotients.dedekind import CoprimalityError, s_sum
from instanton_quotients.eta import (
    EtaValue,
    FixedPointError,
    SpaceFormRep,
    dihedral_contradiction_scan,
    dihedral_representation,
    eta_case_formula,
    eta_case_term,
    eta_dihedral_closed,
    eta_element,
    eta_geometric,
    eta_space_form,
)
from instanton_quotients.eta import eta_case_term_derived
from instanton_quotients.exact import MonomialUnitary

M = MonomialUnitary


def valid_uv(limit):
    return [(u, v) for u in range(1, limit + 1, 2) for v in range(1, limit + 1)
            if 4 * u * v <= limit and math.gcd(u, 4 * v) == 1]


def matrix_eta(elements):
    """Oracle: eigenvalues from the actual 2x2 complex matrices, no turn bookkeeping."""
    total = 0.0
    for m in elements:
        if m.is_identity:
            continue
        a = cmath.exp(2j * math.pi * float(m.a.fraction))
        b = cmath.exp(2j * math.pi * float(m.b.fraction))
        if m.antidiagonal:
            # [[0, a], [b, 0]]: eigenvalues are the square roots of ab
            r = cmath.sqrt(a * b)
            eig = (r, -r)
        else:
            eig = (a, b)
        half = [cmath.phase(z) / 2 for z in eig]
        total += -(math.cos(half[0]) / math.sin(half[0])) * (math.cos(half[1]) / math.sin(half[1]))
    return total / len(elements)


# ---------------------------------------------------------------- single elements


def test_eta_element_examples():
    assert eta_element(M.anti(0, F(1, 2))).exact == 1
    assert eta_element(M.diagonal(F(1, 2), F(1, 2))).exact == 0
    assert eta_element(M.diagonal(F(1, 4), F(3, 4))).exact == 1


def test_eta_element_rejects_fixed_points():
    with pytest.raises(FixedPointError):
        eta_element(M.identity())
    with pytest.raises(FixedPointError):
        eta_element(M.diagonal(0, F(1, 3)))


@given(st.integers(1, 50), st.integers(2, 50))
def test_eta_element_diagonal_matches_cotangents(k, n):
    assume(k % n)
    t = F(k, n)
    value = eta_element(M.diagonal(t, -t))
    assert abs(value.numeric - (math.cos(math.pi * t) / math.sin(math.pi * t)) ** 2) < 1e-9


@given(st.integers(0, 40), st.integers(0, 40), st.integers(1, 40))
def test_anti_diagonal_contributes_one(a, b, n):
    # eigen-turns are (a+b)/2 and (a+b)/2 + 1/2, so a + b must not be an integer
    assume((a + b) % n)
    assert eta_element(M.anti(F(a, n), F(b, n))).exact == 1


def test_eta_value_invariant():
    with pytest.raises(ValueError):
        EtaValue(0.5, F(1, 3))
    v = EtaValue.of(F(3, 4))
    assert v.numeric == 0.75 and v.is_exact


# ---------------------------------------------------------------- whole groups


def test_eta_space_form_examples():
    trivial = SpaceFormRep((M.identity(),), 1)
    assert eta_space_form(trivial).exact == 0
    pm = SpaceFormRep((M.identity(), M.diagonal(F(1, 2), F(1, 2))), 2)
    assert eta_space_form(pm).exact == 0
    i = M.diagonal(F(1, 4), F(3, 4))
    j = M.anti(0, F(1, 2))
    q8 = SpaceFormRep.generated_by([i, j])
    assert q8.order == 8
    assert eta_space_form(q8).exact == F(3, 4)


def test_space_form_rep_validation():
    with pytest.raises(ValueError):
        SpaceFormRep((M.identity(),), 2)
    with pytest.raises(ValueError):
        SpaceFormRep((M.diagonal(F(1, 2), F(1, 2)),), 1)
    with pytest.raises(ValueError):
        SpaceFormRep((M.identity(), M.diagonal(F(1, 4), F(3, 4))), 2)
    with pytest.raises(FixedPointError):
        SpaceFormRep.generated_by([M.diagonal(0, F(1, 2))])


@pytest.mark.parametrize("u, v, n", [(1, 2, 8), (5, 2, 40), (1, 3, 12), (3, 1, 12), (7, 4, 112)])
def test_dihedral_representation_sizes(u, v, n):
    rep = dihedral_representation(u, v)
    assert rep.order == n == len(set(rep.elements))
    assert all(not any(t.is_zero for t in g.eigen_turns()) for g in rep.elements if not g.is_identity)


def test_dihedral_representation_one_two_is_quaternion_group():
    rep = dihedral_representation(1, 2)
    orders = sorted(next(k for k in range(1, 9) if (g**k).is_identity) for g in rep.elements)
    assert orders == [1, 2, 4, 4, 4, 4, 4, 4]


def test_dihedral_representation_rejects_bad_parameters():
    for u, v in [(2, 1), (3, 3), (5, 5)]:
        with pytest.raises(CoprimalityError):
            dihedral_representation(u, v)
    with pytest.raises(ValueError):
        dihedral_representation(0, 1)


@pytest.mark.parametrize("u, v, expected", [(1, 2, F(3, 4)), (5, 2, F(3, 20)), (7, 4, F(-5, 56))])
def test_eta_dihedral_closed_examples(u, v, expected):
    assert eta_dihedral_closed(u, v) == expected
    assert s_sum(4, 7, method="brute") == F(1, 14)


def test_sign_convention_fixed_by_quaternion_group():
    assert eta_space_form(dihedral_representation(1, 2)).exact == F(3, 4)


@pytest.mark.parametrize("u, v", valid_uv(120))
def test_numeric_sum_matches_matrix_oracle(u, v):
    rep = dihedral_representation(u, v)
    assert abs(eta_space_form(rep).numeric - matrix_eta(rep.elements)) < 1e-9
    assert abs(matrix_eta(rep.elements) - float(eta_dihedral_closed(u, v))) < 1e-9


@pytest.mark.parametrize("u, v", valid_uv(200))
def test_anti_diagonal_half_sums_to_half_order(u, v):
    rep = dihedral_representation(u, v)
    anti = [g for g in rep.elements if g.antidiagonal]
    assert len(anti) == rep.order // 2
    assert sum(eta_element(g).exact for g in anti) == rep.order // 2


# ---------------------------------------------------------------- case formula and geometry


@pytest.mark.parametrize("m, b, expected", [(1, 2, F(3, 4)), (5, 2, F(3, 20)), (7, 4, F(-5, 56))])
def test_eta_case_formula_examples(m, b, expected):
    assert eta_case_formula(m, b) == expected


def test_eta_case_formula_domain():
    with pytest.raises(ValueError):
        eta_case_formula(5, 3)  # 5 does not divide 6
    with pytest.raises(CoprimalityError):
        eta_case_formula(3, 3)
    with pytest.raises(CoprimalityError):
        eta_case_formula(2, 1)


@given(st.integers(0, 200), st.integers(1, 40))
def test_case_formula_equals_closed_form(half_m, j):
    m = 2 * half_m + 1
    b = m * j - 3
    assume(b >= 1 and math.gcd(m, 4 * b) == 1)
    assert eta_case_formula(m, b) == eta_dihedral_closed(m, b)


def test_case_term_branches_match_dedekind_sum_off_multiples_of_three():
    for m in range(1, 600):
        if m % 3 and math.gcd(m, 3) == 1:
            assert eta_case_term(m) == 4 * s_sum(3, m)
        if m % 3 == 0:
            # 3 | m is outside the coprime domain; the printed and derived branches disagree
            assert eta_case_term(m) != eta_case_term_derived(m)


@pytest.mark.parametrize("b, d, expected", [(2, 1, F(3, 4)), (2, 5, F(-13, 20)), (1, 2, F(-1, 4))])
def test_eta_geometric_examples(b, d, expected):
    assert eta_geometric(b, d) == expected


def test_eta_geometric_requires_divisibility():
    with pytest.raises(ValueError):
        eta_geometric(2, 3)


def test_trivial_quotient_geometry_matches_closed_form():
    for b in range(1, 401):
        assert eta_geometric(b, 1) == eta_dihedral_closed(1, b)


# ---------------------------------------------------------------- contradiction scan


@pytest.mark.parametrize("bound", [1, 1000])
def test_contradiction_scan(bound):
    scan = dihedral_contradiction_scan(bound, bound)
    assert scan.family1 == (1,)
    assert scan.family1_derived == (1,)
    assert scan.family2 == ()
    assert scan.family2_short == ()


def test_contradiction_scan_rejects_bad_bounds():
    with pytest.raises(ValueError):
        dihedral_contradiction_scan(0, 5)


def test_scan_json_shape():
    assert dihedral_contradiction_scan(5, 5).to_json() == {
        "max_m": 5, "max_b": 5, "family1": [1], "family1_derived": [1], "family2": [], "family2_short": [],
    }
