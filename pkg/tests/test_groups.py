import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from instanton_quotients.groups import (
    FiniteGroup,
    GroupSpec,
    acts_freely,
    automorphism_count,
    construct_group,
    contains_subgroup_isomorphic_to,
    cyclic_subgroups,
    divisors,
    extension_candidates,
    find_witness,
    group_profile,
    identify,
    is_isomorphic_to,
    normal_subgroups,
    outer_automorphism_order,
    parse_group_spec,
    parse_relations,
    presentation_of,
    space_form_groups_of_order,
    subgroups,
    sylow_2_subgroup,
)
from instanton_quotients.groups.search import RelationSyntaxError

Z = GroupSpec.cyclic
D = GroupSpec.binary_dihedral
T_STAR = GroupSpec.binary_tetrahedral()
O_STAR = GroupSpec.binary_octahedral()
I_STAR = GroupSpec.binary_icosahedral()

CATALOG_360 = [s for n in range(1, 361) for s in space_form_groups_of_order(n)]


def names(specs):
    return sorted(str(s) for s in specs)


def two_part(n):
    return n & -n


# ---------------------------------------------------------------- specs


@pytest.mark.parametrize(
    "text", ["Z96", "D*96", "Z3xD*32", "D'(k=3,p=3)", "T'(v=2)", "T*", "O*", "I*", "Z7xT*", "1"]
)
def test_spec_string_round_trip(text):
    assert str(parse_group_spec(text)) == text
    assert parse_group_spec(text.lower()) == parse_group_spec(text)


def test_spec_parameter_validation():
    with pytest.raises(ValueError):
        D(0)
    with pytest.raises(ValueError):
        GroupSpec.dprime(0, 3)
    with pytest.raises(ValueError):
        GroupSpec.dprime(1, 4)
    with pytest.raises(ValueError):
        GroupSpec.tprime(0)
    with pytest.raises(ValueError):
        GroupSpec.product(3, I_STAR)
    with pytest.raises(ValueError):
        parse_group_spec("D*10")
    with pytest.raises(ValueError):
        parse_group_spec("Q8")


# ---------------------------------------------------------------- construction


@pytest.mark.parametrize(
    "spec, order",
    [(I_STAR, 120), (O_STAR, 48), (T_STAR, 24), (GroupSpec.dprime(1, 3), 24), (Z(1), 1), (D(3), 12),
     (GroupSpec.tprime(2), 72), (GroupSpec.product(7, T_STAR), 168)],
)
def test_construct_group_orders(spec, order):
    g = construct_group(spec)
    assert g.order == order == spec.order
    assert g.check_associativity()


def test_cyclic_one_is_trivial():
    g = construct_group(Z(1))
    assert g.order == 1 and g.is_abelian()


def test_tprime_one_is_binary_tetrahedral():
    assert is_isomorphic_to(construct_group(GroupSpec.tprime(1)), T_STAR)


def test_from_generators_rejects_runaway_closure():
    with pytest.raises(ValueError):
        FiniteGroup.from_generators([1], 0, lambda a, b: a + b, limit=50)


# ---------------------------------------------------------------- profiles


def test_quaternion_group_profile():
    p = group_profile(construct_group(D(2)))
    assert (p.center_order, p.involution_count) == (2, 1)
    assert sum(p.histogram.values()) == 8


@pytest.mark.parametrize("b", range(2, 13))
def test_binary_dihedral_abelianization_parity(b):
    inv = list(group_profile(construct_group(D(b))).abelianization_invariants)
    assert inv == ([2, 2] if b % 2 == 0 else [4])


def test_odd_cyclic_profile():
    p = group_profile(construct_group(Z(5)))
    assert (p.center_order, p.involution_count) == (5, 0)


@given(st.integers(1, 200))
def test_cyclic_profile_matches_divisor_counts(n):
    p = group_profile(construct_group(Z(n)))
    for d in divisors(n):
        # an element of order d exists exactly phi(d) times
        assert p.histogram[d] == sum(1 for k in range(1, d + 1) if math.gcd(k, d) == 1)
    assert p.abelianization_invariants == (n,) or n == 1


# ---------------------------------------------------------------- containment and identification


def test_dprime_contains_no_quaternion_group():
    assert contains_subgroup_isomorphic_to(construct_group(GroupSpec.dprime(1, 3)), D(2)) == (False, None)


def test_tprime_contains_no_dicyclic_twelve():
    found, _ = contains_subgroup_isomorphic_to(construct_group(GroupSpec.tprime(2)), D(3))
    assert not found


def test_binary_octahedral_contains_binary_tetrahedral():
    g = construct_group(O_STAR)
    found, witness = contains_subgroup_isomorphic_to(g, T_STAR)
    assert found
    assert len(g.closure(witness)) == 24


def test_relation_parser():
    rels = parse_relations("s^3 = t^3 = (st)^2, wzW = Z")
    assert len(rels) == 3
    assert len(parse_relations("a^-2")) == 1
    for bad in ["a^", "a = (b", "a +b", "2a"]:
        with pytest.raises(RelationSyntaxError):
            parse_relations(bad)


@pytest.mark.parametrize("spec", [Z(12), D(6), T_STAR, O_STAR, I_STAR, GroupSpec.dprime(1, 5), GroupSpec.tprime(2),
                                  GroupSpec.product(5, D(3)), GroupSpec.product(7, T_STAR)])
def test_identify_recovers_spec(spec):
    assert identify(construct_group(spec)) == spec


@pytest.mark.slow
def test_witnesses_satisfy_presentations_across_catalog():
    for spec in CATALOG_360:
        g = construct_group(spec)
        witness = find_witness(g, spec)
        assert witness is not None, spec
        assert len(g.closure(witness)) == g.order
        if spec.family != "product":
            pres = presentation_of(spec)
            assert pres.order == spec.order


# ---------------------------------------------------------------- subgroups


def test_binary_icosahedral_normal_subgroups():
    ns = normal_subgroups(construct_group(I_STAR))
    assert [n.order for n in ns] == [1, 2, 120]
    assert [str(n.spec) for n in ns] == ["1", "Z2", "I*"]


def test_dicyclic_96_index_two_subgroups():
    g = construct_group(D(24))
    index_two = [n for n in normal_subgroups(g) if n.order == 48]
    # <z> is cyclic; the two non-cyclic ones are binary dihedral
    assert names(n.spec for n in index_two) == ["D*48", "D*48", "Z48"]
    assert all(str(n.spec) == "D*48" for n in index_two if n.spec.family != "cyclic")


def test_cyclic_six_subgroups_all_normal():
    g = construct_group(Z(6))
    subs = subgroups(g)
    assert [s.order for s in subs] == [1, 2, 3, 6]
    assert [s.order for s in normal_subgroups(g)] == [1, 2, 3, 6]


def test_subgroup_counts():
    assert len(subgroups(construct_group(I_STAR))) == 76
    assert len(subgroups(construct_group(D(2)))) == 6
    # trivial, Z2, three Z4, four Z3, four Z6
    assert len(cyclic_subgroups(construct_group(T_STAR))) == 13


@pytest.mark.parametrize(
    "spec, order, tag",
    [(T_STAR, 8, "D*8"), (Z(12), 4, "Z4"), (O_STAR, 16, "D*16"), (I_STAR, 8, "D*8"), (D(6), 8, "D*8")],
)
def test_sylow_two(spec, order, tag):
    s = sylow_2_subgroup(construct_group(spec))
    assert s.order == order == two_part(spec.order)
    assert str(s.spec) == tag


@pytest.mark.slow
def test_normal_subgroups_match_lattice_filter():
    for spec in [s for s in CATALOG_360 if s.order <= 96]:
        g = construct_group(spec)
        lattice = [s.elements for s in subgroups(g) if g.is_normal(s.elements)]
        assert sorted(lattice, key=lambda e: (len(e), sorted(e))) == [n.elements for n in normal_subgroups(g, tag=False)], spec


@pytest.mark.slow
def test_sylow_two_order_across_catalog():
    for spec in CATALOG_360:
        s = sylow_2_subgroup(construct_group(spec))
        assert s.order == two_part(spec.order)
        # cyclic or binary dihedral
        assert s.spec is not None and s.spec.family in ("trivial", "cyclic", "binary_dihedral"), spec


# ---------------------------------------------------------------- catalog


def test_order_96_candidates():
    assert names(space_form_groups_of_order(96)) == names(["Z96", "D*96", "Z3xD*32", "D'(k=3,p=3)"])


def test_order_168_has_product_with_binary_tetrahedral():
    assert "Z7xT*" in names(space_form_groups_of_order(168))


def test_order_360_excludes_non_coprime_product():
    got = names(space_form_groups_of_order(360))
    assert "Z3xI*" not in got and "I*xZ3" not in got


@given(st.integers(1, 2000))
@settings(max_examples=60)
def test_catalog_entries_have_requested_order(n):
    specs = space_form_groups_of_order(n)
    assert all(s.order == n for s in specs)
    assert len(set(specs)) == len(specs)
    assert specs[0] == (Z(n) if n > 1 else GroupSpec.trivial())


def test_extension_candidates():
    assert extension_candidates(I_STAR, 3) == []
    assert extension_candidates(O_STAR, 2) == []
    assert [str(s) for s in extension_candidates(T_STAR, 7)] == ["Z7xT*"]


# ---------------------------------------------------------------- automorphisms


def test_outer_automorphism_orders():
    g = construct_group(I_STAR)
    s, t = find_witness(g, I_STAR)
    assert outer_automorphism_order(g, (s, t), "s^3 = t^5 = (st)^2") == 2
    g = construct_group(T_STAR)
    s, t = find_witness(g, T_STAR)
    assert outer_automorphism_order(g, (s, t), "s^3 = t^3 = (st)^2") == 2
    g = construct_group(Z(5))
    (a,) = find_witness(g, Z(5))
    assert outer_automorphism_order(g, (a,), "a^5 = 1") == 4


def test_automorphism_count_rejects_non_generators():
    g = construct_group(Z(6))
    two = g.elements_of_order(2)[0]
    with pytest.raises(ValueError):
        automorphism_count(g, (two,), "a^6 = 1")


@pytest.mark.parametrize("n", [7, 8, 9, 12, 15])
def test_cyclic_automorphisms_are_units(n):
    g = construct_group(Z(n))
    (a,) = find_witness(g, Z(n))
    totient = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
    assert automorphism_count(g, (a,), f"a^{n} = 1") == totient


# ---------------------------------------------------------------- catalog-wide properties


@pytest.mark.slow
def test_at_most_one_involution():
    for spec in CATALOG_360:
        p = group_profile(construct_group(spec))
        odd_cyclic = spec.family == "trivial" or (spec.family == "cyclic" and spec.m % 2 == 1)
        assert p.involution_count == (0 if odd_cyclic else 1), spec


@pytest.mark.slow
def test_catalog_acts_freely():
    assert all(acts_freely(spec) for spec in CATALOG_360)


def test_fixed_vector_detection():
    from fractions import Fraction

    from instanton_quotients.exact import MonomialUnitary, Quaternion, Turn
    from instanton_quotients.groups.construct import has_fixed_vector

    assert has_fixed_vector(MonomialUnitary.diagonal(0, Fraction(1, 2)))
    assert has_fixed_vector(MonomialUnitary.anti(0, 0))
    assert not has_fixed_vector(MonomialUnitary.diagonal(Fraction(1, 3), Fraction(2, 3)))
    # e(1/4) * i has eigenvalues e(1/4 +- 1/4), one of which is 1
    assert has_fixed_vector((Turn(Fraction(1, 4)), Quaternion(0, 1)))
    assert not has_fixed_vector((Turn(0), Quaternion(0, 1)))
    assert acts_freely(D(5))
    assert acts_freely(GroupSpec.product(3, D(4)))


def _binary_polyhedral_dividing(n):
    out = [D(b) for b in range(2, n // 4 + 1) if n % (4 * b) == 0]
    return out + [s for s in (T_STAR, O_STAR, I_STAR) if n % s.order == 0]


@pytest.mark.slow
def test_splitting_property():
    for spec in CATALOG_360:
        if spec.family != "product":
            continue
        whole, base = construct_group(spec), construct_group(spec.base)
        for target in _binary_polyhedral_dividing(spec.base.order):
            assert contains_subgroup_isomorphic_to(whole, target)[0] == contains_subgroup_isomorphic_to(base, target)[0]


@pytest.mark.slow
def test_dprime_order_four_elements_are_central_even_powers():
    for k in range(1, 6):
        for p in range(3, 200, 2):
            spec = GroupSpec.dprime(k, p)
            if spec.order > 200:
                break
            g = construct_group(spec)
            center = g.center()
            fours = g.elements_of_order(4)
            assert fours
            for e in fours:
                c, d = g.labels[e]
                assert d == 0 and c % 2 == 0
                assert e in center


@pytest.mark.slow
def test_associativity():
    for spec in CATALOG_360:
        g = construct_group(spec)
        if spec.order <= 120:
            assert g.check_associativity(), spec
        else:
            assert g.check_associativity(samples=10**6), spec


def test_dprime_has_no_binary_dihedral_subgroups_small():
    for spec in [GroupSpec.dprime(1, 3), GroupSpec.dprime(2, 3), GroupSpec.dprime(1, 5)]:
        g = construct_group(spec)
        for b in range(2, spec.order // 4 + 1):
            if spec.order % (4 * b) == 0:
                assert not contains_subgroup_isomorphic_to(g, D(b))[0]
