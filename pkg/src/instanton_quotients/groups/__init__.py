"""Spherical space form groups as explicit finite groups."""

from .catalog import divisors, group_profile, identify, space_form_groups_of_order
from .construct import acts_freely, construct_group, unitary_realization
from .finite import FiniteGroup, GroupProfile, Subgroup, abelian_invariants
from .search import (
    automorphism_count,
    contains_subgroup_isomorphic_to,
    find_witness,
    is_isomorphic_to,
    outer_automorphism_order,
    parse_relations,
    presentation_of,
)
from .spec import GroupSpec, parse_group_spec
from .subgroups import cyclic_subgroups, extension_candidates, normal_subgroups, subgroups, sylow_2_subgroup

__all__ = [
    "FiniteGroup",
    "GroupProfile",
    "GroupSpec",
    "Subgroup",
    "abelian_invariants",
    "acts_freely",
    "automorphism_count",
    "construct_group",
    "contains_subgroup_isomorphic_to",
    "cyclic_subgroups",
    "divisors",
    "extension_candidates",
    "find_witness",
    "group_profile",
    "identify",
    "is_isomorphic_to",
    "normal_subgroups",
    "outer_automorphism_order",
    "parse_group_spec",
    "parse_relations",
    "presentation_of",
    "space_form_groups_of_order",
    "subgroups",
    "sylow_2_subgroup",
    "unitary_realization",
]
