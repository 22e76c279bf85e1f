"""Subgroup lattices, normal subgroups, Sylow 2-subgroups and extension checks."""

from __future__ import annotations

from typing import Dict, List

from .catalog import identify, space_form_groups_of_order
from .construct import construct_group
from .finite import FiniteGroup, Subgroup
from .search import find_witness
from .spec import GroupSpec

__all__ = [
    "cyclic_subgroups",
    "subgroups",
    "normal_subgroups",
    "sylow_2_subgroup",
    "extension_candidates",
]


def _tag(g: FiniteGroup, sub: Subgroup, tag: bool) -> Subgroup:
    if not tag:
        return sub
    return Subgroup(sub.elements, sub.generators, identify(g, sub.elements))


def cyclic_subgroups(g: FiniteGroup) -> List[Subgroup]:
    found: Dict[frozenset, Subgroup] = {}
    for x in range(g.order):
        elems = g.closure([x])
        if elems not in found:
            found[elems] = Subgroup(elems, (x,) if x != g.identity else ())
    return sorted(found.values(), key=Subgroup.sort_key)


def subgroups(g: FiniteGroup, tag: bool = False) -> List[Subgroup]:
    """All subgroups, sorted by order.

    Every subgroup is the join of the cyclic subgroups it contains, so
    repeatedly joining known subgroups with cyclic ones reaches all of them.
    """
    cyclic = cyclic_subgroups(g)
    found: Dict[frozenset, Subgroup] = {c.elements: c for c in cyclic}
    frontier = list(found.values())
    while frontier:
        nxt = []
        for h in frontier:
            for c in cyclic:
                if c.elements <= h.elements:
                    continue
                gens = h.generators + c.generators
                elems = g.closure(gens, start=h.elements)
                if elems not in found:
                    sub = Subgroup(elems, gens)
                    found[elems] = sub
                    nxt.append(sub)
        frontier = nxt
    return [_tag(g, s, tag) for s in sorted(found.values(), key=Subgroup.sort_key)]


def normal_subgroups(g: FiniteGroup, tag: bool = True) -> List[Subgroup]:
    """All normal subgroups, tagged with their catalog type when ``tag``.

    A normal subgroup is a union of conjugacy classes, hence the join of the
    normal closures of the classes it contains; joins of normal subgroups are
    products and stay normal.
    """
    closures: Dict[frozenset, Subgroup] = {}
    for cls in g.conjugacy_classes():
        gens = tuple(sorted(cls))
        elems = g.closure(gens)
        if elems not in closures:
            closures[elems] = Subgroup(elems, gens)
    minimal = list(closures.values())
    found = dict(closures)
    frontier = list(found.values())
    while frontier:
        nxt = []
        for h in frontier:
            for c in minimal:
                if c.elements <= h.elements:
                    continue
                gens = h.generators + c.generators
                elems = g.closure(gens, start=h.elements)
                if elems not in found:
                    sub = Subgroup(elems, gens)
                    found[elems] = sub
                    nxt.append(sub)
        frontier = nxt
    out = sorted(found.values(), key=Subgroup.sort_key)
    return [_tag(g, s, tag) for s in out]


def _two_part(n: int) -> int:
    return n & -n


def sylow_2_subgroup(g: FiniteGroup, tag: bool = True) -> Subgroup:
    """A Sylow 2-subgroup grown greedily from 2-elements.

    A 2-subgroup that is not yet Sylow has a 2-element in its normalizer
    outside it, so the greedy extension never gets stuck.
    """
    target = _two_part(g.order)
    orders = g.element_orders
    two_elements = [x for x in range(g.order) if _two_part(int(orders[x])) == int(orders[x]) and x != g.identity]
    elems = frozenset([g.identity])
    gens: tuple = ()
    while len(elems) < target:
        for x in two_elements:
            if x in elems:
                continue
            cand = g.closure(gens + (x,), start=elems)
            if _two_part(len(cand)) == len(cand):
                elems, gens = cand, gens + (x,)
                break
        else:  # pragma: no cover - excluded by the normalizer argument
            raise AssertionError("greedy Sylow extension stalled")
    return _tag(g, Subgroup(elems, gens), tag)


def extension_candidates(normal: GroupSpec, quotient_order: int) -> List[GroupSpec]:
    """Space form groups G of order ``|normal| * quotient_order`` with a normal subgroup isomorphic to ``normal``."""
    n = normal.order * quotient_order
    out = []
    for spec in space_form_groups_of_order(n):
        g = construct_group(spec)
        for sub in normal_subgroups(g, tag=False):
            if sub.order != normal.order:
                continue
            if find_witness(g, normal, pool=sub.elements) is not None:
                out.append(spec)
                break
    return out
