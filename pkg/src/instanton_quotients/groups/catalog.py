"""The list of spherical space form groups and isomorphism-type identification."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, List, Optional

from .construct import construct_group
from .finite import FiniteGroup, GroupProfile
from .search import find_witness
from .spec import GroupSpec

__all__ = ["space_form_groups_of_order", "group_profile", "identify", "divisors"]


def divisors(n: int) -> List[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _bases_dividing(n: int) -> Iterable[GroupSpec]:
    """Non-cyclic base groups whose order divides ``n``."""
    for d in divisors(n):
        if d % 4 == 0 and d >= 8:
            yield GroupSpec.binary_dihedral(d // 4)
    for spec in (GroupSpec.binary_tetrahedral(), GroupSpec.binary_octahedral(), GroupSpec.binary_icosahedral()):
        if n % spec.order == 0:
            yield spec
    # T' starts at v = 2; v = 1 is T* again
    v = 2
    while 8 * 3**v <= n:
        if n % (8 * 3**v) == 0:
            yield GroupSpec.tprime(v)
        v += 1
    k = 1
    while 2 ** (k + 2) * 3 <= n:
        for p in range(3, n // 2 ** (k + 2) + 1, 2):
            if n % (2 ** (k + 2) * p) == 0:
                yield GroupSpec.dprime(k, p)
        k += 1


@lru_cache(maxsize=None)
def _space_forms(n: int) -> tuple:
    if n < 1:
        raise ValueError("order must be positive")
    out = [GroupSpec.trivial() if n == 1 else GroupSpec.cyclic(n)]
    for base in _bases_dividing(n):
        m = n // base.order
        if math.gcd(m, base.order) == 1:
            out.append(GroupSpec.product(m, base))
    return tuple(dict.fromkeys(out))


def space_form_groups_of_order(n: int) -> List[GroupSpec]:
    """Every group ``Z_m x B`` of order ``n`` from the space form list, ``gcd(m, |B|) = 1``.

    >>> [str(s) for s in space_form_groups_of_order(96)]
    ['Z96', 'Z3xD*32', 'D*96', "D'(k=3,p=3)"]
    """
    return list(_space_forms(n))


def group_profile(g: FiniteGroup) -> GroupProfile:
    return g.profile()


@lru_cache(maxsize=None)
def _catalog_profile(spec: GroupSpec) -> GroupProfile:
    return construct_group(spec).profile()


def identify(g: FiniteGroup, elements: Optional[Iterable[int]] = None) -> Optional[GroupSpec]:
    """Catalog type of ``g`` (or of its subgroup on ``elements``), or None.

    A candidate is proposed by matching profiles and accepted only once a
    generating set satisfying its defining relations is found.
    """
    if elements is not None:
        elems = frozenset(elements)
        if len(elems) != g.order:
            g = g.subgroup_group(elems)
    n = g.order
    if n == 1:
        return GroupSpec.trivial()
    if g.elements_of_order(n):
        return GroupSpec.cyclic(n)
    profile = g.profile()
    for spec in space_form_groups_of_order(n):
        if spec.family in ("trivial", "cyclic") or _catalog_profile(spec) != profile:
            continue
        if find_witness(g, spec) is not None:
            return spec
    return None
