"""Brute-force searches for generators satisfying a presentation.

A presentation here is a set of relations between words in a few letters.
Lowercase letters are generators, uppercase letters their inverses, and
``(...)^n`` / ``x^n`` are powers (``n`` may be negative)::

    z^4 = 1, z^2 = w^2, wzW = Z

Finding elements that satisfy the relations of a finite presentation and
generate a subgroup whose order equals the order of the presented group
proves that subgroup isomorphic to it.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .finite import FiniteGroup
from .spec import GroupSpec

__all__ = [
    "Presentation",
    "parse_relations",
    "presentation_of",
    "find_witness",
    "contains_subgroup_isomorphic_to",
    "is_isomorphic_to",
    "outer_automorphism_order",
    "automorphism_count",
]

# A word is a tuple of (atom, exponent); an atom is a letter or a nested word.
Word = Tuple[Tuple[object, int], ...]


class RelationSyntaxError(ValueError):
    pass


def _parse_word(text: str) -> Word:
    compact = re.sub(r"\s+", "", text)
    tokens = re.findall(r"\^-?\d+|[A-Za-z]|\(|\)|1", compact)
    if "".join(tokens) != compact:
        raise RelationSyntaxError(f"unexpected characters in word {text!r}")
    pos = 0

    def parse_seq() -> List[Tuple[object, int]]:
        nonlocal pos
        items: List[Tuple[object, int]] = []
        while pos < len(tokens) and tokens[pos] != ")":
            tok = tokens[pos]
            pos += 1
            if tok == "(":
                atom: object = tuple(parse_seq())
                if pos >= len(tokens) or tokens[pos] != ")":
                    raise RelationSyntaxError(f"unbalanced parentheses in {text!r}")
                pos += 1
            elif tok == "1":
                atom = ()
            elif tok.startswith("^"):
                raise RelationSyntaxError(f"dangling exponent in {text!r}")
            else:
                atom = tok
            exp = 1
            if pos < len(tokens) and tokens[pos].startswith("^"):
                exp = int(tokens[pos][1:])
                pos += 1
            items.append((atom, exp))
        return items

    word = tuple(parse_seq())
    if pos != len(tokens):
        raise RelationSyntaxError(f"unbalanced parentheses in {text!r}")
    return word


def parse_relations(text: str | Sequence[str]) -> List[Tuple[Word, Word]]:
    """Parse ``"a^3 = b^5 = (ab)^2, ..."`` into pairs of words that must be equal."""
    chunks = [text] if isinstance(text, str) else list(text)
    rels: List[Tuple[Word, Word]] = []
    for chunk in chunks:
        for part in chunk.split(","):
            if not part.strip():
                continue
            sides = [_parse_word(s) for s in part.split("=")]
            if len(sides) == 1:
                sides.append(())
            rels.extend(zip(sides, sides[1:]))
    return rels


def _letters(word: Word) -> set:
    out = set()
    for atom, _ in word:
        if isinstance(atom, str):
            out.add(atom.lower())
        else:
            out |= _letters(atom)  # type: ignore[arg-type]
    return out


def evaluate(g: FiniteGroup, word: Word, assignment: Dict[str, int]) -> int:
    result = g.identity
    for atom, exp in word:
        if isinstance(atom, str):
            x = assignment[atom.lower()]
            if atom.isupper():
                x = g.inv(x)
        else:
            x = evaluate(g, atom, assignment)  # type: ignore[arg-type]
        result = g.mul(result, g.power(x, exp))
    return result


def satisfies(g: FiniteGroup, relations: Iterable[Tuple[Word, Word]], assignment: Dict[str, int]) -> bool:
    return all(evaluate(g, lhs, assignment) == evaluate(g, rhs, assignment) for lhs, rhs in relations)


@dataclass(frozen=True)
class Presentation:
    """Generators with required element orders, relations, and the group order."""

    letters: Tuple[str, ...]
    generator_orders: Tuple[int, ...]
    relations: Tuple[Tuple[Word, Word], ...]
    order: int


def _pres(letters: str, orders: Sequence[int], rels: str, order: int) -> Presentation:
    return Presentation(tuple(letters), tuple(orders), tuple(parse_relations(rels)), order)


@lru_cache(maxsize=None)
def presentation_of(spec: GroupSpec) -> Presentation:
    """Defining presentation of a non-product catalog group."""
    f = spec.family
    if f == "trivial":
        return Presentation((), (), (), 1)
    if f == "cyclic":
        return _pres("a", [spec.m], f"a^{spec.m} = 1", spec.m)
    if f == "binary_dihedral":
        b = spec.b
        return _pres("zw", [2 * b, 4], f"z^{2 * b} = 1, z^{b} = w^2, wzW = Z", 4 * b)
    if f == "binary_tetrahedral":
        return _pres("st", [6, 6], "s^3 = t^3 = (st)^2", 24)
    if f == "binary_octahedral":
        return _pres("st", [6, 8], "s^3 = t^4 = (st)^2", 48)
    if f == "binary_icosahedral":
        return _pres("st", [6, 10], "s^3 = t^5 = (st)^2", 120)
    if f == "dprime":
        n2 = 2 ** (spec.k + 2)
        return _pres("xy", [n2, spec.p], f"x^{n2} = 1, y^{spec.p} = 1, yx = xY", n2 * spec.p)
    if f == "tprime":
        n3 = 3**spec.v
        # q = x p x^-1; relations of the three-generator form rewritten in x, p
        return _pres(
            "xp",
            [n3, 4],
            f"x^{n3} = 1, p^4 = 1, p^2 = (xpX)^2, x(xpX)X = p(xpX), p(xpX)P = (xpX)^-1",
            8 * n3,
        )
    raise ValueError(f"{spec} has no single presentation; search its factors")


def _candidates(g: FiniteGroup, order: int, pool: Optional[frozenset]) -> List[int]:
    elems = g.elements_of_order(order)
    if pool is not None:
        elems = [x for x in elems if x in pool]
    return elems


def iter_witnesses(
    g: FiniteGroup,
    pres: Presentation,
    pool: Optional[frozenset] = None,
    must_generate: Optional[int] = None,
) -> Iterator[Tuple[int, ...]]:
    """All generator tuples (in lexicographic index order) satisfying ``pres``.

    Each tuple generates a subgroup of exactly ``pres.order`` elements, or of
    ``must_generate`` elements when that is given.
    """
    target = pres.order if must_generate is None else must_generate
    if not pres.letters:
        if target == 1:
            yield ()
        return
    pools = [_candidates(g, o, pool) for o in pres.generator_orders]
    for combo in itertools.product(*pools):
        assignment = dict(zip(pres.letters, combo))
        if not satisfies(g, pres.relations, assignment):
            continue
        if len(g.closure(combo)) == target:
            yield combo


def find_witness(g: FiniteGroup, spec: GroupSpec, pool: Optional[frozenset] = None) -> Optional[Tuple[int, ...]]:
    """Lexicographically least generators of a subgroup isomorphic to ``spec``.

    For ``Z_m x B`` the witness is ``(c, *witness_of_B)`` with ``c`` of order m
    commuting with the generators of B.
    """
    if spec.order > (g.order if pool is None else len(pool)):
        return None
    if spec.family != "product":
        return next(iter_witnesses(g, presentation_of(spec), pool), None)
    assert spec.base is not None
    cands = _candidates(g, spec.m, pool)
    for base in iter_witnesses(g, presentation_of(spec.base), pool):
        for c in cands:
            if all(g.commute(c, x) for x in base):
                return (c, *base)
    return None


def contains_subgroup_isomorphic_to(
    g: FiniteGroup, target: GroupSpec
) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    w = find_witness(g, target)
    return (w is not None, w)


def is_isomorphic_to(g: FiniteGroup, spec: GroupSpec) -> bool:
    return g.order == spec.order and find_witness(g, spec) is not None


def automorphism_count(g: FiniteGroup, generators: Sequence[int], relations: str | Sequence[str]) -> int:
    """Number of automorphisms of ``g``, counted as admissible generator images.

    ``generators`` must generate ``g`` and satisfy ``relations``; the letters
    of the relations are bound to the generators in alphabetical order.
    """
    rels = parse_relations(relations)
    letters = sorted(set().union(*(_letters(l) | _letters(r) for l, r in rels))) if rels else []
    if len(letters) != len(generators):
        raise ValueError(f"relations use letters {letters} but {len(generators)} generators were given")
    if len(g.closure(generators)) != g.order:
        raise ValueError("the given elements do not generate the group")
    assignment = dict(zip(letters, generators))
    if not satisfies(g, rels, assignment):
        raise ValueError("the given generators do not satisfy the relations")
    pres = Presentation(tuple(letters), tuple(g.element_order(x) for x in generators), tuple(rels), g.order)
    # each automorphism is determined by the images of the generators
    return sum(1 for _ in iter_witnesses(g, pres))


def outer_automorphism_order(g: FiniteGroup, generators: Sequence[int], relations: str | Sequence[str]) -> int:
    """``|Out(g)| = |Aut(g)| / |Inn(g)|`` with ``|Inn(g)| = |g| / |Z(g)|``."""
    aut = automorphism_count(g, generators, relations)
    inner = g.order // len(g.center())
    if aut % inner:
        raise AssertionError("automorphism count is not a multiple of the inner automorphisms")
    return aut // inner
