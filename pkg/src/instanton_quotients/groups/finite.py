"""Finite groups given by an explicit multiplication table."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

__all__ = ["FiniteGroup", "GroupProfile", "Subgroup", "abelian_invariants"]


@dataclass(frozen=True)
class GroupProfile:
    order: int
    center_order: int
    involution_count: int
    element_order_histogram: Tuple[Tuple[int, int], ...]
    abelianization_invariants: Tuple[int, ...]

    @property
    def histogram(self) -> Dict[int, int]:
        return dict(self.element_order_histogram)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of a fixed ambient group, as a set of element indices."""

    elements: frozenset
    generators: Tuple[int, ...]
    spec: Optional[object] = field(default=None, compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.order, tuple(sorted(self.elements)))


class FiniteGroup:
    """A group on the indices ``0..n-1`` with ``table[a, b] = a*b``.

    ``labels[i]`` is the concrete object (quaternion, monomial matrix, pair)
    that index ``i`` stands for.  Instances are treated as immutable.
    """

    def __init__(
        self,
        table: np.ndarray,
        labels: Sequence[Hashable],
        generators: Sequence[int],
        identity: int = 0,
        name: str = "",
    ) -> None:
        table = np.asarray(table, dtype=np.int64)
        n = len(labels)
        if table.shape != (n, n):
            raise ValueError("table shape does not match the number of labels")
        self.table = table
        self.table.setflags(write=False)
        self.labels = list(labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self.identity = identity
        self.generators = tuple(generators)
        self.name = name
        self._rows = table.tolist()
        ident_col = table[:, identity]
        if not np.array_equal(ident_col, np.arange(n)):
            raise ValueError("identity element does not act as identity")
        inv = np.argmax(table == identity, axis=1)
        if not np.all(table[np.arange(n), inv] == identity):
            raise ValueError("some element has no inverse")
        self.inverse = inv
        self._orders: Optional[np.ndarray] = None

    # construction -------------------------------------------------------
    @classmethod
    def from_generators(
        cls,
        generators: Sequence[Hashable],
        identity: Hashable,
        multiply: Callable[[Hashable, Hashable], Hashable],
        name: str = "",
        limit: int = 100_000,
    ) -> FiniteGroup:
        """Breadth-first closure of ``generators`` under right multiplication.

        The full table is assembled column by column from the Cayley graph:
        if ``y = parent(y) * g`` then column ``y`` is the right-multiplication
        permutation of ``g`` applied to column ``parent(y)``.
        """
        labels: List[Hashable] = [identity]
        index: Dict[Hashable, int] = {identity: 0}
        parent: List[Tuple[int, int]] = [(-1, -1)]
        right: List[List[int]] = [[] for _ in generators]
        i = 0
        while i < len(labels):
            x = labels[i]
            for gi, g in enumerate(generators):
                y = multiply(x, g)
                j = index.get(y)
                if j is None:
                    j = len(labels)
                    if j >= limit:
                        raise ValueError(f"closure exceeded {limit} elements")
                    labels.append(y)
                    index[y] = j
                    parent.append((i, gi))
                right[gi].append(j)
            i += 1
        n = len(labels)
        perms = [np.array(r, dtype=np.int64) for r in right]
        table = np.empty((n, n), dtype=np.int64)
        table[:, 0] = np.arange(n)
        for y in range(1, n):
            p, gi = parent[y]
            table[:, y] = perms[gi][table[:, p]]
        gens = [index[g] for g in generators]
        return cls(table, labels, gens, 0, name)

    @classmethod
    def direct_product(cls, left: FiniteGroup, right: FiniteGroup, name: str = "") -> FiniteGroup:
        nl, nr = left.order, right.order
        a = np.arange(nl * nr)
        ia, ib = a // nr, a % nr
        table = left.table[ia[:, None], ia[None, :]] * nr + right.table[ib[:, None], ib[None, :]]
        labels = [(left.labels[x], right.labels[y]) for x in range(nl) for y in range(nr)]
        gens = [g * nr + right.identity for g in left.generators]
        gens += [left.identity * nr + g for g in right.generators]
        return cls(table, labels, gens, left.identity * nr + right.identity, name)

    # element arithmetic -------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def mul(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result, base = self.identity, a
        rows = self._rows
        while k:
            if k & 1:
                result = rows[result][base]
            base = rows[base][base]
            k >>= 1
        return result

    def conjugate(self, g: int, h: int) -> int:
        """``g h g^-1``."""
        return self._rows[self._rows[g][h]][self.inv(g)]

    def commute(self, a: int, b: int) -> bool:
        return self._rows[a][b] == self._rows[b][a]

    @property
    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            n = self.order
            orders = np.zeros(n, dtype=np.int64)
            ar = np.arange(n)
            powers = ar.copy()
            k = 1
            while not orders.all():
                hit = (powers == self.identity) & (orders == 0)
                orders[hit] = k
                powers = self.table[powers, ar]
                k += 1
            orders.setflags(write=False)
            self._orders = orders
        return self._orders

    def element_order(self, a: int) -> int:
        return int(self.element_orders[a])

    def elements_of_order(self, k: int) -> List[int]:
        return [int(i) for i in np.flatnonzero(self.element_orders == k)]

    # subsets ------------------------------------------------------------
    def closure(self, generators: Iterable[int], start: Iterable[int] = ()) -> frozenset:
        """Subgroup generated by ``generators`` together with the subgroup ``start``."""
        gens = list(dict.fromkeys(generators))
        seen = set(start) or {self.identity}
        frontier = list(seen)
        rows = self._rows
        while frontier:
            nxt = []
            for x in frontier:
                row = rows[x]
                for g in gens:
                    y = row[g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def center(self) -> frozenset:
        t = self.table
        mask = np.ones(self.order, dtype=bool)
        for g in self.generators:
            mask &= t[:, g] == t[g, :]
        return frozenset(int(i) for i in np.flatnonzero(mask))

    def conjugacy_class(self, h: int) -> frozenset:
        t = self.table
        return frozenset(int(x) for x in t[t[:, h], self.inverse])

    def conjugacy_classes(self) -> List[frozenset]:
        seen: set = set()
        classes = []
        for h in range(self.order):
            if h not in seen:
                c = self.conjugacy_class(h)
                seen |= c
                classes.append(c)
        return classes

    def is_normal(self, elements: frozenset) -> bool:
        for g in self.generators:
            if any(self.conjugate(g, h) not in elements for h in elements):
                return False
        return True

    def derived_subgroup(self) -> frozenset:
        t = self.table
        ab = t
        ba = t.T
        comm = t[ab, self.inverse[ba]]
        return self.closure(np.unique(comm).tolist())

    def subgroup_group(self, elements: Iterable[int], generators: Sequence[int] = (), name: str = "") -> FiniteGroup:
        """The subgroup on ``elements`` as a standalone group (identity first)."""
        elems = sorted(elements, key=lambda x: (x != self.identity, x))
        pos = np.full(self.order, -1, dtype=np.int64)
        pos[elems] = np.arange(len(elems))
        idx = np.array(elems, dtype=np.int64)
        sub = pos[self.table[np.ix_(idx, idx)]]
        if (sub < 0).any():
            raise ValueError("elements are not closed under multiplication")
        gens = [int(pos[g]) for g in generators] or list(range(1, len(elems)))
        return FiniteGroup(sub, [self.labels[e] for e in elems], gens, 0, name)

    # invariants ---------------------------------------------------------
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def profile(self) -> GroupProfile:
        orders = self.element_orders
        hist = Counter(int(o) for o in orders)
        return GroupProfile(
            order=self.order,
            center_order=len(self.center()),
            involution_count=hist.get(2, 0),
            element_order_histogram=tuple(sorted(hist.items())),
            abelianization_invariants=tuple(self.abelianization_invariants()),
        )

    def abelianization_invariants(self) -> List[int]:
        derived = self.derived_subgroup()
        # order of each coset x G' in G/G'
        rows = self._rows
        coset_of: Dict[int, int] = {}
        reps: List[int] = []
        for x in range(self.order):
            if x in coset_of:
                continue
            c = len(reps)
            reps.append(x)
            for h in derived:
                coset_of[rows[x][h]] = c
        quotient_orders = []
        for x in reps:
            k, y = 1, x
            while y not in derived:
                y = rows[y][x]
                k += 1
            quotient_orders.append(k)
        return abelian_invariants(quotient_orders)

    def check_associativity(self, samples: Optional[int] = None, seed: int = 0) -> bool:
        """Full check when ``samples`` is None, otherwise random triples."""
        t = self.table
        n = self.order
        if samples is None:
            for a in range(n):
                lhs = t[t[a, :], :]  # (a b) c  indexed [b, c]
                rhs = t[a, t]  # a (b c)
                if not np.array_equal(lhs, rhs):
                    return False
            return True
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, samples))
        return bool(np.array_equal(t[t[a, b], c], t[a, t[b, c]]))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or '?'}, order={self.order})"


def abelian_invariants(element_orders: Sequence[int]) -> List[int]:
    """Invariant factors ``d1 | d2 | ...`` of a finite abelian group.

    Works from the multiset of element orders alone: for each prime p the
    number of elements killed by ``p^j`` is ``p^(sum_i min(j, e_i))``, which
    pins down the exponents ``e_i`` of the p-part.
    """
    n = len(element_orders)
    primes = _prime_factors(n)
    exps_by_prime: Dict[int, List[int]] = {}
    for p in primes:
        counts = [0]
        j = 1
        while True:
            killed = sum(1 for o in element_orders if (p**j) % o == 0)
            c = _log(killed, p)
            counts.append(c)
            if c == counts[-2]:
                break
            j += 1
        # number of cyclic factors with exponent >= j
        ge = [counts[j] - counts[j - 1] for j in range(1, len(counts))]
        exps = []
        for j in range(len(ge)):
            nxt = ge[j + 1] if j + 1 < len(ge) else 0
            exps += [j + 1] * (ge[j] - nxt)
        exps_by_prime[p] = sorted(exps, reverse=True)
    width = max((len(e) for e in exps_by_prime.values()), default=0)
    factors = []
    for i in range(width):
        d = 1
        for p, exps in exps_by_prime.items():
            if i < len(exps):
                d *= p ** exps[i]
        factors.append(d)
    return sorted(factors)


def _log(n: int, p: int) -> int:
    e = 0
    while n % p == 0 and n > 1:
        n //= p
        e += 1
    if n != 1:
        raise ValueError("count is not a prime power; input is not an abelian group")
    return e


def _prime_factors(n: int) -> List[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
