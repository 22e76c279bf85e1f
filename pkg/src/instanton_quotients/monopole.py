"""Cyclic rotation groups preserving a set of monopole points, and the quotients they give.

A Gibbons-Hawking space is built from finitely many points ``F`` in R^3.
Its free isometric quotients correspond to cyclic subgroups of SO(3) that
map ``F`` to itself and fix none of its points. Everything here is exact:
points have rational coordinates, and when ``F`` spans at least a plane
every rotation preserving it is a rational matrix, because it is pinned down
by where it sends two independent points of ``F``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .exact import RationalMatrix3, Vector3, as_fraction, format_rational, parse_rational
from .invariants import BubbleInvariants, catalog_lookup, quotient_invariants

__all__ = [
    "MonopoleConfig",
    "CyclicSymmetry",
    "QuotientDescriptor",
    "recenter",
    "potential",
    "symmetry_rotations",
    "free_cyclic_subgroups",
    "classify_quotients",
    "load_config",
    "quotients_to_json",
]

ZERO: Vector3 = (Fraction(0), Fraction(0), Fraction(0))


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _cross(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector3:
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _is_zero(v: Sequence[Fraction]) -> bool:
    return all(c == 0 for c in v)


def primitive_direction(v: Sequence[Fraction]) -> Tuple[int, int, int]:
    """The primitive integer vector along ``v`` whose first nonzero entry is positive."""
    if _is_zero(v):
        raise ValueError("zero vector has no direction")
    lcm = reduce(lambda a, b: a * b // math.gcd(a, b), (Fraction(c).denominator for c in v), 1)
    ints = [int(Fraction(c) * lcm) for c in v]
    g = reduce(math.gcd, (abs(x) for x in ints))
    ints = [x // g for x in ints]
    first = next(x for x in ints if x != 0)
    if first < 0:
        ints = [-x for x in ints]
    return (ints[0], ints[1], ints[2])


@dataclass(frozen=True)
class MonopoleConfig:
    """Distinct points of R^3 with rational coordinates."""

    points: Tuple[Vector3, ...]

    def __init__(self, points: Iterable[Sequence[object]]) -> None:
        pts = []
        for p in points:
            coords = tuple(parse_rational(c) if isinstance(c, str) else as_fraction(c) for c in p)  # type: ignore[arg-type]
            if len(coords) != 3:
                raise ValueError(f"monopole {p!r} is not a 3-vector")
            pts.append(coords)
        if len(set(pts)) != len(pts):
            raise ValueError("monopole points must be distinct")
        object.__setattr__(self, "points", tuple(pts))

    def __len__(self) -> int:
        return len(self.points)

    @property
    def center(self) -> Vector3:
        n = len(self.points)
        if n == 0:
            raise ValueError("empty configuration has no center")
        return tuple(sum((p[i] for p in self.points), Fraction(0)) / n for i in range(3))  # type: ignore[return-value]

    @property
    def is_centered(self) -> bool:
        return _is_zero(self.center)

    @property
    def point_set(self) -> FrozenSet[Vector3]:
        return frozenset(self.points)

    def to_json(self) -> List[List[str]]:
        return [[format_rational(c) for c in p] for p in self.points]


def recenter(f: MonopoleConfig) -> MonopoleConfig:
    """Translate so that the mean of the points is exactly the origin."""
    c = f.center
    return MonopoleConfig([tuple(p[i] - c[i] for i in range(3)) for p in f.points])


def potential(f: MonopoleConfig, x: Sequence[object]) -> float:
    """``V(x) = (1/2) sum_i 1/|x - p_i|``."""
    xv = tuple(as_fraction(c) if not isinstance(c, float) else c for c in x)  # type: ignore[arg-type]
    total = 0.0
    for p in f.points:
        d2 = sum((float(xv[i]) - float(p[i])) ** 2 for i in range(3))
        if tuple(xv) == p or d2 == 0.0:
            raise ValueError(f"the potential is singular at the monopole {p}")
        total += 1.0 / math.sqrt(d2)
    return total / 2


# ---------------------------------------------------------------------------
# Symmetries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CyclicSymmetry:
    """A cyclic group of rotations, or a continuous family of conjugate ones.

    ``order`` is None for the family of all rotations about one axis (every
    order occurs). ``family`` is ``"axial"``, ``"equatorial"`` or
    ``"all"`` for the infinite symmetry groups of collinear or one-point
    configurations; ``axis`` is then a representative.
    """

    order: Optional[int]
    axis: Tuple[int, int, int]
    generator: Optional[RationalMatrix3]
    free: bool
    family: Optional[str] = None
    elements: FrozenSet[RationalMatrix3] = field(default=frozenset(), compare=False, repr=False)

    @property
    def count(self) -> str:
        return "continuum" if self.family else "1"

    def sort_key(self) -> tuple:
        return (self.family is not None, self.order or 0, self.axis)

    def to_json(self) -> Dict[str, object]:
        return {
            "order": self.order,
            "axis": list(self.axis),
            "generator": None if self.generator is None else self.generator.to_strings(),
            "free": self.free,
            "family": self.family,
            "count": self.count,
        }


def _rank(points: Sequence[Vector3]) -> Tuple[int, List[Vector3]]:
    """Rank of the span of ``points`` and a basis chosen greedily among them."""
    basis: List[Vector3] = []
    for p in points:
        if _is_zero(p):
            continue
        if not basis:
            basis.append(p)
        elif len(basis) == 1:
            if not _is_zero(_cross(basis[0], p)):
                basis.append(p)
        elif _dot(_cross(basis[0], basis[1]), p) != 0:
            basis.append(p)
            break
    return len(basis), basis


def _rotation_group(points: Sequence[Vector3], p1: Vector3, p2: Vector3) -> List[RationalMatrix3]:
    """Every rotation mapping the set of ``points`` to itself (rank >= 2)."""
    pts = frozenset(points)
    src = RationalMatrix3.from_columns([p1, p2, _cross(p1, p2)])
    src_inv = src.inverse()
    n1, n2, g12 = _dot(p1, p1), _dot(p2, p2), _dot(p1, p2)
    group = []
    for q1 in points:
        if _dot(q1, q1) != n1:
            continue
        for q2 in points:
            if q2 == q1 or _dot(q2, q2) != n2 or _dot(q1, q2) != g12:
                continue
            r = RationalMatrix3.from_columns([q1, q2, _cross(q1, q2)]) @ src_inv
            if r.is_rotation() and all(r.apply(p) in pts for p in points):
                group.append(r)
    return group


def _order(r: RationalMatrix3) -> int:
    ident = RationalMatrix3.identity()
    k, power = 1, r
    while power != ident:
        power = power @ r
        k += 1
    return k


def _axis(r: RationalMatrix3) -> Vector3:
    """A nonzero vector fixed by the rotation ``r != I``."""
    m = r.rows
    a = [[m[i][j] - (1 if i == j else 0) for j in range(3)] for i in range(3)]
    # the fixed line is orthogonal to the row space of R - I (rank 2)
    for i in range(3):
        for j in range(i + 1, 3):
            v = _cross(a[i], a[j])
            if not _is_zero(v):
                return v
    raise ValueError("not a nontrivial rotation")


def _sin_direction(r: RationalMatrix3) -> Vector3:
    # (R - R^T) encodes 2 sin(theta) times the unit axis
    m = r.rows
    return (m[2][1] - m[1][2], m[0][2] - m[2][0], m[1][0] - m[0][1])


def _canonical_generator(powers: Sequence[RationalMatrix3], order: int, axis: Sequence[Fraction]) -> RationalMatrix3:
    """The rotation by ``2 pi / order`` about ``axis``, counterclockwise seen from its tip."""
    gens = [powers[j] for j in range(1, order) if math.gcd(j, order) == 1]
    best = max(gens, key=lambda g: (g.trace(), _dot(_sin_direction(g), axis)))
    return best


def _on_axis(p: Vector3, axis: Sequence[Fraction]) -> bool:
    return _is_zero(_cross(p, axis))


def _cyclic_subgroups(group: Sequence[RationalMatrix3], points: Sequence[Vector3]) -> List[CyclicSymmetry]:
    ident = RationalMatrix3.identity()
    seen: Dict[FrozenSet[RationalMatrix3], CyclicSymmetry] = {}
    for r in group:
        if r == ident:
            continue
        k = _order(r)
        powers = [ident]
        for _ in range(k - 1):
            powers.append(powers[-1] @ r)
        elems = frozenset(powers)
        if elems in seen:
            continue
        axis = primitive_direction(_axis(r))
        axis_f = tuple(Fraction(a) for a in axis)
        gen = _canonical_generator(powers, k, axis_f)
        free = not any(_on_axis(p, axis_f) for p in points)
        seen[elems] = CyclicSymmetry(k, axis, gen, free, None, elems)
    return sorted(seen.values(), key=CyclicSymmetry.sort_key)


def _half_turn(axis: Sequence[int]) -> RationalMatrix3:
    w = [Fraction(a) for a in axis]
    n = _dot(w, w)
    return RationalMatrix3([[2 * w[i] * w[j] / n - (1 if i == j else 0) for j in range(3)] for i in range(3)])


def _perpendicular(u: Tuple[int, int, int]) -> Tuple[int, int, int]:
    for i in range(3):
        if u[i] == 0:
            e = [0, 0, 0]
            e[i] = 1
            return (e[0], e[1], e[2])
    return primitive_direction((Fraction(u[1]), Fraction(-u[0]), Fraction(0)))


def symmetry_rotations(f: MonopoleConfig) -> List[CyclicSymmetry]:
    """Cyclic rotation subgroups preserving the (centered) configuration, freeness recorded but not imposed."""
    if not f.is_centered:
        raise ValueError("configuration must be centered; call recenter first")
    points = list(f.points)
    rank, basis = _rank(points)
    if rank >= 2:
        return _cyclic_subgroups(_rotation_group(points, basis[0], basis[1]), points)
    if rank == 0:
        # a single monopole at the origin: every rotation fixes it
        return [CyclicSymmetry(None, (0, 0, 1), None, False, "all")]
    u = primitive_direction(basis[0])
    out = [CyclicSymmetry(None, u, None, False, "axial")]
    pts = f.point_set
    if all(tuple(-c for c in p) in pts for p in points):
        w = _perpendicular(u)
        free = ZERO not in pts
        half = _half_turn(w)
        out.append(CyclicSymmetry(2, w, half, free, "equatorial", frozenset([RationalMatrix3.identity(), half])))
    return out


def free_cyclic_subgroups(f: MonopoleConfig) -> List[CyclicSymmetry]:
    """The subgroups (or families) acting without fixed points on the configuration."""
    return [s for s in symmetry_rotations(f) if s.free]


# ---------------------------------------------------------------------------
# Quotients
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuotientDescriptor:
    symmetry: Optional[CyclicSymmetry]
    invariants: BubbleInvariants
    kahler_axis: Optional[Tuple[int, int, int]]

    @property
    def order(self) -> int:
        return self.invariants.degree

    @property
    def corollary_c(self) -> bool:
        return self.invariants.b2 == 0 and not self.invariants.flat

    def to_json(self) -> Dict[str, object]:
        inv = self.invariants
        return {
            "order": self.order,
            "axis": None if self.kahler_axis is None else list(self.kahler_axis),
            "family": None if self.symmetry is None else self.symmetry.family,
            "count": "1" if self.symmetry is None else self.symmetry.count,
            "chi": format_rational(inv.euler),
            "b2": format_rational(inv.b2),
            "tau": format_rational(inv.signature),
            "pi1_inf_order": inv.pi1_inf_order,
            "energy_pi2": format_rational(inv.asd_energy),
            "flat": inv.flat,
            "corollary_c": self.corollary_c,
        }


def classify_quotients(f: MonopoleConfig) -> List[QuotientDescriptor]:
    """The cover itself followed by one quotient per free cyclic subgroup (or family).

    Members of a continuous family are conjugate and give isometric
    quotients, so a family contributes a single descriptor.
    """
    if len(f) == 0:
        raise ValueError("empty configuration")
    centered = recenter(f)
    n = len(centered)
    cover = catalog_lookup("A", n)
    out = [QuotientDescriptor(None, quotient_invariants(cover, 1), None)]
    for sym in free_cyclic_subgroups(centered):
        assert sym.order is not None
        if n % sym.order:
            raise AssertionError(f"free subgroup of order {sym.order} on {n} points")
        out.append(QuotientDescriptor(sym, quotient_invariants(cover, sym.order), sym.axis))
    return out


def load_config(path: str | Path) -> MonopoleConfig:
    """Read a JSON array of 3-element arrays of rational strings (integers are also accepted)."""
    data = json.loads(Path(path).read_text())
    if not isinstance(data, list) or not all(isinstance(p, list) for p in data):
        raise ValueError("monopole file must be a JSON array of 3-element arrays")
    points = []
    for p in data:
        coords = []
        for c in p:
            if isinstance(c, bool) or not isinstance(c, (str, int)):
                raise ValueError(f"coordinate {c!r} must be a rational string")
            coords.append(parse_rational(c) if isinstance(c, str) else Fraction(c))
        points.append(coords)
    return MonopoleConfig(points)


def quotients_to_json(quotients: Sequence[QuotientDescriptor]) -> List[Dict[str, object]]:
    return [q.to_json() for q in quotients]
