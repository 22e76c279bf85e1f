"""Eta invariants of spherical space forms ``S^3 / G`` with ``G`` in U(2).

For a finite group acting freely, the eta invariant is the average of the
fixed-point contributions of its non-identity elements,

    eta(S^3/G) = (1/|G|) sum_{g != 1} -cot(pi t1(g)) cot(pi t2(g)),

where ``e(t1), e(t2)`` are the eigenvalues of ``g`` and ``e(x) = exp(2 pi i x)``.
For ``Z_u x D*_{4v}`` the sum collapses to a Dedekind sum, which gives an
exact value to check the floating-point sum against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .dedekind import CoprimalityError, s_sum
from .exact import MonomialUnitary

__all__ = [
    "FixedPointError",
    "EtaValue",
    "SpaceFormRep",
    "eta_element",
    "eta_space_form",
    "dihedral_representation",
    "eta_dihedral_closed",
    "eta_case_term",
    "eta_case_formula",
    "eta_geometric",
    "DihedralScan",
    "dihedral_contradiction_scan",
]

TOLERANCE = 1e-9


class FixedPointError(ValueError):
    """An element has eigenvalue 1, so it does not act freely on the sphere."""


@dataclass(frozen=True)
class EtaValue:
    """An eta contribution or invariant; ``exact`` is None when only a float is known."""

    numeric: float
    exact: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.exact is not None and abs(float(self.exact) - self.numeric) >= TOLERANCE:
            raise ValueError(f"exact {self.exact} and numeric {self.numeric} disagree")

    @classmethod
    def of(cls, value: Fraction | int) -> EtaValue:
        value = Fraction(value)
        return cls(float(value), value)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def __add__(self, other: EtaValue) -> EtaValue:
        exact = None
        if self.exact is not None and other.exact is not None:
            exact = self.exact + other.exact
        return EtaValue(self.numeric + other.numeric, exact)

    def scale(self, factor: Fraction) -> EtaValue:
        exact = None if self.exact is None else self.exact * factor
        return EtaValue(self.numeric * float(factor), exact)

    def to_json(self) -> Dict[str, object]:
        return {
            "exact": None if self.exact is None else _fmt(self.exact),
            "numeric": self.numeric,
        }


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# exact cot(pi t) for the turns where it is rational
_RATIONAL_COT = {Fraction(1, 2): Fraction(0), Fraction(1, 4): Fraction(1), Fraction(3, 4): Fraction(-1)}


def eta_element(m: MonomialUnitary) -> EtaValue:
    """Fixed-point contribution ``-cot(pi t1) cot(pi t2)`` of one element.

    >>> eta_element(MonomialUnitary.anti(0, Fraction(1, 2))).exact
    Fraction(1, 1)
    """
    t1, t2 = m.eigen_turns()
    if t1.is_zero or t2.is_zero:
        raise FixedPointError(f"{m} has eigenvalue 1")
    if m.antidiagonal:
        # eigen-turns differ by 1/2, and cot(x) cot(x + pi/2) = -1
        return EtaValue.of(1)
    c1, c2 = _RATIONAL_COT.get(t1.fraction), _RATIONAL_COT.get(t2.fraction)
    if c1 == 0 or c2 == 0:
        return EtaValue.of(0)
    numeric = -1.0 / (math.tan(math.pi * float(t1.fraction)) * math.tan(math.pi * float(t2.fraction)))
    if c1 is not None and c2 is not None:
        return EtaValue(numeric, -c1 * c2)
    return EtaValue(numeric)


@dataclass(frozen=True)
class SpaceFormRep:
    """A finite subgroup of U(2) made of monomial matrices, acting freely on S^3.

    ``dihedral`` records ``(u, v)`` when the group is the standard
    ``Z_u x D*_{4v}`` representation, enabling the exact cross-check.
    With ``generators`` given, closure is verified against them (linear
    cost) instead of over all pairs of elements.
    """

    elements: Tuple[MonomialUnitary, ...]
    order: int
    dihedral: Optional[Tuple[int, int]] = None
    generators: Tuple[MonomialUnitary, ...] = ()

    def __post_init__(self) -> None:
        if len(self.elements) != self.order:
            raise ValueError(f"{len(self.elements)} elements but declared order {self.order}")
        elems = set(self.elements)
        if len(elems) != self.order:
            raise ValueError("repeated elements")
        if MonomialUnitary.identity() not in elems:
            raise ValueError("identity missing")
        checks = self.generators or self.elements
        for x in self.elements:
            for y in checks:
                if x * y not in elems:
                    raise ValueError("elements are not closed under multiplication")
        if self.generators and len(_closure(self.generators)) != self.order:
            raise ValueError("generators do not generate the listed elements")
        for x in self.elements:
            if not x.is_identity and any(t.is_zero for t in x.eigen_turns()):
                raise FixedPointError(f"{x} fixes a vector")

    @classmethod
    def generated_by(
        cls, generators: Sequence[MonomialUnitary], dihedral: Optional[Tuple[int, int]] = None
    ) -> SpaceFormRep:
        elements = _closure(generators)
        return cls(tuple(elements), len(elements), dihedral, tuple(generators))


def _closure(generators: Sequence[MonomialUnitary]) -> List[MonomialUnitary]:
    seen: Set[MonomialUnitary] = {MonomialUnitary.identity()}
    out: List[MonomialUnitary] = [MonomialUnitary.identity()]
    i = 0
    while i < len(out):
        for g in generators:
            y = out[i] * g
            if y not in seen:
                seen.add(y)
                out.append(y)
        i += 1
    return out


def eta_space_form(rep: SpaceFormRep) -> EtaValue:
    """``(1/|G|) * sum`` of the contributions of the non-identity elements."""
    total = EtaValue.of(0)
    for g in rep.elements:
        if not g.is_identity:
            total = total + eta_element(g)
    value = total.scale(Fraction(1, rep.order))
    if rep.dihedral is not None and value.exact is None:
        closed = eta_dihedral_closed(*rep.dihedral)
        value = EtaValue(value.numeric, closed)
    return value


def _check_uv(u: int, v: int) -> None:
    if u < 1 or v < 1:
        raise ValueError("u and v must be positive")
    if math.gcd(u, 4 * v) != 1:
        raise CoprimalityError(f"gcd(u, 4v) must be 1, got u={u}, v={v}")


def dihedral_representation(u: int, v: int) -> SpaceFormRep:
    """The free ``Z_u x D*_{4v}`` action, of order ``4uv``, by monomial matrices."""
    _check_uv(u, v)
    if v % 2 == 0:
        a = MonomialUnitary.diagonal(Fraction(2 * v + u, 2 * u * v), Fraction(2 * v - u, 2 * u * v))
        b = MonomialUnitary.anti(0, Fraction(1, 2))
    else:
        a = MonomialUnitary.diagonal(Fraction(1, v), Fraction(-1, v))
        b = MonomialUnitary.anti(0, Fraction(1, 2 * u))
    rep = SpaceFormRep.generated_by([a, b], dihedral=(u, v))
    if rep.order != 4 * u * v:
        raise AssertionError(f"generated {rep.order} elements, expected {4 * u * v}")
    return rep


def eta_dihedral_closed(u: int, v: int) -> Fraction:
    """``1/(6uv) + v/(3u) - 4 s(v, u)``."""
    _check_uv(u, v)
    return Fraction(1, 6 * u * v) + Fraction(v, 3 * u) - 4 * s_sum(v, u)


def eta_case_term(m: int) -> Fraction:
    """The residue-class term added to ``1/(6mb) + b/(3m)``, with branches as printed."""
    if m < 1:
        raise ValueError("m must be positive")
    r = m % 3
    if r == 0:
        return Fraction((m - 10) * (m + 1), 9 * m)
    if r == 1:
        return Fraction((m - 10) * (m - 1), 9 * m)
    return Fraction((m - 5) * (m - 2), 9 * m)


def eta_case_term_derived(m: int) -> Fraction:
    """``4 s(3, m)`` written out; differs from :func:`eta_case_term` only when ``3 | m``."""
    if m % 3 == 0:
        return Fraction(m * m - 9 * m + 10, 9 * m)
    return eta_case_term(m)


def eta_case_formula(m: int, b: int) -> Fraction:
    """Eta of the boundary of a ``Z_m`` quotient with group ``Z_m x D*_{4b}``.

    Needs ``m`` odd, ``gcd(m, 4b) = 1`` and ``m | b + 3``.
    """
    if m < 1 or b < 1:
        raise ValueError("m and b must be positive")
    if m % 2 == 0 or math.gcd(m, 4 * b) != 1:
        raise CoprimalityError(f"need m odd and gcd(m, 4b) = 1, got m={m}, b={b}")
    if (b + 3) % m:
        raise ValueError(f"m must divide b + 3, got m={m}, b={b}")
    return Fraction(1, 6 * m * b) + Fraction(b, 3 * m) + eta_case_term(m)


def _eta_geometric_raw(b: int, d: int) -> Fraction:
    return Fraction(b, 3 * d) + Fraction(1, d) + Fraction(1, 6 * b * d) - 1


def eta_geometric(b: int, d: int) -> Fraction:
    """Eta forced by the signature and Gauss-Bonnet formulas on a degree-``d`` quotient of a D-type instanton.

    ``b/(3d) + 1/d + 1/(6bd) - 1``; ``d`` must divide ``b + 3``.
    """
    if b < 1 or d < 1:
        raise ValueError("b and d must be positive")
    if (b + 3) % d:
        raise ValueError(f"d must divide b + 3, got b={b}, d={d}")
    return _eta_geometric_raw(b, d)


@dataclass(frozen=True)
class DihedralScan:
    """Solutions found by :func:`dihedral_contradiction_scan`.

    ``family1`` uses the residue-class term as printed and
    ``family1_derived`` uses ``4 s(3, m)`` for every m. ``family2`` equates
    the closed form at ``u = 1, v = 2b`` with the geometric formula at
    ``d = 2``; ``family2_short`` drops the constant ``-1/2`` from the
    right-hand side.
    """

    max_m: int
    max_b: int
    family1: Tuple[int, ...]
    family1_derived: Tuple[int, ...]
    family2: Tuple[int, ...]
    family2_short: Tuple[int, ...]

    def to_json(self) -> Dict[str, object]:
        return {
            "max_m": self.max_m,
            "max_b": self.max_b,
            "family1": list(self.family1),
            "family1_derived": list(self.family1_derived),
            "family2": list(self.family2),
            "family2_short": list(self.family2_short),
        }


def _family1_numerators(m: int) -> Tuple[int, int, int]:
    # everything multiplied by 9m: 9(1 - m) on the left
    lhs = 9 - 9 * m
    r = m % 3
    if r == 0:
        printed, derived = (m - 10) * (m + 1), m * m - 9 * m + 10
    elif r == 1:
        printed = derived = (m - 10) * (m - 1)
    else:
        printed = derived = (m - 5) * (m - 2)
    return lhs, printed, derived


def dihedral_contradiction_scan(max_m: int, max_b: int, exact_check: int = 200) -> DihedralScan:
    """Positive solutions of the two equations ruling out dihedral quotients.

    Both sides are cleared of denominators so the scan is integer arithmetic;
    the first ``exact_check`` values of each family are recomputed with
    rationals to confirm the clearing.
    """
    if max_m < 1 or max_b < 1:
        raise ValueError("bounds must be at least 1")
    fam1, fam1d = [], []
    for m in range(1, max_m + 1):
        lhs, printed, derived = _family1_numerators(m)
        if lhs == printed:
            fam1.append(m)
        if lhs == derived:
            fam1d.append(m)
    fam2, fam2s = [], []
    for b in range(1, max_b + 1):
        # times 12b: closed form 1 + 8b^2, geometric 2b^2 - 6b + 1, short 1 + 2b^2
        lhs = 1 + 8 * b * b
        if lhs == 2 * b * b - 6 * b + 1:
            fam2.append(b)
        if lhs == 1 + 2 * b * b:
            fam2s.append(b)
    for m in range(1, min(max_m, exact_check) + 1):
        one = Fraction(1, m) - 1
        if (one == eta_case_term(m)) != (m in fam1) or (one == eta_case_term_derived(m)) != (m in fam1d):
            raise AssertionError(f"integer and rational scans disagree at m={m}")
    for b in range(1, min(max_b, exact_check) + 1):
        closed = Fraction(1, 12 * b) + Fraction(2 * b, 3)
        if (closed == _eta_geometric_raw(b, 2)) != (b in fam2):
            raise AssertionError(f"integer and rational scans disagree at b={b}")
        if (closed == Fraction(1, 12 * b) + Fraction(b, 6)) != (b in fam2s):
            raise AssertionError(f"integer and rational scans disagree at b={b}")
        if closed != eta_dihedral_closed(1, 2 * b):
            raise AssertionError("closed form at u = 1 is not 1/(12b) + 2b/3")
    return DihedralScan(max_m, max_b, tuple(fam1), tuple(fam1d), tuple(fam2), tuple(fam2s))
