"""Rokhlin invariants of Seifert-fibered Z/2-homology spheres via Neumann's formula.

For Seifert invariants ``(0; (a_1, b_1), ..., (a_n, b_n))`` with exactly one
even ``a_i`` and every ``a_i - b_i`` odd,

    mu = ( sum_i c(a_i - b_i, a_i) + sign(e) ) / 8   (mod 2),   e = sum_i b_i / a_i,

where ``c`` is determined by the rules

    c(a, +-1) = 0 for odd a,          c(a +- 2b, b) = c(a, b),
    c(a, b + a) = c(a, b) + sign(b (b + a)),
    c(a, b) = -c(-a, b) = -c(a, -b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .exact import format_rational

__all__ = [
    "SeifertError",
    "c_function",
    "SeifertInvariants",
    "parse_seifert",
    "euler_number",
    "is_z2_homology_sphere",
    "RokhlinResult",
    "rokhlin_mu",
    "TetrahedralReport",
    "tetrahedral_contradiction",
    "TETRAHEDRAL_QUOTIENT",
]


class SeifertError(ValueError):
    """Seifert data outside the domain of the requested computation."""


def _sign(x: Fraction | int) -> int:
    return (x > 0) - (x < 0)


def c_function(a: int, b: int) -> int:
    """Evaluate ``c(a, b)`` for odd ``a`` and ``gcd(a, b) = 1``.

    After making ``b`` positive, each macro-step reduces ``a`` into
    ``(-b, b)`` with the ``2b``-periodicity, makes it positive with the sign
    rule, then strips as many copies of ``a`` from ``b`` as keep it
    positive; each strip adds 1. The pair behaves like the Euclidean
    algorithm, and ``b`` strictly decreases until it reaches 1.

    For even ``a`` the rules are contradictory (``c(0, b) = c(0, b) + 1``),
    so such input is rejected.

    >>> c_function(-1, 3), c_function(-5, -2)
    (-2, 1)
    """
    if a % 2 == 0:
        raise ValueError(f"c({a}, {b}): first argument must be odd")
    if b == 0 or math.gcd(a, b) != 1:
        raise ValueError(f"c({a}, {b}): arguments must be coprime with b != 0")
    sign = 1
    if b < 0:
        b, sign = -b, -sign
    total = 0
    while b != 1:
        a = (a + b) % (2 * b) - b  # now -b < a < b, a odd and nonzero
        if a < 0:
            a, sign, total = -a, -sign, -total
        k = (b - 1) // a
        total += k
        b -= k * a
    return sign * total


@dataclass(frozen=True)
class SeifertInvariants:
    """``(b; (a_1, b_1), ..., (a_n, b_n))`` with every ``a_i`` nonzero."""

    b: int
    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", tuple((int(a), int(bb)) for a, bb in self.pairs))
        if any(a == 0 for a, _ in self.pairs):
            raise SeifertError("a_i must be nonzero")

    def __str__(self) -> str:
        return f"{self.b}; " + ", ".join(f"{a}/{bb}" for a, bb in self.pairs)

    def to_json(self) -> Dict[str, object]:
        return {"b": self.b, "pairs": [list(p) for p in self.pairs]}


def parse_seifert(text: str) -> SeifertInvariants:
    """Parse ``"b; a1/b1, a2/b2, ..."``; each ``a/b`` is a pair, not a fraction.

    >>> parse_seifert("0; 3/4, 3/4, -2/3").pairs
    ((3, 4), (3, 4), (-2, 3))
    """
    head, sep, tail = text.partition(";")
    if not sep:
        raise SeifertError(f"expected 'b; a1/b1, ...', got {text!r}")
    try:
        b = int(head.strip())
        pairs = []
        for item in tail.split(","):
            if not item.strip():
                continue
            a_str, slash, b_str = item.partition("/")
            if not slash:
                raise SeifertError(f"pair {item.strip()!r} is not of the form a/b")
            pairs.append((int(a_str.strip()), int(b_str.strip())))
    except ValueError as exc:
        if isinstance(exc, SeifertError):
            raise
        raise SeifertError(f"malformed Seifert data {text!r}") from exc
    if not pairs:
        raise SeifertError("at least one pair (a_i, b_i) is required")
    return SeifertInvariants(b, tuple(pairs))


def euler_number(s: SeifertInvariants, general: bool = False) -> Fraction:
    """``sum b_i / a_i``, or ``sum b_i / a_i - b`` when ``general``."""
    e = sum((Fraction(bb, a) for a, bb in s.pairs), Fraction(0))
    return e - s.b if general else e


def is_z2_homology_sphere(s: SeifertInvariants) -> Tuple[bool, int]:
    """Oddness of ``a_1 ... a_n (sum b_i / a_i - b)``, returned with that integer."""
    prod = math.prod(a for a, _ in s.pairs)
    cert = prod * euler_number(s, general=True)
    if cert.denominator != 1:
        raise SeifertError(f"certificate {cert} is not an integer; the pairs are not coprime")
    value = int(cert)
    return value % 2 == 1, value


@dataclass(frozen=True)
class RokhlinResult:
    mu: Fraction
    mod2: Optional[int]
    c_arguments: Tuple[Tuple[int, int], ...]
    c_values: Tuple[int, ...]
    euler: Fraction
    sign_e: int
    certificate: int

    def to_json(self) -> Dict[str, object]:
        return {
            "mu": format_rational(self.mu),
            "mod2": self.mod2,
            "c_arguments": [list(x) for x in self.c_arguments],
            "c_values": list(self.c_values),
            "euler": format_rational(self.euler),
            "sign_e": self.sign_e,
            "certificate": self.certificate,
        }


def rokhlin_mu(s: SeifertInvariants) -> RokhlinResult:
    """The Rokhlin invariant from Neumann's formula, as an exact rational.

    ``mod2`` is filled in only when the value is an integer. A non-integral
    result means the data cannot describe the boundary of a spin manifold
    in the way assumed.
    """
    if s.b != 0:
        raise SeifertError("Neumann's formula is applied to data of the form (0; ...); normalize b to 0 first")
    evens = sum(1 for a, _ in s.pairs if a % 2 == 0)
    if evens != 1:
        raise SeifertError(f"exactly one a_i must be even, found {evens}")
    if any((a - bb) % 2 == 0 for a, bb in s.pairs):
        raise SeifertError("every a_i - b_i must be odd")
    is_sphere, cert = is_z2_homology_sphere(s)
    if not is_sphere:
        raise SeifertError(f"not a Z/2-homology sphere: certificate {cert} is even")
    args = tuple((a - bb, a) for a, bb in s.pairs)
    values = tuple(c_function(x, y) for x, y in args)
    e = euler_number(s)
    sign_e = _sign(e)
    mu = Fraction(sum(values) + sign_e, 8)
    mod2 = int(mu) % 2 if mu.denominator == 1 else None
    return RokhlinResult(mu, mod2, args, values, e, sign_e, cert)


# Seifert data of S^3 / (Z_7 x T*) used in the tetrahedral case
TETRAHEDRAL_QUOTIENT = SeifertInvariants(0, ((3, 4), (3, 4), (-2, 3)))


@dataclass(frozen=True)
class TetrahedralReport:
    cover_euler_characteristic: int
    degree: int
    euler_characteristic: Fraction
    signature: Fraction
    required_mu: Fraction
    mu: Fraction
    contradiction: bool

    def to_json(self) -> Dict[str, object]:
        return {
            "cover_euler_characteristic": self.cover_euler_characteristic,
            "degree": self.degree,
            "euler_characteristic": format_rational(self.euler_characteristic),
            "signature": format_rational(self.signature),
            "required_mu_mod_2": format_rational(self.required_mu),
            "mu": format_rational(self.mu),
            "contradiction": self.contradiction,
        }


def _mod2(x: Fraction) -> Fraction:
    return x - 2 * math.floor(x / 2)


def tetrahedral_contradiction(
    signature: Optional[Fraction | int] = None,
    mu: Optional[Fraction | int] = None,
    seifert: SeifertInvariants = TETRAHEDRAL_QUOTIENT,
) -> TetrahedralReport:
    """Compare the Rokhlin invariant of the boundary with ``signature / 8``.

    The cover has Euler characteristic 7 and the covering has degree 7, so
    the quotient has Euler characteristic 1 and signature ``1 - 1 = 0``.
    Spin boundaries need ``mu = signature / 8 (mod 2)``. Both the signature
    and mu can be overridden to exercise the comparison.
    """
    chi_cover, degree = 7, 7
    chi = Fraction(chi_cover, degree)
    tau = 1 - chi if signature is None else Fraction(signature)
    mu_value = rokhlin_mu(seifert).mu if mu is None else Fraction(mu)
    required = tau / 8
    return TetrahedralReport(
        chi_cover,
        degree,
        chi,
        tau,
        _mod2(required),
        mu_value,
        _mod2(mu_value - required) != 0,
    )
