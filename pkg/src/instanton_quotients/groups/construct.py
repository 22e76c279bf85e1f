"""Concrete models of the space form groups.

* cyclic groups as turns,
* ``D*_{4b}`` as monomial unitaries ``z = diag(e(1/2b), e(-1/2b))``,
  ``w = [[0, 1], [-1, 0]]``,
* ``T*``, ``O*``, ``I*`` as unit quaternions (over Q, Q(sqrt 2), Q(sqrt 5)),
* ``D'`` as pairs ``(c, d)`` standing for ``x^c y^d``,
* ``T'`` as pairs ``(c, u)`` standing for ``x^c u`` with ``u`` in Q8,
* products with a coprime cyclic group as direct products.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Hashable, List, Tuple, Union

from ..exact import MonomialUnitary, QuadraticScalar, Quaternion, Turn
from .finite import FiniteGroup
from .spec import GroupSpec

__all__ = [
    "construct_group",
    "binary_tetrahedral_elements",
    "Q8_AUTOMORPHISM",
    "unitary_realization",
    "acts_freely",
    "ScaledQuaternion",
]

H = Fraction(1, 2)


def _quat_mul(x: Quaternion, y: Quaternion) -> Quaternion:
    return x * y


def _turn_add(x: Turn, y: Turn) -> Turn:
    return x + y


def _monomial_mul(x: MonomialUnitary, y: MonomialUnitary) -> MonomialUnitary:
    return x * y


def binary_tetrahedral_elements() -> List[Quaternion]:
    """The 24 Hurwitz units: +-1, +-i, +-j, +-k and (+-1 +-i +-j +-k)/2."""
    out = []
    for pos in range(4):
        for s in (1, -1):
            c = [0, 0, 0, 0]
            c[pos] = s
            out.append(Quaternion(*c))
    for signs in range(16):
        c = [H if not (signs >> b) & 1 else -H for b in range(4)]
        out.append(Quaternion(*c))
    return out


# x p x^-1 = q and x q x^-1 = pq with p = i, q = j: the cyclic shift i -> j -> k.
_I, _J, _K = Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)
Q8 = [Quaternion(1), -Quaternion(1), _I, -_I, _J, -_J, _K, -_K]
# the Hurwitz unit inducing the shift by conjugation
SHIFT = Quaternion(H, H, H, H)


@lru_cache(maxsize=None)
def _sigma(u: Quaternion) -> Quaternion:
    return SHIFT * u * SHIFT.inverse()


def _sigma_power(u: Quaternion, e: int) -> Quaternion:
    for _ in range(e % 3):
        u = _sigma(u)
    return u


def _validate_sigma() -> None:
    if _sigma(_I) != _J or _sigma(_J) != _I * _J:
        raise AssertionError("conjugation by (1+i+j+k)/2 does not send p->q, q->pq")
    if any(_sigma_power(u, 3) != u for u in Q8) or all(_sigma(u) == u for u in Q8):
        raise AssertionError("Q8 automorphism does not have order 3")


_validate_sigma()
Q8_AUTOMORPHISM = _sigma


def _cyclic(m: int, name: str) -> FiniteGroup:
    gens = [Turn(Fraction(1, m))] if m > 1 else []
    return FiniteGroup.from_generators(gens, Turn(0), _turn_add, name)


def _binary_dihedral(b: int, name: str) -> FiniteGroup:
    z = MonomialUnitary.diagonal(Fraction(1, 2 * b), Fraction(-1, 2 * b))
    w = MonomialUnitary.anti(0, H)
    return FiniteGroup.from_generators([z, w], MonomialUnitary.identity(), _monomial_mul, name)


def _polyhedral(family: str, name: str) -> FiniteGroup:
    t = Quaternion(H, H, H, H)  # order 6
    if family == "binary_tetrahedral":
        gens = [_I, t]
    elif family == "binary_octahedral":
        r2 = QuadraticScalar(0, H, 2)  # 1/sqrt(2)
        gens = [Quaternion(r2, r2), t]  # (1+i)/sqrt(2), order 8
    else:
        # (phi + phi^-1 i + j)/2, order 10, with phi the golden ratio
        half_phi = QuadraticScalar(Fraction(1, 4), Fraction(1, 4), 5)
        half_phi_inv = QuadraticScalar(Fraction(-1, 4), Fraction(1, 4), 5)
        gens = [Quaternion(half_phi, half_phi_inv, H), t]
    return FiniteGroup.from_generators(gens, Quaternion(1), _quat_mul, name, limit=200)


def _dprime(k: int, p: int, name: str) -> FiniteGroup:
    n2 = 2 ** (k + 2)

    def mul(x: Tuple[int, int], y: Tuple[int, int]) -> Tuple[int, int]:
        (c, d), (c2, d2) = x, y
        return ((c + c2) % n2, (d * (-1) ** c2 + d2) % p)

    return FiniteGroup.from_generators([(1, 0), (0, 1)], (0, 0), mul, name)


def _tprime(v: int, name: str) -> FiniteGroup:
    n3 = 3**v

    def mul(x: Tuple[int, Quaternion], y: Tuple[int, Quaternion]) -> Tuple[int, Quaternion]:
        # x^c u x^c2 u2 = x^(c+c2) sigma^(-c2)(u) u2
        (c, u), (c2, u2) = x, y
        return ((c + c2) % n3, _sigma_power(u, -c2) * u2)

    one = Quaternion(1)
    return FiniteGroup.from_generators([(1, one), (0, _I)], (0, one), mul, name)


@lru_cache(maxsize=None)
def construct_group(spec: GroupSpec) -> FiniteGroup:
    """Build the multiplication table of ``spec``; the order is verified."""
    name = str(spec)
    f = spec.family
    if f == "trivial":
        g = _cyclic(1, name)
    elif f == "cyclic":
        g = _cyclic(spec.m, name)
    elif f == "binary_dihedral":
        g = _binary_dihedral(spec.b, name)
    elif f in ("binary_tetrahedral", "binary_octahedral", "binary_icosahedral"):
        g = _polyhedral(f, name)
    elif f == "dprime":
        g = _dprime(spec.k, spec.p, name)
    elif f == "tprime":
        g = _tprime(spec.v, name)
    else:
        assert spec.base is not None
        g = FiniteGroup.direct_product(_cyclic(spec.m, f"Z{spec.m}"), construct_group(spec.base), name)
    if g.order != spec.order:
        raise AssertionError(f"{name}: built {g.order} elements, expected {spec.order}")
    return g


# ---------------------------------------------------------------------------
# Unitary realizations and freeness
# ---------------------------------------------------------------------------

ScaledQuaternion = Tuple[Turn, Quaternion]
Realized = Union[MonomialUnitary, ScaledQuaternion]

_R2 = QuadraticScalar(0, H, 2)
_R3 = QuadraticScalar(0, H, 3)
_R5 = Fraction(1, 4)


def _mirror(n: int, half: List[QuadraticScalar]) -> List[QuadraticScalar]:
    # half lists cos(2 pi k / n) for k = 0..n//2; cos is even in k
    return [half[min(k, n - k)] for k in range(n)]


def _qs(r: object, s: object = 0, d: int = 1) -> QuadraticScalar:
    return QuadraticScalar(r, s, d)


# cos(2 pi k / n) for every n where it has degree <= 2 over Q
_COS = {
    1: _mirror(1, [_qs(1)]),
    2: _mirror(2, [_qs(1), _qs(-1)]),
    3: _mirror(3, [_qs(1), _qs(-H)]),
    4: _mirror(4, [_qs(1), _qs(0), _qs(-1)]),
    5: _mirror(5, [_qs(1), _qs(-_R5, _R5, 5), _qs(-_R5, -_R5, 5)]),
    6: _mirror(6, [_qs(1), _qs(H), _qs(-H), _qs(-1)]),
    8: _mirror(8, [_qs(1), _R2, _qs(0), -_R2, _qs(-1)]),
    10: _mirror(10, [_qs(1), _qs(_R5, _R5, 5), _qs(-_R5, _R5, 5), _qs(_R5, -_R5, 5), _qs(-_R5, -_R5, 5), _qs(-1)]),
    12: _mirror(12, [_qs(1), _R3, _qs(H), _qs(0), _qs(-H), -_R3, _qs(-1)]),
}


def cos_turn(t: Turn) -> QuadraticScalar | None:
    """``cos(2 pi t)`` exactly when it lies in a quadratic field, else None."""
    n = t.fraction.denominator
    table = _COS.get(n)
    if table is None:
        return None
    return table[t.fraction.numerator % n]


def _realize_base(spec: GroupSpec, label: Hashable) -> Realized:
    f = spec.family
    if f in ("trivial", "cyclic"):
        assert isinstance(label, Turn)
        return MonomialUnitary(False, label, -label)
    if f == "binary_dihedral":
        assert isinstance(label, MonomialUnitary)
        return label
    if f in ("binary_tetrahedral", "binary_octahedral", "binary_icosahedral"):
        assert isinstance(label, Quaternion)
        return (Turn(0), label)
    if f == "dprime":
        c, d = label  # type: ignore[misc]
        x = MonomialUnitary.anti(0, Fraction(1, 2 ** (spec.k + 1)))
        y = MonomialUnitary.diagonal(Fraction(1, spec.p), Fraction(-1, spec.p))
        return x**c * y**d
    if f == "tprime":
        c, u = label  # type: ignore[misc]
        # x -> zeta * SHIFT with zeta = e(1/3^v); for v = 1 this is T* itself
        zeta = Turn(Fraction(c, 3**spec.v)) if spec.v >= 2 else Turn(0)
        return (zeta, SHIFT**c * u)
    raise ValueError(f"no base realization for {spec}")


def unitary_realization(spec: GroupSpec) -> List[Realized]:
    """A fixed-point-free action on S^3 for every element of ``construct_group(spec)``.

    Elements are either monomial unitaries or scalar multiples
    ``e(t) * q`` of unit quaternions acting by left multiplication.
    """
    g = construct_group(spec)
    if spec.family != "product":
        return [_realize_base(spec, lab) for lab in g.labels]
    assert spec.base is not None
    out: List[Realized] = []
    for scalar, base_label in g.labels:
        r = _realize_base(spec.base, base_label)
        if isinstance(r, MonomialUnitary):
            out.append(MonomialUnitary(r.antidiagonal, r.a + scalar, r.b + scalar))
        else:
            out.append((r[0] + scalar, r[1]))
    return out


def has_fixed_vector(r: Realized) -> bool:
    """Whether 1 is an eigenvalue of the realized element (exactly)."""
    if isinstance(r, MonomialUnitary):
        return any(t.is_zero for t in r.eigen_turns())
    scalar, q = r
    # e(s) q has eigenvalues e(s +- theta) with cos(2 pi theta) = Re q
    c = cos_turn(scalar)
    return c is not None and c == q.real


def acts_freely(spec: GroupSpec) -> bool:
    realized = unitary_realization(spec)
    g = construct_group(spec)
    return all(not has_fixed_vector(r) for i, r in enumerate(realized) if i != g.identity)
