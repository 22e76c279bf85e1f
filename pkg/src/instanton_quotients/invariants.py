"""Topological bookkeeping for gravitational instantons and their quotients.

Energies are exact rationals in units of pi^2: ``energy = 8 (chi - 1/|pi_1^inf|)``
stands for the integral of ``|W_-|^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from .exact import format_rational
from .groups.spec import GroupSpec

__all__ = [
    "InstantonCatalogEntry",
    "BubbleInvariants",
    "catalog_lookup",
    "parse_dynkin",
    "catalog_entries_with_b2",
    "quotient_invariants",
    "gauss_bonnet_energy",
    "signature_eta",
    "corollary_b_bound",
    "corollary_b_minimum",
    "CorollaryCReport",
    "corollary_c_descriptor",
]


@dataclass(frozen=True)
class InstantonCatalogEntry:
    """One row of the ADE list: Dynkin label, group at infinity, Euler characteristic, signature."""

    dynkin: str
    gamma: GroupSpec
    euler: int
    signature: int

    @property
    def gamma_order(self) -> int:
        return self.gamma.order

    @property
    def b2(self) -> int:
        return self.euler - 1

    @property
    def is_a_type(self) -> bool:
        return self.dynkin.startswith("A")

    def to_json(self) -> Dict[str, object]:
        return {
            "dynkin": self.dynkin,
            "gamma": str(self.gamma),
            "gamma_order": self.gamma_order,
            "euler": self.euler,
            "signature": self.signature,
        }


def catalog_lookup(dynkin: str, parameter: Optional[int] = None) -> InstantonCatalogEntry:
    """Look up ``A`` (group ``Z_k``), ``D`` (group ``D*_{4k}``), ``E6``, ``E7`` or ``E8``.

    ``parameter`` is the k of the group, so ``("A", 5)`` is the A4 row and
    ``("D", 2)`` the D4 row.
    """
    kind = dynkin.strip().upper()
    if kind in ("E6", "E7", "E8"):
        if parameter is not None:
            raise ValueError(f"{kind} takes no parameter")
        gamma = {
            "E6": GroupSpec.binary_tetrahedral(),
            "E7": GroupSpec.binary_octahedral(),
            "E8": GroupSpec.binary_icosahedral(),
        }[kind]
        n = int(kind[1])
        return InstantonCatalogEntry(kind, gamma, n + 1, -n)
    if kind not in ("A", "D"):
        raise ValueError(f"unknown Dynkin type {dynkin!r}; use A, D, E6, E7 or E8")
    if parameter is None or parameter < 1:
        raise ValueError(f"{kind} needs a parameter k >= 1")
    k = parameter
    if kind == "A":
        gamma = GroupSpec.trivial() if k == 1 else GroupSpec.cyclic(k)
        return InstantonCatalogEntry(f"A{k - 1}", gamma, k, 1 - k)
    return InstantonCatalogEntry(f"D{k + 2}", GroupSpec.binary_dihedral(k), k + 3, -k - 2)


def parse_dynkin(label: str) -> InstantonCatalogEntry:
    """Look up a row from its diagram name, e.g. ``"A4"``, ``"D5"``, ``"E8"``."""
    text = label.strip().upper()
    if text in ("E6", "E7", "E8"):
        return catalog_lookup(text)
    if len(text) < 2 or text[0] not in "AD" or not text[1:].isdigit():
        raise ValueError(f"unrecognized Dynkin label {label!r}")
    n = int(text[1:])
    if text[0] == "A":
        return catalog_lookup("A", n + 1)
    if n < 3:
        raise ValueError("D-type labels start at D3")
    return catalog_lookup("D", n - 2)


def catalog_entries_with_b2(b2: int) -> List[InstantonCatalogEntry]:
    """Every row whose second Betti number is ``b2``."""
    out = [catalog_lookup("A", b2 + 1)]
    if b2 - 2 >= 1:
        out.append(catalog_lookup("D", b2 - 2))
    if b2 in (6, 7, 8):
        out.append(catalog_lookup(f"E{b2}"))
    return out


def gauss_bonnet_energy(euler: Fraction | int, pi1_inf_order: int) -> Fraction:
    """``8 (euler - 1/|pi_1^inf|)``, the ASD energy in units of pi^2."""
    if pi1_inf_order < 1:
        raise ValueError("the group at infinity has positive order")
    energy = 8 * (Fraction(euler) - Fraction(1, pi1_inf_order))
    if energy < 0:
        raise ValueError(f"negative energy {energy}: inconsistent Euler characteristic and group order")
    return energy


def signature_eta(signature: Fraction | int, asd_energy: Fraction | int) -> Fraction:
    """Boundary eta from the signature formula: ``-signature - energy/12``.

    >>> signature_eta(-4, 39)
    Fraction(3, 4)
    """
    return -Fraction(signature) - Fraction(asd_energy) / 12


@dataclass(frozen=True)
class BubbleInvariants:
    euler: Fraction
    b2: Fraction
    signature: Fraction
    pi1_inf_order: int
    asd_energy: Fraction
    degree: int = 1
    cover: Optional[str] = None
    classified_impossible: bool = False
    flat: bool = False

    def to_json(self) -> Dict[str, object]:
        return {
            "cover": self.cover,
            "degree": self.degree,
            "euler": format_rational(self.euler),
            "b2": format_rational(self.b2),
            "signature": format_rational(self.signature),
            "pi1_inf_order": self.pi1_inf_order,
            "asd_energy_pi2": format_rational(self.asd_energy),
            "classified_impossible": self.classified_impossible,
            "flat": self.flat,
        }


def quotient_invariants(cover: InstantonCatalogEntry, d: int) -> BubbleInvariants:
    """Invariants of a free ``d``-fold quotient of ``cover``.

    ``d`` must divide the Euler characteristic. Only A-type covers have
    nontrivial quotients; other rows with ``d > 1`` come back flagged
    ``classified_impossible`` rather than rejected.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    if cover.euler % d:
        raise ValueError(f"degree {d} does not divide the Euler characteristic {cover.euler}")
    euler = Fraction(cover.euler, d)
    order = cover.gamma_order * d
    return BubbleInvariants(
        euler=euler,
        b2=euler - 1,
        signature=1 - euler,
        pi1_inf_order=order,
        asd_energy=gauss_bonnet_energy(euler, order),
        degree=d,
        cover=cover.dynkin,
        classified_impossible=d > 1 and not cover.is_a_type,
        flat=order == 1,
    )


def corollary_b_bound(b2: int) -> Fraction:
    """Least ASD energy (pi^2 units) of a non-flat bubble with the given ``b2``."""
    if b2 < 0:
        raise ValueError("b2 must be nonnegative")
    if b2 == 0:
        return Fraction(6)
    return 8 * (b2 + 1 - Fraction(1, b2 + 1))


def _candidates(b2: int, max_d: int) -> Iterator[BubbleInvariants]:
    for entry in catalog_entries_with_b2(b2):
        yield quotient_invariants(entry, 1)
    for d in range(2, max_d + 1):
        yield quotient_invariants(catalog_lookup("A", d * (b2 + 1)), d)


def corollary_b_minimum(b2: int, max_d: int = 50) -> Tuple[Fraction, BubbleInvariants]:
    """Smallest energy among non-flat catalog rows and A-type quotients (``d <= max_d``) with this ``b2``."""
    best: Optional[BubbleInvariants] = None
    for cand in _candidates(b2, max_d):
        if cand.flat or cand.classified_impossible or cand.b2 != b2:
            continue
        if best is None or cand.asd_energy < best.asd_energy:
            best = cand
    if best is None:
        raise ValueError(f"no non-flat candidate with b2 = {b2}")
    return best.asd_energy, best


@dataclass(frozen=True)
class CorollaryCReport:
    cover_euler: int
    degree: int
    quotient: BubbleInvariants

    @property
    def flat(self) -> bool:
        return self.quotient.flat

    def to_json(self) -> Dict[str, object]:
        return {"cover_euler": self.cover_euler, "degree": self.degree, "flat": self.flat, "quotient": self.quotient.to_json()}


def corollary_c_descriptor(cover_euler: int) -> CorollaryCReport:
    """The quotient with ``b2 = 0`` of a Gibbons-Hawking space: degree equals its Euler characteristic."""
    if cover_euler < 1:
        raise ValueError("Euler characteristic of a Gibbons-Hawking space is at least 1")
    cover = catalog_lookup("A", cover_euler)
    return CorollaryCReport(cover_euler, cover_euler, quotient_invariants(cover, cover_euler))
