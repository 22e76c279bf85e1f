"""Names of three-dimensional spherical space form groups.

Subscripts always denote orders, so the binary dihedral group of order 8 is
``D*8``.  The compact string forms are::

    1  Z96  D*96  T*  O*  I*  D'(k=3,p=3)  T'(v=2)  Z3xD*32
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Optional

__all__ = ["GroupSpec", "parse_group_spec"]

FAMILIES = (
    "trivial",
    "cyclic",
    "binary_dihedral",
    "binary_tetrahedral",
    "binary_octahedral",
    "binary_icosahedral",
    "dprime",
    "tprime",
    "product",
)

POLYHEDRAL_ORDERS = {"binary_tetrahedral": 24, "binary_octahedral": 48, "binary_icosahedral": 120}
POLYHEDRAL_NAMES = {"binary_tetrahedral": "T*", "binary_octahedral": "O*", "binary_icosahedral": "I*"}


@dataclass(frozen=True)
class GroupSpec:
    """One entry of the space form group list.

    Only the parameters relevant to ``family`` are meaningful: ``m`` is the
    cyclic order (or the cyclic factor of a product), ``b`` makes ``D*_{4b}``,
    ``k, p`` make ``D'_{2^{k+2} p}``, ``v`` makes ``T'_{8 3^v}``.
    """

    family: str
    m: int = 0
    b: int = 0
    k: int = 0
    p: int = 0
    v: int = 0
    base: Optional["GroupSpec"] = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown group family {self.family!r}")
        f = self.family
        if f == "cyclic" and self.m < 1:
            raise ValueError("cyclic order must be >= 1")
        if f == "binary_dihedral" and self.b < 1:
            raise ValueError("binary dihedral D*_{4b} needs b >= 1")
        if f == "dprime" and (self.k < 1 or self.p <= 1 or self.p % 2 == 0):
            raise ValueError("D'_{2^(k+2) p} needs k >= 1 and p odd, p > 1")
        if f == "tprime" and self.v < 1:
            raise ValueError("T'_{8 3^v} needs v >= 1")
        if f == "product":
            if self.base is None or self.m < 1:
                raise ValueError("a product needs a cyclic factor m >= 1 and a base group")
            if self.base.family == "product":
                raise ValueError("nested products are not canonical; merge the cyclic factors")
            if math.gcd(self.m, self.base.order) != 1:
                raise ValueError(f"Z{self.m} x {self.base}: orders are not coprime")

    # constructors -------------------------------------------------------
    @classmethod
    def trivial(cls) -> GroupSpec:
        return cls("trivial")

    @classmethod
    def cyclic(cls, m: int) -> GroupSpec:
        return cls("cyclic", m=m)

    @classmethod
    def binary_dihedral(cls, b: int) -> GroupSpec:
        """``D*_{4b}``; note the argument is b, not the order."""
        return cls("binary_dihedral", b=b)

    @classmethod
    def binary_tetrahedral(cls) -> GroupSpec:
        return cls("binary_tetrahedral")

    @classmethod
    def binary_octahedral(cls) -> GroupSpec:
        return cls("binary_octahedral")

    @classmethod
    def binary_icosahedral(cls) -> GroupSpec:
        return cls("binary_icosahedral")

    @classmethod
    def dprime(cls, k: int, p: int) -> GroupSpec:
        return cls("dprime", k=k, p=p)

    @classmethod
    def tprime(cls, v: int) -> GroupSpec:
        return cls("tprime", v=v)

    @classmethod
    def product(cls, m: int, base: GroupSpec) -> GroupSpec:
        if m == 1:
            return base
        return cls("product", m=m, base=base)

    # derived data -------------------------------------------------------
    @property
    def order(self) -> int:
        f = self.family
        if f == "trivial":
            return 1
        if f == "cyclic":
            return self.m
        if f == "binary_dihedral":
            return 4 * self.b
        if f in POLYHEDRAL_ORDERS:
            return POLYHEDRAL_ORDERS[f]
        if f == "dprime":
            return 2 ** (self.k + 2) * self.p
        if f == "tprime":
            return 8 * 3**self.v
        assert self.base is not None
        return self.m * self.base.order

    @property
    def is_binary_polyhedral(self) -> bool:
        """Non-cyclic binary polyhedral: ``D*_{4b}`` (b > 1), T*, O*, I*."""
        return (self.family == "binary_dihedral" and self.b > 1) or self.family in POLYHEDRAL_ORDERS

    def __str__(self) -> str:
        f = self.family
        if f == "trivial":
            return "1"
        if f == "cyclic":
            return f"Z{self.m}"
        if f == "binary_dihedral":
            return f"D*{4 * self.b}"
        if f in POLYHEDRAL_NAMES:
            return POLYHEDRAL_NAMES[f]
        if f == "dprime":
            return f"D'(k={self.k},p={self.p})"
        if f == "tprime":
            return f"T'(v={self.v})"
        return f"Z{self.m}x{self.base}"


_SIMPLE = [
    (re.compile(r"1|Z1"), lambda g: GroupSpec.trivial()),
    (re.compile(r"Z(\d+)"), lambda g: GroupSpec.cyclic(int(g[0]))),
    (re.compile(r"D\*(\d+)"), lambda g: _dihedral_from_order(int(g[0]))),
    (re.compile(r"T\*"), lambda g: GroupSpec.binary_tetrahedral()),
    (re.compile(r"O\*"), lambda g: GroupSpec.binary_octahedral()),
    (re.compile(r"I\*"), lambda g: GroupSpec.binary_icosahedral()),
    (re.compile(r"D'\(K=(\d+),P=(\d+)\)"), lambda g: GroupSpec.dprime(int(g[0]), int(g[1]))),
    (re.compile(r"T'\(V=(\d+)\)"), lambda g: GroupSpec.tprime(int(g[0]))),
]


def _dihedral_from_order(n: int) -> GroupSpec:
    if n % 4:
        raise ValueError(f"binary dihedral order must be divisible by 4, got {n}")
    return GroupSpec.binary_dihedral(n // 4)


def _parse_simple(text: str) -> GroupSpec:
    for pattern, build in _SIMPLE:
        match = pattern.fullmatch(text)
        if match:
            return build(match.groups())
    raise ValueError(f"unrecognized group name {text!r}")


def parse_group_spec(text: str) -> GroupSpec:
    """Parse the compact string form, case-insensitively."""
    t = re.sub(r"\s+", "", text).upper()
    match = re.fullmatch(r"Z(\d+)X(.+)", t)
    if match:
        base = _parse_simple(match.group(2))
        return GroupSpec.product(int(match.group(1)), base)
    match = re.fullmatch(r"(.+)XZ(\d+)", t)
    if match:
        return GroupSpec.product(int(match.group(2)), _parse_simple(match.group(1)))
    return _parse_simple(t)
