"""Exact scalars and small matrices.

Everything here is immutable and exact: rationals are ``fractions.Fraction``,
angles are rational turns (``t`` stands for the unit complex number
``exp(2*pi*i*t)``), and the only irrational numbers that ever appear are
the square roots needed for the binary octahedral and icosahedral groups,
handled by :class:`QuadraticScalar`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

__all__ = [
    "RationalLike",
    "as_fraction",
    "format_rational",
    "parse_rational",
    "Turn",
    "MonomialUnitary",
    "turn_eigen_angles",
    "monomial_product",
    "QuadraticScalar",
    "Quaternion",
    "quaternion_product",
    "RationalMatrix3",
]

RationalLike = Union[int, Fraction, str]


def as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rational(x: Fraction | int) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    # Fraction also accepts decimals and exponents; the wire format does not.
    body = text[1:] if text[0] in "+-" else text
    parts = body.split("/")
    if len(parts) > 2 or not all(p.strip().isdigit() for p in parts):
        raise ValueError(f"not a rational of the form p or p/q: {text!r}")
    return Fraction(text.replace(" ", ""))


# ---------------------------------------------------------------------------
# Turns and monomial unitaries
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Turn:
    """A rational fraction of a full revolution, reduced into [0, 1)."""

    fraction: Fraction

    def __init__(self, value: RationalLike = 0) -> None:
        f = as_fraction(value)
        object.__setattr__(self, "fraction", f - (f.numerator // f.denominator))

    def __add__(self, other: Turn) -> Turn:
        return Turn(self.fraction + other.fraction)

    def __sub__(self, other: Turn) -> Turn:
        return Turn(self.fraction - other.fraction)

    def __neg__(self) -> Turn:
        return Turn(-self.fraction)

    def __mul__(self, k: int) -> Turn:
        return Turn(self.fraction * k)

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return self.fraction == 0

    @property
    def order(self) -> int:
        """Multiplicative order of the root of unity this turn denotes."""
        return self.fraction.denominator

    def __str__(self) -> str:
        return format_rational(self.fraction)

    def __repr__(self) -> str:
        return f"Turn({format_rational(self.fraction)})"


@dataclass(frozen=True)
class MonomialUnitary:
    """A 2x2 unitary with exactly one nonzero entry per row.

    Diagonal: ``diag(exp a, exp b)``.  Anti-diagonal: ``exp a`` top-right and
    ``exp b`` bottom-left.
    """

    antidiagonal: bool
    a: Turn
    b: Turn

    @classmethod
    def diagonal(cls, a: RationalLike, b: RationalLike) -> MonomialUnitary:
        return cls(False, Turn(a), Turn(b))

    @classmethod
    def anti(cls, a: RationalLike, b: RationalLike) -> MonomialUnitary:
        return cls(True, Turn(a), Turn(b))

    @classmethod
    def identity(cls) -> MonomialUnitary:
        return cls(False, Turn(0), Turn(0))

    @classmethod
    def scalar(cls, t: RationalLike) -> MonomialUnitary:
        return cls(False, Turn(t), Turn(t))

    def __mul__(self, other: MonomialUnitary) -> MonomialUnitary:
        if not isinstance(other, MonomialUnitary):
            return NotImplemented
        if not self.antidiagonal:
            return MonomialUnitary(other.antidiagonal, self.a + other.a, self.b + other.b)
        if not other.antidiagonal:
            return MonomialUnitary(True, self.a + other.b, self.b + other.a)
        return MonomialUnitary(False, self.a + other.b, self.b + other.a)

    def inverse(self) -> MonomialUnitary:
        if not self.antidiagonal:
            return MonomialUnitary(False, -self.a, -self.b)
        # [[0, e(a)], [e(b), 0]]^-1 = [[0, e(-b)], [e(-a), 0]]
        return MonomialUnitary(True, -self.b, -self.a)

    def __pow__(self, n: int) -> MonomialUnitary:
        base = self if n >= 0 else self.inverse()
        result = MonomialUnitary.identity()
        for _ in range(abs(n)):
            result = result * base
        return result

    @property
    def is_identity(self) -> bool:
        return not self.antidiagonal and self.a.is_zero and self.b.is_zero

    def eigen_turns(self) -> Tuple[Turn, Turn]:
        return turn_eigen_angles(self)

    def __str__(self) -> str:
        kind = "anti" if self.antidiagonal else "diag"
        return f"{kind}({self.a}, {self.b})"


def turn_eigen_angles(m: MonomialUnitary) -> Tuple[Turn, Turn]:
    """The two eigenvalues of ``m``, as turns.

    An anti-diagonal matrix squares to the scalar ``exp(a + b)``, so its
    eigenvalues are the two square roots ``exp((a+b)/2)`` and
    ``exp((a+b)/2 + 1/2)``.
    """
    if not m.antidiagonal:
        return (m.a, m.b)
    half = (m.a.fraction + m.b.fraction) / 2
    return (Turn(half), Turn(half + Fraction(1, 2)))


def monomial_product(x: MonomialUnitary, y: MonomialUnitary) -> MonomialUnitary:
    return x * y


# ---------------------------------------------------------------------------
# Quadratic scalars and quaternions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadraticScalar:
    """``r + s*sqrt(d)`` with rational r, s and squarefree d > 1.

    Scalars with ``s == 0`` are stored with ``d == 1`` so that rationals
    compare equal regardless of which field they were computed in.
    """

    r: Fraction
    s: Fraction = Fraction(0)
    d: int = 1

    def __init__(self, r: RationalLike = 0, s: RationalLike = 0, d: int = 1) -> None:
        r_, s_ = as_fraction(r), as_fraction(s)
        if s_ != 0 and d <= 1:
            raise ValueError("an irrational part needs a radicand d > 1")
        object.__setattr__(self, "r", r_)
        object.__setattr__(self, "s", s_)
        object.__setattr__(self, "d", d if s_ != 0 else 1)

    def _field(self, other: QuadraticScalar) -> int:
        if self.d == 1:
            return other.d
        if other.d == 1 or other.d == self.d:
            return self.d
        raise ValueError(f"mixing sqrt({self.d}) and sqrt({other.d})")

    @staticmethod
    def _coerce(x: object) -> QuadraticScalar:
        if isinstance(x, QuadraticScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return QuadraticScalar(x)
        raise TypeError(f"unsupported operand {type(x).__name__}")

    def __add__(self, other: object) -> QuadraticScalar:
        o = self._coerce(other)
        return QuadraticScalar(self.r + o.r, self.s + o.s, self._field(o))

    __radd__ = __add__

    def __neg__(self) -> QuadraticScalar:
        return QuadraticScalar(-self.r, -self.s, self.d)

    def __sub__(self, other: object) -> QuadraticScalar:
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> QuadraticScalar:
        return self._coerce(other) - self

    def __mul__(self, other: object) -> QuadraticScalar:
        o = self._coerce(other)
        d = self._field(o)
        return QuadraticScalar(self.r * o.r + d * self.s * o.s, self.r * o.s + self.s * o.r, d)

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticScalar:
        return QuadraticScalar(self.r, -self.s, self.d)

    def inverse(self) -> QuadraticScalar:
        n = self.r * self.r - self.d * self.s * self.s
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadraticScalar(self.r / n, -self.s / n, self.d)

    def __truediv__(self, other: object) -> QuadraticScalar:
        return self * self._coerce(other).inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.s == 0 and self.r == other
        if not isinstance(other, QuadraticScalar):
            return NotImplemented
        return self.r == other.r and self.s == other.s and self.d == other.d

    def __hash__(self) -> int:
        return hash((self.r, self.s, self.d))

    @property
    def is_rational(self) -> bool:
        return self.s == 0

    def __float__(self) -> float:
        return float(self.r) + float(self.s) * self.d**0.5

    def __str__(self) -> str:
        if self.s == 0:
            return format_rational(self.r)
        return f"{format_rational(self.r)}+{format_rational(self.s)}*sqrt({self.d})"


def _qs(x: object) -> QuadraticScalar:
    return QuadraticScalar._coerce(x)


@dataclass(frozen=True)
class Quaternion:
    """Quaternion ``w + x i + y j + z k`` with exact (quadratic) coefficients."""

    w: QuadraticScalar
    x: QuadraticScalar
    y: QuadraticScalar
    z: QuadraticScalar

    def __init__(self, w: object = 0, x: object = 0, y: object = 0, z: object = 0) -> None:
        for name, v in zip("wxyz", (w, x, y, z)):
            if isinstance(v, str):
                v = Fraction(v)
            object.__setattr__(self, name, _qs(v))

    @classmethod
    def one(cls) -> Quaternion:
        return cls(1)

    @property
    def coefficients(self) -> Tuple[QuadraticScalar, ...]:
        return (self.w, self.x, self.y, self.z)

    def __mul__(self, other: Quaternion) -> Quaternion:
        if not isinstance(other, Quaternion):
            return NotImplemented
        a1, b1, c1, d1 = self.coefficients
        a2, b2, c2, d2 = other.coefficients
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def scale(self, c: object) -> Quaternion:
        c = _qs(c)
        return Quaternion(*(c * v for v in self.coefficients))

    def conjugate(self) -> Quaternion:
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self) -> QuadraticScalar:
        return sum((v * v for v in self.coefficients), QuadraticScalar(0))

    def inverse(self) -> Quaternion:
        return self.conjugate().scale(self.norm2().inverse())

    def __pow__(self, n: int) -> Quaternion:
        base = self if n >= 0 else self.inverse()
        result = Quaternion.one()
        for _ in range(abs(n)):
            result = result * base
        return result

    @property
    def is_unit(self) -> bool:
        return self.norm2() == 1

    @property
    def real(self) -> QuadraticScalar:
        return self.w

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.coefficients) + ")"


def quaternion_product(x: Quaternion, y: Quaternion) -> Quaternion:
    return x * y


# ---------------------------------------------------------------------------
# 3x3 rational matrices
# ---------------------------------------------------------------------------

Vector3 = Tuple[Fraction, Fraction, Fraction]


def _vec(v: Iterable[RationalLike]) -> Vector3:
    t = tuple(as_fraction(c) for c in v)
    if len(t) != 3:
        raise ValueError("expected a 3-vector")
    return t  # type: ignore[return-value]


@dataclass(frozen=True)
class RationalMatrix3:
    rows: Tuple[Vector3, Vector3, Vector3]

    def __init__(self, rows: Sequence[Sequence[RationalLike]]) -> None:
        if len(rows) != 3:
            raise ValueError("expected 3 rows")
        object.__setattr__(self, "rows", tuple(_vec(r) for r in rows))

    @classmethod
    def identity(cls) -> RationalMatrix3:
        return cls([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[RationalLike]]) -> RationalMatrix3:
        return cls([[cols[j][i] for j in range(3)] for i in range(3)])

    def column(self, j: int) -> Vector3:
        return (self.rows[0][j], self.rows[1][j], self.rows[2][j])

    def transpose(self) -> RationalMatrix3:
        return RationalMatrix3([self.column(j) for j in range(3)])

    def __matmul__(self, other: RationalMatrix3) -> RationalMatrix3:
        cols = [other.column(j) for j in range(3)]
        return RationalMatrix3(
            [[sum(r[k] * c[k] for k in range(3)) for c in cols] for r in self.rows]
        )

    def apply(self, v: Sequence[Fraction]) -> Vector3:
        return tuple(sum(r[k] * v[k] for k in range(3)) for r in self.rows)  # type: ignore[return-value]

    def det(self) -> Fraction:
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def trace(self) -> Fraction:
        return self.rows[0][0] + self.rows[1][1] + self.rows[2][2]

    def inverse(self) -> RationalMatrix3:
        det = self.det()
        if det == 0:
            raise ZeroDivisionError("singular matrix")
        m = self.rows
        cof = [
            [
                m[(i + 1) % 3][(j + 1) % 3] * m[(i + 2) % 3][(j + 2) % 3]
                - m[(i + 1) % 3][(j + 2) % 3] * m[(i + 2) % 3][(j + 1) % 3]
                for j in range(3)
            ]
            for i in range(3)
        ]
        # inverse = adjugate / det, adjugate = transpose of cofactors
        return RationalMatrix3([[cof[j][i] / det for j in range(3)] for i in range(3)])

    def __pow__(self, n: int) -> RationalMatrix3:
        base = self if n >= 0 else self.inverse()
        result = RationalMatrix3.identity()
        for _ in range(abs(n)):
            result = result @ base
        return result

    def is_rotation(self) -> bool:
        """Exact check of ``M^T M = I`` and ``det M = 1``."""
        return self.transpose() @ self == RationalMatrix3.identity() and self.det() == 1

    def to_strings(self) -> list:
        return [[format_rational(x) for x in r] for r in self.rows]
