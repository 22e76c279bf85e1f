"""Exact Dedekind sums.

``D(a, b; c) = sum_{i=1}^{c-1} ((a i / c)) ((b i / c))`` for pairwise coprime
``a, b, c`` (``c > 0``), where ``((x))`` is the sawtooth function, and the
classical two-argument sum ``s(b, c) = D(1, b; c)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Literal

__all__ = [
    "CoprimalityError",
    "sawtooth",
    "s_sum",
    "d_sum",
    "rademacher_defect",
    "d_special",
    "cotangent_sum",
]

HALF = Fraction(1, 2)


class CoprimalityError(ValueError):
    """Raised when arguments that must be pairwise coprime are not."""


def sawtooth(x: Fraction | int) -> Fraction:
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - HALF


def _check_modulus(c: int) -> None:
    if c <= 0:
        raise ValueError(f"modulus must be positive, got {c}")


def _brute(a: int, b: int, c: int) -> Fraction:
    # ((k/c)) = (2r - c) / (2c) with r = k mod c, or 0 when r = 0, so the whole
    # sum is an integer over 4c^2 and no Fraction is built per term.
    total = 0
    for i in range(1, c):
        r, t = a * i % c, b * i % c
        if r and t:
            total += (2 * r - c) * (2 * t - c)
    return Fraction(total, 4 * c * c)


def _s_brute(b: int, c: int) -> Fraction:
    return _brute(1, b, c)


def _s_fast(b: int, c: int) -> Fraction:
    # Swap-and-reduce with s(b, c) + s(c, b) = (b/c + 1/(bc) + c/b)/12 - 1/4,
    # like the Euclidean algorithm on (b, c).
    # Each step contributes +-(b^2 + c^2 + 1 - 3bc) / (12bc); the terms are
    # kept over a common integer denominator and reduced once at the end.
    num, den = 0, 1
    sign = 1
    b %= c
    while c > 1 and b != 0:
        step_den = b * c
        g = math.gcd(den, step_den)
        scale = step_den // g
        num = num * scale + sign * (b * b + c * c + 1 - 3 * b * c) * (den // g)
        den *= scale
        b, c = c % b, b
        sign = -sign
    return Fraction(num, 12 * den)


def s_sum(b: int, c: int, method: Literal["fast", "brute"] = "fast") -> Fraction:
    """Classical Dedekind sum ``s(b, c)``.

    ``brute`` sums the definition directly and accepts any ``b``; ``fast``
    needs ``gcd(b, c) == 1`` (or ``b == 0 mod c``) and runs in O(log c)
    reciprocity steps.
    """
    _check_modulus(c)
    if method == "brute":
        return _s_brute(b, c)
    if method != "fast":
        raise ValueError(f"unknown method {method!r}")
    if b % c != 0 and math.gcd(b, c) != 1:
        raise CoprimalityError(f"s({b}, {c}): arguments not coprime")
    return _s_fast(b, c)


def _check_pairwise(a: int, b: int, c: int) -> None:
    for x, y in ((a, b), (b, c), (a, c)):
        if math.gcd(x, y) != 1:
            raise CoprimalityError(f"D({a}, {b}; {c}): {x} and {y} are not coprime")


def d_sum(a: int, b: int, c: int, method: Literal["reduce", "brute"] = "reduce") -> Fraction:
    """Three-argument Dedekind sum ``D(a, b; c)``."""
    _check_modulus(c)
    _check_pairwise(a, b, c)
    if method == "brute":
        return _brute(a, b, c)
    if method != "reduce":
        raise ValueError(f"unknown method {method!r}")
    if c == 1:
        return Fraction(0)
    sign = 1
    if a < 0:
        a, sign = -a, -sign
    # D(a, b; c) = D(1, b a^-1; c) by scaling the summation index.
    return sign * _s_fast(b * pow(a, -1, c) % c, c)


def rademacher_defect(a: int, b: int, c: int) -> Fraction:
    """Left side minus right side of Rademacher three-term reciprocity; always 0."""
    if min(a, b, c) <= 0:
        raise ValueError("arguments must be positive")
    _check_pairwise(a, b, c)
    lhs = d_sum(a, b, c) + d_sum(b, c, a) + d_sum(c, a, b)
    rhs = Fraction(a * a + b * b + c * c, 12 * a * b * c) - Fraction(1, 4)
    return lhs - rhs


def d_special(x: int, y: int) -> Fraction:
    """``D(2x + y, 2x - y; 2xy)`` in closed form.

    Equals ``1/(12xy) + y/(6x) - 1/4 - 2 s(y, x)``; requires ``gcd(2x, y) == 1``.
    """
    if x <= 0 or y <= 0:
        raise ValueError("x and y must be positive")
    if math.gcd(2 * x, y) != 1:
        raise CoprimalityError(f"gcd(2x, y) must be 1, got x={x}, y={y}")
    return Fraction(1, 12 * x * y) + Fraction(y, 6 * x) - Fraction(1, 4) - 2 * s_sum(y, x)


def cotangent_sum(p: int, q: int, r: int) -> float:
    """Double-precision ``(1/4r) sum_{k=1}^{r-1} cot(pi p k / r) cot(pi q k / r)``."""
    _check_modulus(r)
    total = 0.0
    for k in range(1, r):
        x, y = math.pi * p * k / r, math.pi * q * k / r
        total += (math.cos(x) / math.sin(x)) * (math.cos(y) / math.sin(y))
    return total / (4 * r)
