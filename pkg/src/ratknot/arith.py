"""Exact rationals and the little number theory the rest of the package needs.

Rationals are plain :class:`fractions.Fraction` values: immutable, always
reduced, denominator positive, backed by Python's unbounded integers.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

Rational = Fraction

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def rat_reduce(n: int, d: int) -> Fraction:
    """Return the reduced rational n/d with positive denominator.

    Raises ZeroDivisionError for d == 0.
    """
    if not isinstance(n, int) or not isinstance(d, int):
        raise TypeError("rat_reduce takes integers")
    if d == 0:
        raise ZeroDivisionError(f"zero denominator in {n}/{d}")
    return Fraction(n, d)


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y == g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_x, x = x, old_x - k * x
        old_y, y = y, old_y - k * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def modinv(a: int, m: int) -> int:
    """Inverse of a modulo m (m >= 1), in [0, m)."""
    if m < 1:
        raise ValueError("modulus must be positive")
    g, x, _ = egcd(a, m)
    if g != 1:
        raise ValueError(f"{a} is not invertible modulo {m}")
    return x % m


def is_integral(x: Fraction) -> bool:
    return x.denominator == 1


def format_rational(x: Fraction | int) -> str:
    """Serialize as "n/d" (integers too, e.g. "3/1")."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "n", "n/d" or "-n/d" (no whitespace, no floats)."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not an exact rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return rat_reduce(num, den)


__all__ = [
    "Rational",
    "egcd",
    "format_rational",
    "gcd",
    "is_integral",
    "modinv",
    "parse_rational",
    "rat_reduce",
]
