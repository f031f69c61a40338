"""Lens spaces L(p, q), negative continued fractions and dual parameters.

The expansion of -p/q is written with every coefficient <= -2:

    -p/q = a_0 - 1/(a_1 - 1/(... - 1/a_k))

Bumping the last coefficient to a_k + 1 and evaluating gives -p'/q', the
dual parameters entering the Heegaard gluing matrix. They satisfy
p*q' - p'*q = 1 and p'*q = -1 (mod p).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class LensSpaceError(ValueError):
    pass


@dataclass(frozen=True)
class DualParams:
    p_dual: int
    q_dual: int


@dataclass(frozen=True)
class LensSpace:
    p: int
    q: int

    def __post_init__(self):
        _check_pq(self.p, self.q)

    @property
    def ncf(self) -> list[int]:
        return ncf_expand(self.p, self.q)

    @property
    def dual(self) -> DualParams:
        return dual_params(self)

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


def _check_pq(p: int, q: int) -> None:
    if not (isinstance(p, int) and isinstance(q, int)):
        raise LensSpaceError("p and q must be integers")
    if not p > q > 0:
        raise LensSpaceError(f"need p > q > 0, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise LensSpaceError(f"p={p} and q={q} are not coprime")


def ncf_expand(p: int, q: int) -> list[int]:
    """Coefficients [a_0, ..., a_k], all <= -2, of the expansion of -p/q."""
    _check_pq(p, q)
    num, den = -p, q
    coeffs = []
    while True:
        a = num // den  # floor; the remainder below lies in [0, den)
        rem = num - a * den
        coeffs.append(a)
        if rem == 0:
            return coeffs
        # num/den = a - 1/y  =>  y = -den/rem
        num, den = -den, rem


def _ncf_value(coeffs: list[int]) -> tuple[int, int]:
    if not coeffs:
        raise ValueError("empty coefficient list")
    num, den = coeffs[-1], 1
    for a in reversed(coeffs[:-1]):
        if num == 0:
            raise ZeroDivisionError(f"continued fraction {coeffs} hits a zero denominator")
        num, den = a * num - den, num
    return num, den


def ncf_evaluate(coeffs: list[int]) -> Fraction:
    """Exact value of a_0 - 1/(a_1 - 1/(... - 1/a_k))."""
    num, den = _ncf_value(list(coeffs))
    if den == 0:
        raise ZeroDivisionError(f"continued fraction {coeffs} hits a zero denominator")
    return Fraction(num, den)


def dual_params(L: LensSpace) -> DualParams:
    p, q = L.p, L.q
    coeffs = ncf_expand(p, q)
    coeffs[-1] += 1
    value = ncf_evaluate(coeffs)
    p_dual, q_dual = -value.numerator, value.denominator
    # the modular characterization is checked independently of the expansion
    if not (0 < p_dual < p and 0 < q_dual <= q):
        raise RuntimeError(f"dual parameters out of range for {L}: ({p_dual}, {q_dual})")
    if p * q_dual - p_dual * q != 1 or (p_dual * q + 1) % p != 0:
        raise RuntimeError(f"dual parameters inconsistent for {L}: ({p_dual}, {q_dual})")
    return DualParams(p_dual, q_dual)
