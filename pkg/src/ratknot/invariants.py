"""Rational classical invariants of rationally null-homologous knots.

Everything here is bookkeeping on the homological footprint of a rational
Seifert surface: its order r along the knot, the slope s of its Seifert
cable in a fixed framing, its Euler characteristic, and signed counts of
singular points of its characteristic foliation. Changing the framing by n
sends s to s + n*r.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd


class InvariantError(ValueError):
    pass


@dataclass(frozen=True)
class SeifertData:
    order: int
    boundary_slope: int = 0
    euler_char: int = 1

    def __post_init__(self):
        if self.order < 1:
            raise InvariantError(f"order must be >= 1, got {self.order}")

    @property
    def multiplicity(self) -> int:
        # gcd(r, 0) == r: the (r, 0)-curve is r parallel longitudes
        return gcd(self.order, self.boundary_slope)

    def reframe(self, n: int) -> "SeifertData":
        """Same surface seen in the framing shifted by n."""
        return replace(self, boundary_slope=self.boundary_slope + n * self.order)


def _check_denominator(name: str, value: Fraction, r: int) -> None:
    if (value * r).denominator != 1:
        raise InvariantError(f"{name}={value} is not a multiple of 1/{r}")


@dataclass(frozen=True)
class LegendrianRecord:
    seifert: SeifertData
    tb: Fraction
    rot: Fraction

    def __post_init__(self):
        object.__setattr__(self, "tb", Fraction(self.tb))
        object.__setattr__(self, "rot", Fraction(self.rot))
        _check_denominator("tb", self.tb, self.seifert.order)
        _check_denominator("rot", self.rot, self.seifert.order)


@dataclass(frozen=True)
class TransverseRecord:
    seifert: SeifertData
    sl: Fraction

    def __post_init__(self):
        object.__setattr__(self, "sl", Fraction(self.sl))
        _check_denominator("sl", self.sl, self.seifert.order)


@dataclass(frozen=True)
class SingularityCounts:
    e_plus: int = 0
    e_minus: int = 0
    h_plus: int = 0
    h_minus: int = 0

    def __post_init__(self):
        if min(self.e_plus, self.e_minus, self.h_plus, self.h_minus) < 0:
            raise InvariantError(f"negative singularity count in {self}")

    def __add__(self, other: "SingularityCounts") -> "SingularityCounts":
        return SingularityCounts(
            self.e_plus + other.e_plus,
            self.e_minus + other.e_minus,
            self.h_plus + other.h_plus,
            self.h_minus + other.h_minus,
        )

    def scaled(self, k: int) -> "SingularityCounts":
        return SingularityCounts(k * self.e_plus, k * self.e_minus, k * self.h_plus, k * self.h_minus)

    @property
    def signed_sum(self) -> int:
        """(e_- - h_-) - (e_+ - h_+), the self-linking of the r-fold lift."""
        return (self.e_minus - self.h_minus) - (self.e_plus - self.h_plus)

    @property
    def index_sum(self) -> int:
        """(e_+ - h_+) + (e_- - h_-), the Poincare-Hopf index sum."""
        return (self.e_plus - self.h_plus) + (self.e_minus - self.h_minus)

    def as_dict(self) -> dict[str, int]:
        return {
            "e_plus": self.e_plus,
            "e_minus": self.e_minus,
            "h_plus": self.h_plus,
            "h_minus": self.h_minus,
        }


def _check_order(r: int) -> None:
    if r < 1:
        raise InvariantError(f"order must be >= 1, got {r}")


def lk_pushoff(r: int, s: int, f: int) -> Fraction:
    """Rational linking of K with its push-off along framing f.

    r*lk is the intersection number of the (r, s) Seifert cable with the
    (1, f) push-off on the boundary torus, r*f - s.
    """
    _check_order(r)
    return Fraction(r * f - s, r)


def sl_from_counts(r: int, c: SingularityCounts) -> Fraction:
    _check_order(r)
    return Fraction(c.signed_sum, r)


def poincare_hopf_check(chi: int, c: SingularityCounts) -> bool:
    return chi == c.index_sum


def sl_defect(r: int, sl: Fraction, chi: int) -> Fraction:
    """r*sl + chi; equals 2(e_- - h_-) for a surface realizing the counts."""
    _check_order(r)
    scaled = r * Fraction(sl)
    if scaled.denominator != 1:
        raise InvariantError(f"r*sl = {scaled} is not an integer")
    return scaled + chi


def bennequin_slack(sl: Fraction, chi: int, r: int) -> Fraction:
    """-chi/r - sl. Negative means the Bennequin bound fails; zero is sharp."""
    _check_order(r)
    return Fraction(-chi, r) - Fraction(sl)


def bennequin_legendrian(tb: Fraction, rot: Fraction, chi: int, r: int) -> bool:
    _check_order(r)
    return Fraction(tb) + abs(Fraction(rot)) <= Fraction(-chi, r)


def transverse_pushoff(L: LegendrianRecord) -> TransverseRecord:
    return TransverseRecord(L.seifert, L.tb - L.rot)


def legendrian_stabilize(L: LegendrianRecord, sign: str) -> LegendrianRecord:
    """S_+ or S_-: tb drops by one, rot moves by +1 or -1."""
    if sign == "+":
        step = 1
    elif sign == "-":
        step = -1
    else:
        raise InvariantError(f"stabilization sign must be '+' or '-', got {sign!r}")
    return LegendrianRecord(L.seifert, L.tb - 1, L.rot + step)


def transverse_stabilize(T: TransverseRecord) -> TransverseRecord:
    return TransverseRecord(T.seifert, T.sl - 2)


def canonical_counts(chi: int) -> SingularityCounts:
    """Smallest all-positive counts with index sum chi (one source plus saddles)."""
    if chi >= 1:
        return SingularityCounts(e_plus=chi)
    return SingularityCounts(e_plus=1, h_plus=1 - chi)
