"""Cabling and integral-resolution arithmetic for rational open books.

A knot K whose Seifert surface meets the boundary torus in an (r, s)-curve
is replaced by its (p, q)-cable, the curve(s) in class p*lambda + q*mu. The
new surface is assembled from |p|/g copies of the old surface and
|rq - sp|/g meridian disks joined by |p(rq - sp)|/g half-twisted bands,
where g = gcd(p, r). The closed forms below are checked against that
assembly in :func:`assembly_oracle`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .invariants import SingularityCounts, poincare_hopf_check


class CablingError(ValueError):
    pass


@dataclass(frozen=True)
class CableParams:
    p: int
    q: int

    def __post_init__(self):
        if self.p in (0, 1, -1):
            raise CablingError(f"cable needs p not in (0, 1, -1), got p={self.p}")

    def normalized(self) -> "CableParams":
        """Same unoriented curve with p > 0."""
        if self.p < 0:
            return CableParams(-self.p, -self.q)
        return self

    @property
    def slope(self) -> Fraction:
        return Fraction(self.q, self.p)


@dataclass(frozen=True)
class AssemblyCount:
    surface_copies: int
    meridian_disks: int
    bands: int


@dataclass(frozen=True)
class Resolution:
    components: int
    order: int
    multiplicity: int
    chi_delta: int
    positive: bool


def _validate(r: int, s: int, c: CableParams) -> None:
    if r < 1:
        raise CablingError(f"order must be >= 1, got {r}")
    # (p, q) proportional to (r, s) over Q
    if c.q * r == s * c.p:
        raise CablingError(f"cable slope {c.q}/{c.p} equals the Seifert slope {s}/{r}")


def assembly_count(r: int, s: int, c: CableParams) -> AssemblyCount:
    _validate(r, s, c)
    g = gcd(c.p, r)
    twist = abs(r * c.q - s * c.p)
    return AssemblyCount(abs(c.p) // g, twist // g, abs(c.p) * twist // g)


def cable_chi(chi_old: int, r: int, s: int, c: CableParams) -> int:
    _validate(r, s, c)
    g = gcd(c.p, r)
    total = abs(c.p) * chi_old + abs(c.p * s - c.q * r) * (1 - abs(c.p))
    if total % g:
        raise AssertionError(f"cable Euler characteristic {total}/{g} is not integral")
    return total // g


def cable_order(r: int, p: int) -> int:
    if p == 0:
        raise CablingError("p must be nonzero")
    return r // gcd(p, r)


def cable_multiplicity(r: int, s: int, c: CableParams) -> int:
    _validate(r, s, c)
    g = gcd(c.p, r)
    num = abs(c.p * (r * c.q - s * c.p))
    den = g * gcd(c.p, c.q)
    if num % den:
        raise AssertionError(f"multiplicity term {num}/{den} is not integral")
    return gcd(r // g, num // den)


def is_positive_cable(r: int, s: int, c: CableParams) -> bool:
    _validate(r, s, c)
    n = c.normalized()
    # q/p > s/r with p, r > 0
    return n.q * r > s * n.p


def cable_sl(sl: Fraction, r: int, s: int, c: CableParams) -> Fraction:
    """Self-linking of a positive transverse cable w.r.t. the assembled surface.

    The value is the signed singularity count of the assembled surface,
    i.e. the new order times the rational self-linking; it is an honest
    integer sl when the cable has order one.
    """
    if not is_positive_cable(r, s, c):
        raise CablingError(f"({c.p},{c.q}) is not a positive cable of the ({r},{s}) Seifert cable")
    g = gcd(r, c.p)
    return (abs(c.p) * r * Fraction(sl) + abs(r * c.q - s * c.p) * (abs(c.p) - 1)) / g


def integral_resolution(r: int, s: int, l: int) -> Resolution:
    """(r, l)-resolution of one binding component approached as an (r, s)-curve."""
    if r < 1:
        raise CablingError(f"order must be >= 1, got {r}")
    if l == s:
        raise CablingError("resolution coefficient must differ from the Seifert slope")
    return Resolution(
        components=gcd(r, l),
        order=1,
        multiplicity=1,
        chi_delta=abs(s - l) * (1 - r),
        positive=l > s,
    )


def _check_link_lists(r: int, s: Sequence[int], q: Sequence[int]) -> None:
    if r < 1:
        raise CablingError(f"order must be >= 1, got {r}")
    if len(s) != len(q) or not s:
        raise CablingError("slopes and coefficients must be nonempty lists of equal length")
    for si, qi in zip(s, q):
        if si == qi:
            raise CablingError(f"coefficient {qi} equals its Seifert slope")


def link_resolution_chi(chi: int, r: int, s: Sequence[int], q: Sequence[int]) -> int:
    _check_link_lists(r, s, q)
    return chi + (1 - r) * sum(abs(si - qi) for si, qi in zip(s, q))


def link_resolution_sl(sl: Fraction, r: int, s: Sequence[int], q: Sequence[int]) -> Fraction:
    _check_link_lists(r, s, q)
    if any(qi <= si for si, qi in zip(s, q)):
        raise CablingError("resolution is not positive")
    return r * Fraction(sl) + (r - 1) * sum(abs(si - qi) for si, qi in zip(s, q))


def assembled_chi(chi_old: int, r: int, s: int, c: CableParams) -> int:
    """Euler characteristic of the assembled surface, for any cable."""
    a = assembly_count(r, s, c)
    return a.surface_copies * chi_old + a.meridian_disks - a.bands


def assembly_oracle(
    chi_old: int,
    counts_old: SingularityCounts,
    r: int,
    s: int,
    c: CableParams,
) -> tuple[int, SingularityCounts]:
    """Euler characteristic and singularity counts of the assembled cable surface.

    Each surface copy carries the old singular points, each meridian disk one
    positive elliptic point and each band one positive hyperbolic point.
    """
    if not poincare_hopf_check(chi_old, counts_old):
        raise CablingError(f"counts {counts_old} do not have index sum {chi_old}")
    if not is_positive_cable(r, s, c):
        raise CablingError(f"({c.p},{c.q}) is not a positive cable of the ({r},{s}) Seifert cable")
    a = assembly_count(r, s, c)
    counts = counts_old.scaled(a.surface_copies) + SingularityCounts(
        e_plus=a.meridian_disks, h_plus=a.bands
    )
    return assembled_chi(chi_old, r, s, c), counts
