"""Rational unknots in lens spaces and their Legendrian/transverse spectra.

The rational unknots of L(p, q) are the Heegaard cores K0, K1 with both
orientations. Their maximal rational Thurston-Bennequin invariant is
-p'/p. For L(p, 1) with p odd each tight structure is labelled by an
Euler class value l, and the realized invariants are

    tb  = -(p-1)/p - k                       (k >= 0)
    rot = +-l/p + k - 2m                     (0 <= m <= k)
    sl  = -(p +- l - 1)/p - 2k               (k >= 0)

with the upper sign for K1 and the lower one for -K1. The ranges are
infinite, so every enumeration takes a stabilization depth.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .invariants import (
    LegendrianRecord,
    SeifertData,
    legendrian_stabilize,
    transverse_pushoff,
    transverse_stabilize,
)
from .lens import LensSpace, dual_params


class UnsupportedError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class UnknotType:
    core: str  # "K0" or "K1"
    orientation: str  # "+" or "-"

    def __str__(self) -> str:
        return self.core if self.orientation == "+" else f"-{self.core}"

    @classmethod
    def parse(cls, text: str) -> "UnknotType":
        orientation = "-" if text.startswith("-") else "+"
        core = text.lstrip("+-")
        if core not in ("K0", "K1"):
            raise ValueError(f"unknot type must be one of K0, -K0, K1, -K1, got {text!r}")
        return cls(core, orientation)


K1 = UnknotType("K1", "+")
MINUS_K1 = UnknotType("K1", "-")


@dataclass(frozen=True, order=True)
class MountainPoint:
    tb: Fraction
    rot: Fraction
    depth: int
    split: int


def classify_unknots(L: LensSpace) -> frozenset[UnknotType]:
    if L.p == 2:
        return frozenset({K1})
    if L.q == 1 or L.q == L.p - 1:
        return frozenset({K1, MINUS_K1})
    return frozenset(UnknotType(c, o) for c in ("K0", "K1") for o in "+-")


def max_tb(L: LensSpace) -> Fraction:
    return Fraction(-dual_params(L).p_dual, L.p)


def euler_classes(p: int) -> list[int]:
    """Euler class values l of the tight structures on L(p, 1), p odd."""
    if p < 3 or p % 2 == 0:
        raise UnsupportedError(f"Euler classes are only tabulated for odd p >= 3, got p={p}")
    return [p - 2 - 2 * k for k in range(p - 1)]


def _orient_sign(orient) -> int:
    if isinstance(orient, str):
        orient = UnknotType.parse(orient)
    if orient.core != "K1":
        raise UnsupportedError("spectra are only available for K1 and -K1 in L(p, 1)")
    return 1 if orient.orientation == "+" else -1


def _check_class(p: int, l: int) -> None:
    if l not in euler_classes(p):
        raise UnsupportedError(f"l={l} is not an Euler class of a tight structure on L({p},1)")


def peak(p: int, l: int, orient=K1) -> LegendrianRecord:
    """The unique maximal-tb Legendrian representative."""
    sign = _orient_sign(orient)
    _check_class(p, l)
    tb = max_tb(LensSpace(p, 1))
    return LegendrianRecord(SeifertData(order=p, boundary_slope=0, euler_char=1), tb, Fraction(sign * l, p))


def mountain_range(p: int, l: int, orient=K1, depth: int = 8) -> frozenset[MountainPoint]:
    """All realized (tb, rot) with at most ``depth`` stabilizations, closed form."""
    sign = _orient_sign(orient)
    _check_class(p, l)
    if depth < 0:
        raise ValueError("depth must be >= 0")
    top = Fraction(-(p - 1), p)
    rot0 = Fraction(sign * l, p)
    return frozenset(
        MountainPoint(top - k, rot0 + k - 2 * m, k, m)
        for k in range(depth + 1)
        for m in range(k + 1)
    )


def mountain_by_stabilization(p: int, l: int, orient=K1, depth: int = 8) -> frozenset[MountainPoint]:
    """Same set as :func:`mountain_range`, built by stabilizing the peak."""
    start = peak(p, l, orient)
    layer = {(start.tb, start.rot): start}
    points = {MountainPoint(start.tb, start.rot, 0, 0)}
    for k in range(1, depth + 1):
        nxt = {}
        for rec in layer.values():
            for sgn in "+-":
                s = legendrian_stabilize(rec, sgn)
                nxt[s.tb, s.rot] = s
        for s in nxt.values():
            m = int(start.rot + k - s.rot) // 2
            points.add(MountainPoint(s.tb, s.rot, k, m))
        layer = nxt
    return frozenset(points)


def sl_spectrum(p: int, l: int, orient=K1, depth: int = 8) -> list[Fraction]:
    """Realized rational self-linking numbers, top value first."""
    sign = _orient_sign(orient)
    _check_class(p, l)
    if depth < 0:
        raise ValueError("depth must be >= 0")
    top = Fraction(-(p + sign * l - 1), p)
    return [top - 2 * k for k in range(depth + 1)]


def sl_by_pushoff(p: int, l: int, orient=K1, depth: int = 8) -> list[Fraction]:
    """Push off the negative-stabilization spine, then stabilize transversely."""
    rec = peak(p, l, orient)
    spine = [transverse_pushoff(rec)]
    for _ in range(depth):
        rec = legendrian_stabilize(rec, "-")
        spine.append(transverse_pushoff(rec))
    if len({t.sl for t in spine}) != 1:
        raise AssertionError("negative stabilization changed the self-linking number")
    t = spine[0]
    values = [t.sl]
    for _ in range(depth):
        t = transverse_stabilize(t)
        values.append(t.sl)
    return values
