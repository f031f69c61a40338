"""Oracle sweeps behind the hidden ``selftest`` CLI command."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import cabling, lens
from .invariants import canonical_counts, sl_from_counts


def dual_params_sweep(max_p: int) -> bool:
    for p in range(2, max_p + 1):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            d = lens.dual_params(lens.LensSpace(p, q))
            if p * d.q_dual - d.p_dual * q != 1 or (d.p_dual * q + 1) % p:
                return False
            if q == 1 and d.p_dual != p - 1:
                return False
    return True


def cable_grid(n: int) -> bool:
    for r in range(1, n + 1):
        for s in range(-n, n + 1):
            for p in [x for x in range(-n, n + 1) if abs(x) >= 2]:
                for q in range(-n, n + 1):
                    c = cabling.CableParams(p, q)
                    if q * r == s * p:
                        continue
                    for chi in (1, 0, -1, -3):
                        if cabling.cable_chi(chi, r, s, c) != cabling.assembled_chi(chi, r, s, c):
                            return False
                        if not cabling.is_positive_cable(r, s, c):
                            continue
                        counts = canonical_counts(chi)
                        _, new = cabling.assembly_oracle(chi, counts, r, s, c)
                        sl = sl_from_counts(r, counts)
                        if cabling.cable_sl(sl, r, s, c) != new.signed_sum:
                            return False
    return True


def resolution_grid(n: int) -> bool:
    for r in range(2, n + 1):
        for s in range(-n, n + 1):
            for l in range(-n, n + 1):
                if l == s:
                    continue
                c = cabling.CableParams(r, l)
                if cabling.link_resolution_chi(1, r, [s], [l]) != cabling.cable_chi(1, r, s, c):
                    return False
                if l > s:
                    sl = Fraction(-1, r)
                    if cabling.link_resolution_sl(sl, r, [s], [l]) != cabling.cable_sl(sl, r, s, c):
                        return False
    return True


def run(max_p: int = 100, grid: int = 6) -> dict[str, bool]:
    return {
        "dual_params": dual_params_sweep(max_p),
        "cable_oracle": cable_grid(grid),
        "resolution": resolution_grid(grid),
    }
