"""Build cable surfaces by hand and compare with the closed forms.

Copies of the old surface are joined to meridian disks by half-twisted
bands. Each disk adds a positive elliptic point and each band a positive
hyperbolic one, so the signed count of the assembled surface gives sl.
"""
from ratknot.cabling import CableParams, assembly_count, assembly_oracle, cable_chi, cable_sl
from ratknot.invariants import SingularityCounts, sl_from_counts

cases = [
    (2, 1, CableParams(2, 3)),
    (1, 0, CableParams(2, 1)),
    (3, 1, CableParams(2, 1)),
    (5, 0, CableParams(5, 1)),
    (4, 1, CableParams(6, 5)),
]
old = SingularityCounts(e_plus=1)  # a disk-like surface with one source
for r, s, c in cases:
    a = assembly_count(r, s, c)
    chi, new = assembly_oracle(1, old, r, s, c)
    sl = sl_from_counts(r, old)
    print(f"(r,s)=({r},{s}) cable {c.p},{c.q}: copies={a.surface_copies} disks={a.meridian_disks} bands={a.bands}")
    print(f"    chi: assembled {chi}, closed form {cable_chi(1, r, s, c)}")
    print(f"    sl:  signed count {new.signed_sum}, closed form {cable_sl(sl, r, s, c)}")
