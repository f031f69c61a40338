"""Negative continued fractions and dual parameters of a few lens spaces.

The dual pair (p', q') solves p q' - p' q = 1 and fixes the largest
rational Thurston-Bennequin invariant -p'/p of the rational unknot.
"""
from ratknot import LensSpace
from ratknot.arith import format_rational
from ratknot.unknots import classify_unknots, max_tb

for p, q in [(2, 1), (5, 1), (5, 2), (5, 3), (7, 3), (13, 5)]:
    L = LensSpace(p, q)
    d = L.dual
    kinds = ", ".join(sorted(str(k) for k in classify_unknots(L)))
    print(
        f"L({p},{q})  ncf={L.ncf}  dual=({d.p_dual},{d.q_dual})  "
        f"max tb={format_rational(max_tb(L))}  unknots: {kinds}"
    )
