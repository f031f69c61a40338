"""Draw the Legendrian mountain ranges of rational unknots in L(5,1)."""
from ratknot.arith import format_rational
from ratknot.unknots import K1, MINUS_K1, euler_classes, mountain_range, sl_spectrum

p, depth = 5, 3
for l in euler_classes(p):
    for o in (K1, MINUS_K1):
        pts = mountain_range(p, l, o, depth)
        print(f"l={l:+d} {o}")
        for k in range(depth + 1):
            row = sorted(m.rot for m in pts if m.depth == k)
            tb = format_rational(next(m.tb for m in pts if m.depth == k))
            print(f"   tb={tb:>6}  rot: " + " ".join(format_rational(x) for x in row))
        print("   sl: " + " ".join(format_rational(x) for x in sl_spectrum(p, l, o, depth)))
