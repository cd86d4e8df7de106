"""Compare the ring distance bound against the two classical baselines.

For a domain omitting 0 and a sequence a_1, a_2, ... with log-moduli
gaps at most c, the hyperbolic distance between circles |z| = r1 and
|z| = r2 grows at least like A log(r2/r1) - B.  Three slopes compete:

    phi(c)/c      the bound proved here
    h(c/2)        the slope via the worst single annulus
    log(1+c/2C0)/c  the slope from the classical two-point estimate

The table shows where each wins; none dominates everywhere.
"""

import math

from punctmetric import baseline_bounds, ring_coefficients, ring_gap

print(f"{'c':>10} {'phi(c)/c':>12} {'h(c/2)':>12} {'bp':>12} {'best':>6}")
for c in (math.log(2.0) / 1024, 0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0):
    rc = ring_coefficients(c)
    bl = baseline_bounds(c)
    slopes = {"ours": rc.A, "sv": bl.sv512_A, "bp": bl.bp_A}
    best = max(slopes, key=slopes.get)
    print(f"{c:10.6f} {rc.A:12.9f} {bl.sv512_A:12.9f} "
          f"{bl.bp_A:12.9f} {best:>6}")
print()

# a concrete sequence: powers of two, measured gap log 2
pts = (0.0, 1.0, 2.0, 4.0, 8.0, 16.0)
c = ring_gap(pts)
rc = ring_coefficients(c)
print(f"punctures {pts}: gap c = {c:.6f}")
print(f"  distance(|z|=1, |z|=1024) >= {rc.A * math.log(1024) - rc.B:.6f}")
print(f"  (A = {rc.A:.9f}, B = {rc.B:.9f})")
