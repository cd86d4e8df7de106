"""Locate the peak of the weighted density 2(|t| + C0) h(t).

h(t) is the density of the twice-punctured plane along the negative
axis in logarithmic coordinates, and the weight compensates its decay.
The product stays below 1.25 everywhere; this script finds where it
comes closest, confirms the first-order condition at the peak, and
prints the sandwich margins that pin h between its two hyperbolas.
"""

import math

from punctmetric import metric, verify

c0 = metric.c0()
t0 = verify.find_t0()
peak = verify.max_weighted_h()

print(f"C0                 = {c0:.15f}")
print(f"t0 (zero of g)     = {t0:.12f}")
print(f"max 2(|t|+C0)h(t)  = {peak.max_value:.12f}   (< 1.25)")
print(f"slack below 1.25   = {1.25 - peak.max_value:.3e}")
print()

# the peak is where g(t) = H(t) - (t + C0) H'(t) changes sign
for t in (t0 - 0.5, t0, t0 + 0.5):
    g = metric.big_h(t) - (t + c0) * metric.big_h_prime(t)
    print(f"  g({t:8.5f}) = {g:+.6e}")
print()

print("sandwich 1/(t+C0) < 2h(t) < 1/(t+log 16):")
print(f"{'t':>8} {'1/(t+C0)':>14} {'2h(t)':>14} {'1/(t+log16)':>14}")
for t in (0.0, 0.5, t0, 5.0, 20.0, 80.0):
    print(f"{t:8.3f} {1/(t + c0):14.9f} {2*metric.h(t):14.9f} "
          f"{1/(t + math.log(16)):14.9f}")
