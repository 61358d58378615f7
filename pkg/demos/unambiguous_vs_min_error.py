"""
Unambiguous and minimum-error discrimination
============================================

Tabulates the inconclusive probability of the optimal unambiguous scheme
next to the Helstrom error over the prior, for a few register sizes.
"""

from fractions import Fraction

import numpy as np

from progdisc import ProblemSize, min_error, report, unambiguous, validity_interval

# equal priors give exact rationals
for n in range(1, 6):
    print(f"n={n}, m=1: P(1/2) = {unambiguous(ProblemSize(n, 1), Fraction(1, 2))[1]}")

size = ProblemSize(2, 3)
lo, hi = validity_interval(size)
print(f"\nn=2, m=3 validity interval [{lo}, {hi}]")

# outside the interval the value is only a per-pair bound
print(f"{'eta':>6} {'Q_L':>10} {'P_E':>10} {'label':>15}")
for eta in np.linspace(0.0, 1.0, 11):
    rep = report(size, float(eta))
    print(f"{eta:6.2f} {float(rep.Q_L):10.6f} {rep.P_E:10.6f} {rep.label:>15}")

# more copies help both schemes
for c in (1, 5, 10, 20, 40):
    s = ProblemSize(c, c)
    print(f"n=m={c:2d}  P(1/2)={float(unambiguous(s, Fraction(1, 2))[1]):.4f}  P_E(1/2)={min_error(s, 0.5):.4f}")
