"""
Cross-checking against dense matrices
=====================================

Compares the closed-form spectrum and Helstrom error with dense linear
algebra, then averages random pure inputs to approach the mean state.
"""

import numpy as np

from progdisc.discrim import min_error
from progdisc.jordan import spectrum
from progdisc.oracle import global_jordan_svd, helstrom_numeric, rho_exact, rho_montecarlo
from progdisc.symbasis import ProblemSize

size = ProblemSize(2, 2)

# principal-angle cosines between the two supports
sv = global_jordan_svd(size)
print("max |svd - closed form| =", np.max(np.abs(sv - spectrum(size).abs_multiset())))

# trace norm of the weighted difference against the closed form
for eta in (0.1, 0.3, 0.5):
    print(f"eta={eta}: dense {helstrom_numeric(size, eta):.12f}  closed {min_error(size, eta):.12f}")

# sampling error shrinks like one over the square root of the sample count
small = ProblemSize(1, 1)
exact = rho_exact(1, small)
for samples in (10_000, 100_000, 1_000_000):
    err = np.max(np.abs(rho_montecarlo(1, small, samples, seed=7) - exact))
    print(f"{samples:>9d} samples: max entry error {err:.2e}")
