"""
Chains and Jordan inner products
================================

Builds the closed chains for a small register layout, checks their mirror
ordering and reads off the signed inner products from each chain's Gram matrix.
"""

from progdisc.chains import all_chain_pairs, invariant_S, verify_mirror
from progdisc.jordan import chain_eigenvalues, spectrum
from progdisc.symbasis import ProblemSize

# four program copies per register, one data copy
size = ProblemSize(4, 1)
print(f"D = {size.D}, intersection dimension = {size.dim_intersection}")

# every chain, its length, the invariant and the numerical inner products
for chain in all_chain_pairs(size):
    kappas = ", ".join(f"{x:+.4f}" for x in chain_eigenvalues(chain))
    print(f"N={chain.N:2d}  L={chain.size_L}  mirror={verify_mirror(chain)}  S={invariant_S(chain.N, size)}  kappa=[{kappas}]")

# the same numbers in closed form
for k, (kappa, mult) in enumerate(spectrum(size).entries):
    print(f"k={k}  kappa={kappa}  multiplicity={mult}")
