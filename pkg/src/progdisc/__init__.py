"""Exact optimal discrimination of unknown qubits by programmable devices.

``n`` copies of each unknown qubit sit in two program registers and ``m``
copies of one of them in a data register.  The package builds the closed
basis-vector chains of the two averaged input states, their Jordan inner
products, and from those the optimal unambiguous and minimum-error
probabilities, with a dense numerical oracle for every quantity.
"""

from progdisc.chains import (
    ChainPair,
    InvariantTable,
    build_chain_pair,
    chain_size,
    invariant_from_gram,
    invariant_S,
    invariant_table,
    verify_mirror,
)
from progdisc.discrim import (
    DiscriminationReport,
    Priors,
    k_series,
    min_error,
    q_pair_opt,
    report,
    unambiguous,
    validity_interval,
)
from progdisc.exactnum import SqrtRational, binomial, vandermonde_check
from progdisc.jordan import (
    JordanSpectrum,
    jordan_numeric,
    kappa_closed,
    kappa_from_invariants,
    multiplicity,
    spectrum,
    two_chain_rotation,
)
from progdisc.symbasis import BasisVector, BracketTerm, ProblemSize, Side, basis_vector, overlap, split_symmetric

__version__ = "0.1.0"

__all__ = [
    "BasisVector",
    "BracketTerm",
    "ChainPair",
    "DiscriminationReport",
    "InvariantTable",
    "JordanSpectrum",
    "Priors",
    "ProblemSize",
    "Side",
    "SqrtRational",
    "basis_vector",
    "binomial",
    "build_chain_pair",
    "chain_size",
    "invariant_S",
    "invariant_from_gram",
    "invariant_table",
    "jordan_numeric",
    "k_series",
    "kappa_closed",
    "kappa_from_invariants",
    "min_error",
    "multiplicity",
    "overlap",
    "q_pair_opt",
    "report",
    "spectrum",
    "split_symmetric",
    "two_chain_rotation",
    "unambiguous",
    "validity_interval",
    "vandermonde_check",
    "verify_mirror",
]
