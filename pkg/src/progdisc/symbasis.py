"""Symmetric-register bases of the two mean input states.

Registers A and C hold ``n`` program copies each, register B holds ``m`` data
copies.  ``rho_1`` is supported on H1, spanned by ``|e_j>_{AB} |e_k>_C``;
``rho_2`` on H2, spanned by ``|e_j>_A |e_k>_{BC}``.  Each such vector expands
into product terms ``|e_n1>_A |e_n2>_B |e_n3>_C`` ("brackets") with positive
rational squared coefficients, which is all the exact code ever stores.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property

from progdisc.exactnum import SqrtRational, binomial


class Side(str, Enum):
    H1 = "H1"
    H2 = "H2"


@dataclass(frozen=True)
class ProblemSize:
    """``n`` program copies in each of A and C, ``m`` data copies in B."""

    n: int
    m: int

    def __post_init__(self):
        for name in ("n", "m"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")

    @property
    def D(self) -> int:
        """Dimension of each of H1 and H2."""
        return (self.n + 1) * (self.n + self.m + 1)

    @property
    def dim_total(self) -> int:
        n, m = self.n, self.m
        return 2 * n * n + 2 * n * m + 2 * n + m + 1

    @property
    def dim_intersection(self) -> int:
        return 2 * self.n + self.m + 1

    @property
    def N_max(self) -> int:
        return 2 * self.n + self.m


def _split_coeff(n: int, m: int, i: int, j: int) -> Fraction:
    return Fraction(binomial(n, i) * binomial(m, j), binomial(n + m, i + j))


def split_symmetric(k: int, size: ProblemSize) -> list[tuple[int, int, Fraction]]:
    """Expand |e_k> of n+m qubits into |e_i>|e_j> of n and m qubits.

    Returns ``(i, j, amp_sq)`` for every admissible ``i + j == k`` in
    increasing ``i``; the squared amplitudes sum to one.
    """
    n, m = size.n, size.m
    if not 0 <= k <= n + m:
        raise ValueError(f"k={k} outside [0, {n + m}]")
    return [(i, k - i, _split_coeff(n, m, i, k - i)) for i in range(max(0, k - m), min(n, k) + 1)]


@dataclass(frozen=True)
class BracketTerm:
    n1: int
    n2: int
    n3: int
    coeff_sq_v: Fraction
    coeff_sq_vp: Fraction

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.n1, self.n2, self.n3)

    @property
    def N(self) -> int:
        return self.n1 + self.n2 + self.n3

    def __str__(self) -> str:
        return f"[{self.n1},{self.n2},{self.n3}]"


def bracket(n1: int, n2: int, n3: int, size: ProblemSize) -> BracketTerm:
    n, m = size.n, size.m
    if not (0 <= n1 <= n and 0 <= n2 <= m and 0 <= n3 <= n):
        raise ValueError(f"bracket [{n1},{n2},{n3}] out of range for n={n}, m={m}")
    return BracketTerm(n1, n2, n3, _split_coeff(n, m, n1, n2), _split_coeff(n, m, n3, n2))


@dataclass(frozen=True)
class BasisVector:
    side: Side
    terms: tuple[BracketTerm, ...]
    fixed_index: int

    @property
    def N(self) -> int:
        return self.terms[0].N

    @cached_property
    def coefficients(self) -> dict[tuple[int, int, int], Fraction]:
        """Squared coefficient of every bracket this vector carries."""
        if self.side is Side.H1:
            return {t.key: t.coeff_sq_v for t in self.terms}
        return {t.key: t.coeff_sq_vp for t in self.terms}

    @property
    def jk(self) -> tuple[int, int]:
        """The ``(j, k)`` register labels this vector was built from."""
        t = self.terms[0]
        if self.side is Side.H1:
            return (t.n1 + t.n2, t.n3)
        return (t.n1, t.n2 + t.n3)

    def norm_sq(self) -> Fraction:
        return sum(self.coefficients.values(), Fraction(0))

    def __str__(self) -> str:
        return "+".join(str(t) for t in self.terms)


def basis_vector(side: Side | str, j: int, k: int, size: ProblemSize) -> BasisVector:
    """Bracket expansion of ``|e_j>_{AB}|e_k>_C`` (H1) or ``|e_j>_A|e_k>_{BC}`` (H2)."""
    side = Side(side)
    n, m = size.n, size.m
    if side is Side.H1:
        if not (0 <= j <= n + m and 0 <= k <= n):
            raise ValueError(f"H1 index (j={j}, k={k}) out of range")
        terms = tuple(bracket(i1, i2, k, size) for i1, i2, _ in split_symmetric(j, size))
        return BasisVector(side, terms, k)
    if not (0 <= j <= n and 0 <= k <= n + m):
        raise ValueError(f"H2 index (j={j}, k={k}) out of range")
    # split |e_k>_{BC} as |e_i2>_B |e_i3>_C, increasing n3
    terms = tuple(bracket(j, i2, i3, size) for i3, i2, _ in split_symmetric(k, size))
    return BasisVector(side, terms, j)


def all_basis_vectors(side: Side | str, size: ProblemSize) -> list[BasisVector]:
    side = Side(side)
    n, m = size.n, size.m
    if side is Side.H1:
        return [basis_vector(side, j, k, size) for j in range(n + m + 1) for k in range(n + 1)]
    return [basis_vector(side, j, k, size) for j in range(n + 1) for k in range(n + m + 1)]


def overlap(v: BasisVector, vp: BasisVector) -> SqrtRational:
    """Exact ``<v|v'>`` for an H1 vector ``v`` and an H2 vector ``vp``.

    Two such vectors share at most one bracket: ``v`` fixes n3, ``vp`` fixes
    n1, and the common N then fixes n2.
    """
    if v.side is not Side.H1 or vp.side is not Side.H2:
        raise ValueError("overlap expects an H1 vector and an H2 vector")
    shared = v.coefficients.keys() & vp.coefficients.keys()
    assert len(shared) <= 1, shared
    if not shared:
        return SqrtRational.zero()
    (key,) = shared
    return SqrtRational.sqrt_of(v.coefficients[key] * vp.coefficients[key])


def same_side_overlap(a: BasisVector, b: BasisVector) -> SqrtRational:
    """``<a|b>`` for two vectors on the same side; used for orthonormality checks."""
    if a.side is not b.side:
        raise ValueError("vectors lie on different sides")
    shared = a.coefficients.keys() & b.coefficients.keys()
    if not shared:
        return SqrtRational.zero()
    if a.jk != b.jk:
        # distinct (j, k) within one side never share a bracket
        raise AssertionError(f"unexpected shared brackets {shared}")
    return SqrtRational.from_rational(sum((a.coefficients[key] for key in shared), Fraction(0)))
