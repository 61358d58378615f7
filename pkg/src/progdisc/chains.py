"""Closed basis-vector chains and their rotation invariants.

For a fixed ``N = n1 + n2 + n3`` the H1 vectors (one per value of n3) and the
H2 vectors (one per value of n1) carrying brackets of that ``N`` only overlap
among themselves.  Their overlap has the closed form

    <v(a)|v'(b)> = sqrt(c1(b, N-a-b) * c1(a, N-a-b))

with ``c1(x, y) = C(n,x) C(m,y) / C(n+m,x+y)``, which is symmetric under
``a <-> b``.  Listing both sides in the same order of fixed index therefore
gives a mirror-symmetric Gram matrix.  The order itself follows the pairing
walk: start from the lowest n3, and visit the partners ``[l3,l2,l1]`` of each
bracket ``[l1,l2,l3]`` by decreasing ``l1``.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from progdisc.exactnum import SqrtRational, binomial
from progdisc.symbasis import BasisVector, ProblemSize, Side, basis_vector, overlap


def _check_N(N: int, size: ProblemSize) -> None:
    if not 0 <= N <= size.N_max:
        raise ValueError(f"N={N} outside [0, {size.N_max}]")


def chain_size(N: int, size: ProblemSize) -> int:
    _check_N(N, size)
    return min(N, size.N_max - N, size.n) + 1


def fixed_index_range(N: int, size: ProblemSize) -> range:
    """Admissible n3 of H1 vectors (equivalently n1 of H2 vectors) at this N."""
    _check_N(N, size)
    return range(max(0, N - size.n - size.m), min(size.n, N) + 1)


def chain_vector(side: Side | str, N: int, a: int, size: ProblemSize) -> BasisVector:
    """The vector of the N-chain whose fixed index (n3 for H1, n1 for H2) is ``a``."""
    if Side(side) is Side.H1:
        return basis_vector(Side.H1, N - a, a, size)
    return basis_vector(Side.H2, a, N - a, size)


@dataclass(frozen=True)
class ChainPair:
    N: int
    size: ProblemSize
    elements_v: tuple[BasisVector, ...]
    elements_vp: tuple[BasisVector, ...]
    gram: tuple[tuple[SqrtRational, ...], ...]

    @property
    def size_L(self) -> int:
        return len(self.elements_v)

    @classmethod
    def from_elements(
        cls, N: int, size: ProblemSize, elements_v: Sequence[BasisVector], elements_vp: Sequence[BasisVector]
    ) -> ChainPair:
        if len(elements_v) != len(elements_vp):
            raise ValueError("chains of unequal length")
        gram = tuple(tuple(overlap(v, vp) for vp in elements_vp) for v in elements_v)
        return cls(N, size, tuple(elements_v), tuple(elements_vp), gram)

    def order(self) -> tuple[int, ...]:
        return tuple(v.fixed_index for v in self.elements_v)

    def gram_float(self):
        import numpy as np

        return np.array([[float(g) for g in row] for row in self.gram])


def mirror_order(N: int, size: ProblemSize) -> list[int]:
    """Fixed-index sequence produced by the pairing walk."""
    admissible = fixed_index_range(N, size)
    start = admissible.start
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        a = queue.popleft()
        v = chain_vector(Side.H1, N, a, size)
        # bracket [l1,l2,a] of v(a) pairs with v'(l1), whose mirror is v(l1)
        for l1 in sorted((t.n1 for t in v.terms), reverse=True):
            if l1 not in seen:
                seen.add(l1)
                order.append(l1)
                queue.append(l1)
    if sorted(order) != list(admissible):
        raise AssertionError(f"chain N={N} is not closed under pairing: {order}")
    return order


def build_chain_pair(N: int, size: ProblemSize, order: Sequence[int] | None = None) -> ChainPair:
    """Mirror-symmetric pair of closed chains for total index ``N``.

    ``order`` overrides the canonical fixed-index sequence; it must be a
    permutation of the admissible indices and is applied to both chains.
    """
    if order is None:
        order = mirror_order(N, size)
    elif sorted(order) != list(fixed_index_range(N, size)):
        raise ValueError(f"order {order} is not a permutation of the N={N} chain indices")
    chain = ChainPair.from_elements(
        N,
        size,
        [chain_vector(Side.H1, N, a, size) for a in order],
        [chain_vector(Side.H2, N, a, size) for a in order],
    )
    assert verify_mirror(chain), f"mirror symmetry failed for N={N}"
    return chain


def all_chain_pairs(size: ProblemSize) -> list[ChainPair]:
    return [build_chain_pair(N, size) for N in range(size.N_max + 1)]


def verify_mirror(chain: ChainPair) -> bool:
    g = chain.gram
    L = len(g)
    return all(g[i][j] == g[j][i] for i in range(L) for j in range(i + 1, L))


def invariant_S(N: int, size: ProblemSize) -> Fraction:
    """Sum of the squared coefficients of the self-mirrored brackets [i,j,i]."""
    _check_N(N, size)
    n, m = size.n, size.m
    total = Fraction(0)
    for i in range(min(n, N // 2) + 1):
        j = N - 2 * i
        if 0 <= j <= m:
            total += Fraction(binomial(n, i) * binomial(m, j), binomial(n + m, i + j))
    return total


def invariant_from_gram(chain: ChainPair) -> Fraction:
    """Trace of the chain's cross-Gram matrix, exactly."""
    total = Fraction(0)
    for i, row in enumerate(chain.gram):
        g = row[i]
        assert g.is_rational(), f"irrational diagonal entry {g} at {i}"
        total += g.to_fraction()
    return total


@dataclass(frozen=True)
class InvariantTable:
    values: dict[int, Fraction]


def invariant_table(size: ProblemSize) -> InvariantTable:
    return InvariantTable({N: invariant_S(N, size) for N in range(size.N_max + 1)})


def chain_pair_to_dict(chain: ChainPair) -> dict:
    def vec(v: BasisVector) -> dict:
        return {
            "fixed_index": v.fixed_index,
            "jk": list(v.jk),
            "terms": [
                {"bracket": list(key), "coeff_sq": str(c)} for key, c in v.coefficients.items()
            ],
        }

    return {
        "N": chain.N,
        "size_L": chain.size_L,
        "elements_v": [vec(v) for v in chain.elements_v],
        "elements_vp": [vec(v) for v in chain.elements_vp],
        "gram": [[{"sign": g.sign, "square": str(g.square), "float": float(g)} for g in row] for row in chain.gram],
        "mirror": verify_mirror(chain),
        "invariant": str(invariant_from_gram(chain)),
    }
