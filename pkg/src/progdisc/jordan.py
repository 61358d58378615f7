"""Jordan inner products between the supports of the two mean states.

Three routes to the same numbers:

* the closed product form ``kappa_closed``;
* the invariant recurrence ``S_k - S_{k-1}`` (``kappa_from_invariants``);
* numerics on each chain's cross-Gram matrix (``two_chain_rotation`` for
  two-element chains, ``jordan_numeric`` for any chain).

Because a mirror-symmetric Gram matrix ``G`` is rotated into
``T G T^T`` when one orthogonal ``T`` acts on both chains, the signed inner
products of a chain are the eigenvalues of ``G`` and their absolute values are
its singular values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

import numpy as np

from progdisc.chains import ChainPair, invariant_S
from progdisc.symbasis import ProblemSize


def _check_k(k: int, size: ProblemSize, lo: int = 0) -> None:
    if not lo <= k <= size.n:
        raise ValueError(f"k={k} outside [{lo}, {size.n}]")


def kappa_closed(k: int, size: ProblemSize) -> Fraction:
    """(-1)^k * n(n-1)...(n-k+1) / ((n+m)(n+m-1)...(n+m-k+1))."""
    _check_k(k, size)
    n, m = size.n, size.m
    num = math.prod(range(n - k + 1, n + 1))
    den = math.prod(range(n + m - k + 1, n + m + 1))
    return (-1) ** k * Fraction(num, den)


def kappa_from_invariants(k: int, size: ProblemSize) -> Fraction:
    _check_k(k, size, lo=1)
    return invariant_S(k, size) - invariant_S(k - 1, size)


def multiplicity(k: int, size: ProblemSize) -> int:
    _check_k(k, size)
    return 2 * size.n + size.m + 1 - 2 * k


@dataclass(frozen=True)
class JordanSpectrum:
    size: ProblemSize
    entries: tuple[tuple[Fraction, int], ...]

    @property
    def kappas(self) -> list[Fraction]:
        return [kappa for kappa, _ in self.entries]

    @property
    def multiplicities(self) -> list[int]:
        return [mult for _, mult in self.entries]

    def abs_multiset(self) -> np.ndarray:
        """All |kappa| repeated by multiplicity, descending."""
        values = [float(abs(kappa)) for kappa, mult in self.entries for _ in range(mult)]
        return np.array(sorted(values, reverse=True))

    def check(self) -> None:
        kappas = self.kappas
        assert kappas[0] == 1 and self.entries[0][1] == self.size.dim_intersection
        assert all(abs(a) > abs(b) for a, b in zip(kappas, kappas[1:]))
        assert all((kappa > 0) == (k % 2 == 0) for k, kappa in enumerate(kappas))
        assert sum(self.multiplicities) == self.size.D


@lru_cache(maxsize=256)
def spectrum(size: ProblemSize) -> JordanSpectrum:
    spec = JordanSpectrum(
        size, tuple((kappa_closed(k, size), multiplicity(k, size)) for k in range(size.n + 1))
    )
    spec.check()
    return spec


def two_chain_rotation(chain: ChainPair, atol: float = 1e-12) -> tuple[float, float]:
    """Rotate a two-element chain pair into Jordan form.

    Both chains get the same rotation by angle theta.  Requiring the rotated
    cross terms to vanish gives

        g12 t^2 + (g11 - g22) t - g12 = 0,   t = tan(theta),

    of which the root with the larger first inner product is kept.  Returns
    ``(kappa0, kappa1)``.
    """
    if chain.size_L != 2:
        raise ValueError(f"expected a two-element chain, got {chain.size_L}")
    g = chain.gram_float()
    g11, g12, g22 = g[0, 0], g[0, 1], g[1, 1]
    if g12 == 0.0:
        return float(g11), float(g22)

    disc = math.sqrt((g11 - g22) ** 2 + 4.0 * g12 * g12)
    best = None
    for t in ((-(g11 - g22) + disc) / (2.0 * g12), (-(g11 - g22) - disc) / (2.0 * g12)):
        c = 1.0 / math.sqrt(1.0 + t * t)
        s = t * c
        rot = np.array([[c, s], [-s, c]])
        jordan = rot @ g @ rot.T
        if best is None or jordan[0, 0] > best[0, 0]:
            best = jordan
    assert abs(best[0, 1]) < atol and abs(best[1, 0]) < atol, best
    return float(best[0, 0]), float(best[1, 1])


def jordan_numeric(chain: ChainPair) -> np.ndarray:
    """Singular values of the chain's cross-Gram matrix, descending, in [0, 1]."""
    sv = np.linalg.svd(chain.gram_float(), compute_uv=False)
    return np.clip(np.sort(sv)[::-1], 0.0, 1.0)


def chain_eigenvalues(chain: ChainPair) -> np.ndarray:
    """Signed Jordan inner products of one chain, by decreasing magnitude."""
    ev = np.linalg.eigvalsh(chain.gram_float())
    return ev[np.argsort(-np.abs(ev), kind="stable")]
