"""Dense floating-point cross-checks.

Everything here works in the product of the three symmetric subspaces,
coordinates ``(i_A, i_B, i_C)`` with ``i_A, i_C <= n`` and ``i_B <= m``, and
never touches the exact modules except to read basis-vector brackets.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import comb

from progdisc.discrim import Priors, _as_priors
from progdisc.symbasis import BasisVector, ProblemSize, Side, all_basis_vectors

#: Monte-Carlo samples are generated and accumulated in batches of this size.
BATCH = 50_000


def dense_dim(size: ProblemSize) -> int:
    return (size.n + 1) * (size.m + 1) * (size.n + 1)


def _flat(size: ProblemSize, n1: int, n2: int, n3: int) -> int:
    return (n1 * (size.m + 1) + n2) * (size.n + 1) + n3


def embed_basis_vector(v: BasisVector, size: ProblemSize) -> np.ndarray:
    out = np.zeros(dense_dim(size))
    for (n1, n2, n3), c in v.coefficients.items():
        out[_flat(size, n1, n2, n3)] = math.sqrt(c)
    return out


def basis_matrix(side: Side | str, size: ProblemSize) -> np.ndarray:
    """Columns are the embedded basis vectors of one side."""
    return np.column_stack([embed_basis_vector(v, size) for v in all_basis_vectors(side, size)])


def rho_exact(side: int, size: ProblemSize) -> np.ndarray:
    V = basis_matrix(Side.H1 if side == 1 else Side.H2, size)
    return V @ V.T / size.D


def swap_ac(rho: np.ndarray, size: ProblemSize) -> np.ndarray:
    """Exchange registers A and C."""
    d = (size.n + 1, size.m + 1, size.n + 1)
    t = rho.reshape(d + d).transpose(2, 1, 0, 5, 4, 3)
    return t.reshape(rho.shape)


def _register_amplitudes(r: int, theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """Symmetric-basis amplitudes of ``r`` copies of each sampled qubit, shape (S, r+1)."""
    k = np.arange(r + 1)
    c = np.cos(theta / 2)[:, None]
    s = np.sin(theta / 2)[:, None]
    return c ** (r - k) * s**k * np.exp(1j * k * phi[:, None]) * np.sqrt(comb(r, k))


def _sample_batch(side: int, size: ProblemSize, count: int, rng: np.random.Generator) -> np.ndarray:
    """Return the (complex) sum of ``count`` sampled input projectors."""
    cos1, cos2 = rng.uniform(-1.0, 1.0, size=(2, count))
    phi1, phi2 = rng.uniform(0.0, 2 * np.pi, size=(2, count))
    theta1, theta2 = np.arccos(cos1), np.arccos(cos2)
    n, m = size.n, size.m
    a = _register_amplitudes(n, theta1, phi1)
    c = _register_amplitudes(n, theta2, phi2)
    if side == 1:
        b = _register_amplitudes(m, theta1, phi1)
    else:
        b = _register_amplitudes(m, theta2, phi2)
    psi = np.einsum("si,sj,sk->sijk", a, b, c).reshape(count, -1)
    return psi.T @ psi.conj()


def rho_montecarlo(side: int, size: ProblemSize, samples: int, seed: int) -> np.ndarray:
    """Sample average of the input projector for unknown qubits uniform on the Bloch sphere.

    Batch ``b`` draws from ``Philox`` keyed by ``SeedSequence([seed, b])``, and
    batches are summed in index order, so the result depends only on
    ``(seed, samples)``.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    total = np.zeros((dense_dim(size),) * 2, dtype=complex)
    for b, start in enumerate(range(0, samples, BATCH)):
        rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, b])))
        total += _sample_batch(side, size, min(BATCH, samples - start), rng)
    return total / samples


def cross_gram(size: ProblemSize) -> np.ndarray:
    return basis_matrix(Side.H1, size).T @ basis_matrix(Side.H2, size)


def global_jordan_svd(size: ProblemSize) -> np.ndarray:
    """Singular values of the full D x D cross-Gram, descending."""
    return np.sort(np.linalg.svd(cross_gram(size), compute_uv=False))[::-1]


def helstrom_numeric(size: ProblemSize, priors: Priors | float) -> float:
    priors = _as_priors(priors)
    lam = float(priors.eta2) * rho_exact(2, size) - float(priors.eta1) * rho_exact(1, size)
    return 0.5 * (1.0 - np.abs(np.linalg.eigvalsh(lam)).sum())
