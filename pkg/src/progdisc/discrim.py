"""Optimal unambiguous and minimum-error discrimination of the mean states.

Both mean states are uniform mixtures over their D-dimensional supports, so
every Jordan pair carries weight ``alpha = beta = 1/D``.  Priors may be given
as :class:`~fractions.Fraction` (exact results wherever the formulas stay
rational) or as ``float``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from progdisc.exactnum import exact_sqrt, is_square
from progdisc.jordan import JordanSpectrum, spectrum
from progdisc.symbasis import ProblemSize

Number = Union[Fraction, float]


@dataclass(frozen=True)
class Priors:
    """``eta1`` is the prior of rho_1, ``eta2 = 1 - eta1`` that of rho_2."""

    eta1: Number

    def __post_init__(self):
        eta = self.eta1
        if isinstance(eta, int) and not isinstance(eta, bool):
            eta = Fraction(eta)
            object.__setattr__(self, "eta1", eta)
        if not isinstance(eta, (Fraction, float)) or not 0 <= eta <= 1:
            raise ValueError(f"prior must be a number in [0, 1], got {eta!r}")

    @property
    def eta2(self) -> Number:
        return 1 - self.eta1

    @property
    def c(self) -> Number:
        return self.eta2 - self.eta1

    @property
    def exact(self) -> bool:
        return isinstance(self.eta1, Fraction)


def _as_priors(priors: Priors | Number) -> Priors:
    return priors if isinstance(priors, Priors) else Priors(priors)


def _sqrt(x: Number) -> Number:
    if isinstance(x, Fraction) and is_square(x):
        return exact_sqrt(x)
    return math.sqrt(x)


def validity_interval(size: ProblemSize) -> tuple[Fraction, Fraction]:
    n2, nm2 = size.n**2, (size.n + size.m) ** 2
    return Fraction(n2, nm2 + n2), Fraction(nm2, nm2 + n2)


def q_pair_opt(kappa: Number, priors: Priors | Number, alpha: Number, beta: Number) -> tuple[Number, str]:
    """Optimal failure probability of one Jordan pair and the branch taken.

    The middle branch ``2 sqrt(eta (1-eta) alpha beta) |kappa|`` applies on
    ``[c, d]`` with ``c = beta k^2/(alpha + beta k^2)`` and
    ``d = beta/(beta + alpha k^2)``; outside it one of the two states is
    never identified.
    """
    eta = _as_priors(priors).eta1
    k2 = kappa * kappa
    lo = beta * k2 / (alpha + beta * k2)
    hi = beta / (beta + alpha * k2)
    if eta <= lo:
        return eta * alpha + (1 - eta) * beta * k2, "left"
    if eta <= hi:
        return 2 * _sqrt(eta * (1 - eta) * alpha * beta) * abs(kappa), "middle"
    return eta * alpha * k2 + (1 - eta) * beta, "right"


@dataclass(frozen=True)
class PairResult:
    k: int
    kappa: Fraction
    multiplicity: int
    branch: str
    q: Number


def _pairs(size: ProblemSize, priors: Priors, spec: JordanSpectrum | None = None) -> list[PairResult]:
    spec = spec or spectrum(size)
    weight = Fraction(1, size.D)
    if not priors.exact:
        weight = float(weight)
    out = []
    for k, (kappa, mult) in enumerate(spec.entries):
        q, branch = q_pair_opt(kappa if priors.exact else float(kappa), priors, weight, weight)
        out.append(PairResult(k, kappa, mult, branch, q))
    return out


def in_validity(size: ProblemSize, priors: Priors | Number) -> bool:
    lo, hi = validity_interval(size)
    return lo <= _as_priors(priors).eta1 <= hi


def unambiguous(size: ProblemSize, priors: Priors | Number) -> tuple[Number, Number, bool]:
    """Return ``(Q_L, P, eta_in_validity)``.

    ``Q_L`` sums every Jordan pair's optimum, the intersection pairs
    included.  Outside the validity interval the pairwise optima need not
    assemble into one POVM, so the result there is a per-pair bound.
    """
    priors = _as_priors(priors)
    q_total = sum(p.multiplicity * p.q for p in _pairs(size, priors))
    return q_total, 1 - q_total, in_validity(size, priors)


def success_validity_form(size: ProblemSize, priors: Priors | Number) -> Number:
    """Closed-form success probability, valid inside the validity interval."""
    priors = _as_priors(priors)
    eta = priors.eta1
    D = size.D
    acc = sum(mult * abs(kappa) for kappa, mult in spectrum(size).entries[1:])
    root = _sqrt(eta * (1 - eta))
    return 1 - Fraction(size.dim_intersection, D) - 2 * root * acc / D


def k_series(size: ProblemSize) -> Fraction:
    """K(n, m) = sum_{k=1}^{n} n(n-1)...(n-k+1) / ((n+m)...(n+m-k+1))."""
    return sum((abs(kappa) for kappa, _ in spectrum(size).entries[1:]), Fraction(0))


def success_bounds(size: ProblemSize, priors: Priors | Number) -> tuple[Number, Number]:
    """``(lower, upper)`` envelopes of the success probability built from K(n, m).

    They bracket the closed form because every nontrivial multiplicity lies
    between ``m + 1`` and ``2n + m - 1``.
    """
    priors = _as_priors(priors)
    n, m, D = size.n, size.m, size.D
    base = 1 - Fraction(size.dim_intersection, D)
    kr = k_series(size) * _sqrt(priors.eta1 * (1 - priors.eta1))
    return base - Fraction(4 * n + 2 * m - 2, D) * kr, base - Fraction(2 * m + 2, D) * kr


def min_error(size: ProblemSize, priors: Priors | Number) -> float:
    """Helstrom error probability ``(1 - Tr|eta2 rho2 - eta1 rho1|) / 2``.

    Each non-intersection Jordan pair contributes eigenvalues
    ``(c +- s)/2D`` with ``s = sqrt(1 - (1 - c^2) kappa^2) >= |c|``, so its
    trace-norm share is ``s/D``.
    """
    priors = _as_priors(priors)
    c = float(priors.c)
    one_minus_c2 = (1.0 - c) * (1.0 + c)
    spec = spectrum(size)
    trace = size.dim_intersection * abs(c)
    for kappa, mult in spec.entries[1:]:
        s = math.sqrt(1.0 - one_minus_c2 * float(kappa) ** 2)
        assert s >= abs(c) - 1e-15, (s, c)
        trace += mult * s
    return 0.5 * (1.0 - trace / size.D)


@dataclass(frozen=True)
class DiscriminationReport:
    size: ProblemSize
    priors: Priors
    Q_L: Number
    P_success: Number
    P_E: float
    validity_interval: tuple[Fraction, Fraction]
    eta_in_validity: bool
    per_pair: tuple[PairResult, ...]

    @property
    def label(self) -> str:
        return "optimal" if self.eta_in_validity else "per-pair bound"


def report(size: ProblemSize, priors: Priors | Number) -> DiscriminationReport:
    priors = _as_priors(priors)
    pairs = _pairs(size, priors)
    q_total = sum(p.multiplicity * p.q for p in pairs)
    return DiscriminationReport(
        size=size,
        priors=priors,
        Q_L=q_total,
        P_success=1 - q_total,
        P_E=min_error(size, priors),
        validity_interval=validity_interval(size),
        eta_in_validity=in_validity(size, priors),
        per_pair=tuple(pairs),
    )
