"""Exact integer and rational helpers.

Rationals are plain :class:`fractions.Fraction` objects.  The only extension
is :class:`SqrtRational`, a signed square root of a nonnegative rational,
which is all that is needed to hold overlaps between symmetric basis vectors
exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction


def binomial(n: int, k: int) -> int:
    """Return C(n, k), with the convention C(n, k) = 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def vandermonde_check(n: int, m: int, k: int) -> bool:
    """Check C(n+m, k) == sum_i C(n, i) C(m, k-i)."""
    if not 0 <= k <= n + m:
        raise ValueError(f"k={k} outside [0, {n + m}]")
    return binomial(n + m, k) == sum(binomial(n, i) * binomial(m, k - i) for i in range(k + 1))


def is_square(q: Fraction) -> bool:
    """True when the nonnegative rational ``q`` is the square of a rational."""
    if q < 0:
        return False
    p, r = q.numerator, q.denominator
    return math.isqrt(p) ** 2 == p and math.isqrt(r) ** 2 == r


def exact_sqrt(q: Fraction) -> Fraction:
    if not is_square(q):
        raise ValueError(f"{q} is not a perfect rational square")
    return Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator))


@dataclass(frozen=True)
class SqrtRational:
    """The exact real number ``sign * sqrt(square)``.

    Instances are canonical (``sign == 0`` iff ``square == 0``), so the
    generated ``__eq__`` is exact equality of the represented numbers.
    """

    sign: int
    square: Fraction

    def __post_init__(self):
        square = Fraction(self.square)
        object.__setattr__(self, "square", square)
        if square < 0:
            raise ValueError("square must be nonnegative")
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or +1")
        if (self.sign == 0) != (square == 0):
            raise ValueError("sign is 0 exactly when square is 0")

    @classmethod
    def zero(cls) -> SqrtRational:
        return cls(0, Fraction(0))

    @classmethod
    def from_rational(cls, q: Fraction | int) -> SqrtRational:
        q = Fraction(q)
        return cls((q > 0) - (q < 0), q * q)

    @classmethod
    def sqrt_of(cls, q: Fraction | int) -> SqrtRational:
        """Positive square root of a nonnegative rational."""
        q = Fraction(q)
        return cls(1 if q else 0, q)

    def is_zero(self) -> bool:
        return self.sign == 0

    def is_rational(self) -> bool:
        return is_square(self.square)

    def to_fraction(self) -> Fraction:
        return self.sign * exact_sqrt(self.square)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SqrtRational.from_rational(other)
        if not isinstance(other, SqrtRational):
            return NotImplemented
        return SqrtRational(self.sign * other.sign, self.square * other.square)

    __rmul__ = __mul__

    def __neg__(self) -> SqrtRational:
        return SqrtRational(-self.sign, self.square)

    def __add__(self, other):
        if not isinstance(other, SqrtRational):
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.square != other.square:
            raise ValueError("sum of distinct radicals is not representable")
        total = self.sign + other.sign
        if total == 0:
            return SqrtRational.zero()
        # both signs agree: 2*sqrt(q) = sqrt(4q)
        return SqrtRational(total // 2, 4 * self.square)

    def __sub__(self, other):
        if not isinstance(other, SqrtRational):
            return NotImplemented
        return self + (-other)

    def __float__(self) -> float:
        return self.sign * math.sqrt(self.square)

    def __abs__(self) -> SqrtRational:
        return SqrtRational(abs(self.sign), self.square)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        if self.is_rational():
            return str(self.to_fraction())
        return f"{'-' if self.sign < 0 else ''}sqrt({self.square})"
