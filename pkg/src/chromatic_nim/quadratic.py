"""Exact arithmetic for numbers of the form (p + q*sqrt(d)) / r.

Everything here runs on Python integers only, so floors, comparisons and
sequence membership checks stay correct no matter how large the inputs get.
Floats never enter any decision.
"""

from __future__ import annotations

import math
from fractions import Fraction


def _square_free_split(n: int) -> tuple[int, int]:
    """Split n >= 0 as s*s*f with f square-free; returns (s, f)."""
    if n <= 1:
        return 1, n
    s, f = 1, 1
    rest = n
    fac = 2
    while fac * fac <= rest:
        if rest % fac == 0:
            exp = 0
            while rest % fac == 0:
                rest //= fac
                exp += 1
            s *= fac ** (exp // 2)
            if exp % 2:
                f *= fac
        fac += 1 if fac == 2 else 2
    return s, f * rest


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def _surd_sign(a: int, b: int, d: int) -> int:
    """Sign of a + b*sqrt(d) for integers a, b and d >= 0."""
    if b == 0 or d == 0:
        return _sign(a)
    if a == 0:
        return _sign(b)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    # Opposite signs: squaring is safe once we know which side is positive.
    lhs, rhs = a * a, b * b * d
    if a > 0:
        return _sign(lhs - rhs)
    return _sign(rhs - lhs)


class QuadraticIrrational:
    """Immutable exact value (p + q*sqrt(d)) / r.

    Canonical form: r > 0, d square-free (0 when q == 0), gcd(p, q, r) == 1.
    The value is rational exactly when q == 0.
    """

    __slots__ = ("p", "q", "d", "r")

    def __init__(self, p: int, q: int = 0, d: int = 0, r: int = 1) -> None:
        if r == 0:
            raise ValueError("denominator must be nonzero")
        if d < 0:
            raise ValueError("radicand must be non-negative")
        if q != 0:
            s, f = _square_free_split(d)
            if f == 0:
                q = 0
            elif f == 1:
                # d is a perfect square, fold sqrt(d) == s into p.
                p += q * s
                q = 0
            else:
                q *= s
                d = f
        if q == 0:
            d = 0
        if r < 0:
            p, q, r = -p, -q, -r
        g = math.gcd(math.gcd(p, q), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        self.p = p
        self.q = q
        self.d = d
        self.r = r

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.p, self.r)

    def compare(self, other: int | Fraction) -> int:
        """Sign of self - other for a rational other."""
        frac = Fraction(other)
        a = self.p * frac.denominator - frac.numerator * self.r
        b = self.q * frac.denominator
        return _surd_sign(a, b, self.d)

    def floor_mul(self, n: int) -> int:
        """Exact floor(n * self) for an integer n >= 0.

        With radicand B = n*n*q*q*d, the integer part of n*q*sqrt(d) is
        isqrt(B) when q >= 0 and -ceil(sqrt(B)) otherwise; adding an exact
        integer and flooring the remaining fraction < 1 cannot shift the
        result across a multiple of r.
        """
        if n < 0:
            raise ValueError("multiplier must be non-negative")
        radicand = n * n * self.q * self.q * self.d
        root = math.isqrt(radicand)
        if self.q >= 0:
            surd = root
        else:
            surd = -(root if root * root == radicand else root + 1)
        return (n * self.p + surd) // self.r

    def inverse(self) -> QuadraticIrrational:
        """Exact 1 / self."""
        if self.p == 0 and self.q == 0:
            raise ZeroDivisionError("cannot invert zero")
        if self.is_rational:
            return QuadraticIrrational(self.r, 0, 0, self.p)
        # Multiply through by the conjugate; p*p - q*q*d is nonzero since
        # the value is irrational.
        den = self.p * self.p - self.q * self.q * self.d
        return QuadraticIrrational(self.r * self.p, -self.r * self.q, self.d, den)

    def __float__(self) -> float:
        return (self.p + self.q * math.sqrt(self.d)) / self.r

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadraticIrrational):
            return (self.p, self.q, self.d, self.r) == (other.p, other.q, other.d, other.r)
        if isinstance(other, (int, Fraction)):
            return self.is_rational and Fraction(self.p, self.r) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.d, self.r))

    def __lt__(self, other: int | Fraction) -> bool:
        return self.compare(other) < 0

    def __le__(self, other: int | Fraction) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: int | Fraction) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: int | Fraction) -> bool:
        return self.compare(other) >= 0

    def __repr__(self) -> str:
        return f"QuadraticIrrational({self.p}, {self.q}, {self.d}, {self.r})"

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.p) if self.r == 1 else f"{self.p}/{self.r}"
        if self.q == 1:
            surd = f"√{self.d}"
        elif self.q == -1:
            surd = f"-√{self.d}"
        else:
            surd = f"{self.q}√{self.d}"
        if self.p == 0:
            body = surd
        else:
            body = f"{self.p}+{surd}" if not surd.startswith("-") else f"{self.p}{surd}"
        if self.r == 1:
            return body
        return f"({body})/{self.r}"


def floor_mul(value: QuadraticIrrational | Fraction | int, n: int) -> int:
    """Exact floor(n * value); see :meth:`QuadraticIrrational.floor_mul`."""
    if isinstance(value, QuadraticIrrational):
        return value.floor_mul(n)
    frac = Fraction(value)
    return (n * frac.numerator) // frac.denominator


def complement_slope(beta: QuadraticIrrational) -> QuadraticIrrational:
    """The alpha with 1/alpha + 1/beta == 1, i.e. alpha = beta / (beta - 1).

    Requires beta irrational and greater than 1, so that the floors of
    multiples of alpha and beta partition the positive integers.
    """
    if beta.is_rational:
        raise ValueError("slope must be irrational")
    if beta.compare(1) <= 0:
        raise ValueError("slope must exceed 1")
    p, q, d, r = beta.p, beta.q, beta.d, beta.r
    num_p = p * (p - r) - q * q * d
    num_q = -q * r
    den = (p - r) ** 2 - q * q * d
    return QuadraticIrrational(num_p, num_q, d, den)
