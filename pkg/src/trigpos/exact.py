"""Exact scalars and dense polynomials.

Integers are Python ints and rationals are :class:`fractions.Fraction`, which
is always stored in lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import PoleError

Rat = Fraction
Scalar = Union[int, Fraction]


def binom(n: int, j: int) -> int:
    """Binomial coefficient with ``C(n, j) = 0`` outside ``0 <= j <= n``."""
    if n < 0:
        raise ValueError(f"binom requires n >= 0, got n={n}")
    if j < 0 or j > n:
        return 0
    return math.comb(n, j)


def pochhammer(a: Scalar, n: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+n-1)``; 1 for ``n == 0``."""
    if n < 0:
        raise ValueError(f"pochhammer requires n >= 0, got n={n}")
    out = Fraction(1)
    a = Fraction(a)
    for i in range(n):
        out *= a + i
    return out


def hyp2f1_terminating(n: int, a: Scalar, c: Scalar) -> Fraction:
    """Sum ``2F1(-n, a; c; 1)`` term by term.

    Raises :class:`PoleError` if ``(c)_k`` vanishes for some ``k <= n``.
    The closed form is deliberately not used here so that callers can check
    Chu-Vandermonde against it.
    """
    if n < 0:
        raise ValueError(f"hyp2f1_terminating requires n >= 0, got n={n}")
    a, c = Fraction(a), Fraction(c)
    total = Fraction(0)
    term = Fraction(1)
    for k in range(n + 1):
        if k:
            denom = (c + k - 1) * k
            if c + k - 1 == 0:
                raise PoleError(f"(c)_{k} = 0 for c={c}")
            term = term * (-n + k - 1) * (a + k - 1) / denom
        total += term
    return total


def _trim(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, init=False)
class Poly:
    """Dense univariate polynomial in ``z`` with rational coefficients.

    ``coeffs[p]`` is the coefficient of ``z**p``. Trailing zeros are trimmed,
    so the zero polynomial has ``coeffs == ()`` and equality is structural.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def constant(cls, c: Scalar) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, p: int, c: Scalar = 1) -> Poly:
        return cls([0] * p + [c])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, p: int) -> Fraction:
        if 0 <= p < len(self.coeffs):
            return self.coeffs[p]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: Poly) -> Poly:
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly | Scalar) -> Poly:
        if not isinstance(other, Poly):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> Poly:
        return Poly(c * a for a in self.coeffs)

    def __call__(self, z: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative(self) -> Poly:
        return Poly(p * c for p, c in enumerate(self.coeffs) if p)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"


Z = Poly([0, 1])


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_scale(a: Poly, c: Scalar) -> Poly:
    return a.scale(c)


def poly_eval(a: Poly, z: Scalar) -> Fraction:
    return a(z)


def poly_derivative(a: Poly) -> Poly:
    return a.derivative()
