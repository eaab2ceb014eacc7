"""Cosine series and their expansion in powers of ``z = 1 + cos x``."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import PoleError
from .exact import Poly, Scalar, pochhammer

HALF = Fraction(1, 2)


class CosSeries:
    """Finitely supported map ``l -> a_l`` standing for ``sum_l a_l cos(l x)``.

    Coefficients are kept unfolded over all integers ``l`` since Hadamard
    products distinguish ``a_l`` from ``a_{-l}``. Zero entries are dropped.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[int, int] = {}
        for l, a in items:
            a = clean.get(l, 0) + a
            if a:
                clean[l] = a
            else:
                clean.pop(l, None)
        self._coeffs = MappingProxyType(dict(sorted(clean.items())))

    @property
    def coeffs(self) -> Mapping[int, int]:
        return self._coeffs

    def __getitem__(self, l: int) -> int:
        return self._coeffs.get(l, 0)

    def support(self) -> list[int]:
        return list(self._coeffs)

    def folded(self) -> dict[int, int]:
        """``c_0 = a_0`` and ``c_l = a_l + a_{-l}`` for ``l >= 1``."""
        out: dict[int, int] = {}
        for l, a in self._coeffs.items():
            out[abs(l)] = out.get(abs(l), 0) + a
        return {l: c for l, c in sorted(out.items()) if c}

    def __add__(self, other: CosSeries) -> CosSeries:
        return CosSeries(list(self._coeffs.items()) + list(other._coeffs.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CosSeries):
            return NotImplemented
        return dict(self._coeffs) == dict(other._coeffs)

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        body = ", ".join(f"{l}: {a}" for l, a in self._coeffs.items())
        return f"CosSeries({{{body}}})"


@lru_cache(maxsize=None)
def cheb_T_shifted(l: int) -> Poly:
    """``T_l(cos x)`` as a polynomial in ``z = 1 + cos x``.

    Uses the hypergeometric form
    ``T_l(y) = (-1)^l sum_k (-l)_k (l)_k / (k! (1/2)_k) (1+y)^k 2^-k``.
    """
    if l < 0:
        raise ValueError("cheb_T_shifted needs l >= 0")
    sign = -1 if l % 2 else 1
    coeffs = []
    for k in range(l + 1):
        c = pochhammer(-l, k) * pochhammer(l, k) / (pochhammer(1, k) * pochhammer(HALF, k) * 2**k)
        coeffs.append(sign * c)
    return Poly(coeffs)


@lru_cache(maxsize=None)
def cheb_U_shifted(l: int) -> Poly:
    """``U_l(cos x)`` in powers of ``z`` via ``U_l = 2(z-1) U_{l-1} - U_{l-2}``.

    ``U_{-1}`` is taken to be zero.
    """
    if l < -1:
        raise ValueError("cheb_U_shifted needs l >= -1")
    if l == -1:
        return Poly()
    if l == 0:
        return Poly([1])
    if l == 1:
        return Poly([-2, 2])
    return Poly([-2, 2]) * cheb_U_shifted(l - 1) - cheb_U_shifted(l - 2)


def jacobi_shifted(n: int, alpha: Scalar, beta: Scalar) -> Poly:
    """``P_n^{(alpha, beta)}(z - 1)`` as a polynomial in ``z``."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    for k in range(1, n + 1):
        if alpha + k == 0:
            raise PoleError(f"(alpha+1)_{k} = 0 for alpha={alpha}")
    half_two_minus_z = Poly([1, Fraction(-1, 2)])  # (1 - x)/2 with x = z - 1
    power = Poly([1])
    acc = Poly()
    for k in range(n + 1):
        c = pochhammer(-n, k) * pochhammer(n + alpha + beta + 1, k) / (pochhammer(alpha + 1, k) * pochhammer(1, k))
        acc = acc + power.scale(c)
        power = power * half_two_minus_z
    return acc.scale(pochhammer(alpha + 1, n) / pochhammer(1, n))


def expand_cos_series(s: CosSeries) -> Poly:
    """Rewrite ``sum_l a_l cos(l x)`` as a polynomial in ``1 + cos x``."""
    acc = Poly()
    for l, c in s.folded().items():
        acc = acc + cheb_T_shifted(l).scale(c)
    return acc


def expand_sine_series(s: CosSeries) -> Poly:
    """Expand ``sum_l a_l sin(|l| x) / sin x`` using ``U_{|l|-1}(cos x)``."""
    acc = Poly()
    for l, c in s.folded().items():
        acc = acc + cheb_U_shifted(l - 1).scale(c)
    return acc


def derivative_transform(s: CosSeries) -> Poly:
    """Expansion of ``sum_l a_l l sin(l x) / sin x``, i.e. ``d/dz`` of the cosine expansion."""
    return expand_cos_series(s).derivative()


def hadamard(*series: CosSeries) -> CosSeries:
    """Coefficient-wise product ``(s1 * s2)_l = a_l b_l`` of unfolded series."""
    if not series:
        raise ValueError("hadamard needs at least one series")
    first, *rest = series
    out = dict(first.coeffs)
    for s in rest:
        out = {l: a * s[l] for l, a in out.items() if s[l]}
    return CosSeries(out)
