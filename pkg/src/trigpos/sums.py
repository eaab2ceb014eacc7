"""Binomial coefficient series, weight families and their weight sums."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .errors import PoleError
from .exact import Poly, binom, pochhammer
from .trig import CosSeries, jacobi_shifted


@dataclass(frozen=True)
class Params:
    M: int
    N: int
    k: int

    def __post_init__(self):
        if self.M < 0 or self.N < 0:
            raise ValueError(f"M and N must be >= 0, got M={self.M}, N={self.N}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got k={self.k}")

    @property
    def gap_ok(self) -> bool:
        """Whether ``|M - N| <= k`` holds."""
        return abs(self.M - self.N) <= self.k

    def l_range(self) -> range:
        """Indices ``l`` with ``0 <= M - k l <= M + N``."""
        return range(-(self.N // self.k), self.M // self.k + 1)


@dataclass(frozen=True)
class MultiParams:
    pairs: tuple[tuple[int, int], ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(m), int(n)) for m, n in self.pairs))
        if not self.pairs:
            raise ValueError("MultiParams needs at least one (M, N) pair")
        for m, n in self.pairs:
            Params(m, n, self.k)

    @property
    def gap_ok(self) -> bool:
        return all(abs(m - n) <= self.k for m, n in self.pairs)


def single_series(P: Params) -> CosSeries:
    """``sum_l C(M+N, M-kl) cos(l x)``."""
    n = P.M + P.N
    return CosSeries({l: binom(n, P.M - P.k * l) for l in P.l_range()})


def squared_series(P: Params) -> CosSeries:
    """``sum_l C(M+N, M-kl)^2 cos(l x)``."""
    n = P.M + P.N
    return CosSeries({l: binom(n, P.M - P.k * l) ** 2 for l in P.l_range()})


def mixed_series(P: Params) -> CosSeries:
    """``sum_l C(M+N, M-kl) C(M+N, N-kl) cos(l x)``; symmetric in ``l``."""
    n = P.M + P.N
    return CosSeries({l: binom(n, P.M - P.k * l) * binom(n, P.N - P.k * l) for l in P.l_range()})


def product_series(MP: MultiParams) -> CosSeries:
    """``sum_l prod_i C(M_i+N_i, M_i-kl) cos(l x)`` with a common ``k``."""
    lo = max(-(n // MP.k) for _, n in MP.pairs)
    hi = min(m // MP.k for m, _ in MP.pairs)
    out = {}
    for l in range(lo, hi + 1):
        a = 1
        for m, n in MP.pairs:
            a *= binom(m + n, m - MP.k * l)
        out[l] = a
    return CosSeries(out)


def alt_sum(s: CosSeries) -> int:
    """The series at ``x = pi``: ``sum_l (-1)^l a_l``."""
    return sum(-a if l % 2 else a for l, a in s.coeffs.items())


def weight_w(l: int, p: int) -> Fraction:
    """Coefficient of ``z^p`` in ``T_|l|``.

    ``C(|l|+p, |l|-p) 2^p |l| / (|l|+p) (-1)^(|l|-p)``, with ``w(0, 0) = 1``.
    """
    l = abs(l)
    if p < 0 or l < p:
        return Fraction(0)
    if l == 0:
        return Fraction(1)
    sign = -1 if (l - p) % 2 else 1
    return Fraction(sign * binom(l + p, l - p) * 2**p * l, l + p)


def _weight_sum(top: int, l: int, p: int) -> Fraction:
    if l < p:
        raise ValueError(f"weight sums need l >= p, got l={l}, p={p}")
    return sum((binom(top, r) * weight_w(l - r, p) for r in range(l - p + 1)), Fraction(0))


def weight_sum_A(l: int, p: int) -> Fraction:
    """``sum_{r=0}^{l-p} C(2l, r) w(l-r, p)``."""
    return _weight_sum(2 * l, l, p)


def weight_sum_B(l: int, p: int) -> Fraction:
    """``sum_{r=0}^{l-p} C(2l-1, r) w(l-r, p)``."""
    if l < 1:
        raise ValueError("weight_sum_B needs l >= 1")
    return _weight_sum(2 * l - 1, l, p)


def weight_sum_C(l: int, p: int) -> Fraction:
    """``sum_{r=0}^{l-p} C(2l+1, r) w(l-r, p)``."""
    return _weight_sum(2 * l + 1, l, p)


@dataclass(frozen=True)
class WeightFamily:
    """A family ``l -> p_l(z)`` of polynomials with ``deg p_l <= l``.

    ``kind`` is one of ``"chebyshev_t"``, ``"jacobi"``, ``"shifted_jacobi"``
    or ``"custom"``. Custom families take their polynomials from ``table``.
    """

    kind: str
    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)
    table: Mapping[int, Poly] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in ("chebyshev_t", "jacobi", "shifted_jacobi", "custom"):
            raise ValueError(f"unknown weight family {self.kind!r}")
        if self.kind == "custom" and self.table is None:
            raise ValueError("custom weight family needs a table")
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))

    @classmethod
    def chebyshev_t(cls) -> WeightFamily:
        return cls("chebyshev_t")

    @classmethod
    def jacobi(cls, alpha, beta) -> WeightFamily:
        return cls("jacobi", Fraction(alpha), Fraction(beta))

    @classmethod
    def shifted_jacobi(cls, alpha, beta) -> WeightFamily:
        return cls("shifted_jacobi", Fraction(alpha), Fraction(beta))

    def label(self) -> str:
        if self.kind in ("jacobi", "shifted_jacobi"):
            return f"{self.kind}({self.alpha},{self.beta})"
        return self.kind

    def poly(self, l: int) -> Poly:
        return weight_family_poly(self, l)


@lru_cache(maxsize=4096)
def _scaled_jacobi(n: int, alpha: Fraction, beta: Fraction) -> Poly:
    for j in range(n):
        if beta + 1 + j == 0:
            raise PoleError(f"(beta+1)_{n} = 0 for beta={beta}")
    scale = pochhammer(alpha + beta + 1, n) / pochhammer(beta + 1, n)
    return jacobi_shifted(n, alpha, beta).scale(scale)


def weight_family_poly(F: WeightFamily, l: int) -> Poly:
    """The polynomial ``p_l(z)`` of a weight family."""
    if l < 0:
        raise ValueError("weight families are indexed by l >= 0")
    if F.kind == "chebyshev_t":
        return Poly(weight_w(l, p) for p in range(l + 1))
    if F.kind == "jacobi":
        return _scaled_jacobi(l, F.alpha, F.beta)
    if F.kind == "shifted_jacobi":
        return Poly() if l == 0 else _scaled_jacobi(l - 1, F.alpha, F.beta)
    poly = F.table.get(l, Poly())
    if poly.degree > l:
        raise ValueError(f"custom p_{l} has degree {poly.degree} > {l}")
    return poly


def family_weight(F: WeightFamily, l: int, p: int) -> Fraction:
    """``w(l, p)`` for a family: the ``z^p`` coefficient of ``p_|l|``."""
    return weight_family_poly(F, abs(l)).coeff(p)


def family_weight_sum(F: WeightFamily, l: int, p: int) -> Fraction:
    """``sum_{r=0}^{l-p} C(2l, r) w(l-r, p)`` for an arbitrary family."""
    if l < p:
        raise ValueError(f"weight sums need l >= p, got l={l}, p={p}")
    return sum((binom(2 * l, r) * family_weight(F, l - r, p) for r in range(l - p + 1)), Fraction(0))


def generic_transform(s: CosSeries, F: WeightFamily) -> Poly:
    """``sum_l a_l p_|l|(z)``."""
    acc = Poly()
    for l, c in s.folded().items():
        acc = acc + weight_family_poly(F, l).scale(c)
    return acc


def _check_beta(beta: Fraction, p: int) -> None:
    if pochhammer(beta + 1, p) == 0:
        raise PoleError(f"(beta+1)_{p} = 0 for beta={beta}")


def jacobi_closed_form(l: int, p: int, alpha, beta) -> Fraction:
    """Closed form of the Jacobi weight sum ``sum_r C(2l, r) w_J(l-r, p)``.

    Chu-Vandermonde gives
    ``(s+1)_{2p} (l-p-s)_{l-p} / ((l-p)! p! (beta+1)_p 2^p)`` with ``s = alpha+beta``.
    """
    if l < p:
        raise ValueError(f"closed form needs l >= p, got l={l}, p={p}")
    alpha, beta = Fraction(alpha), Fraction(beta)
    _check_beta(beta, p)
    s = alpha + beta
    num = pochhammer(s + 1, 2 * p) * pochhammer(l - p - s, l - p)
    den = pochhammer(1, l - p) * pochhammer(1, p) * pochhammer(beta + 1, p) * 2**p
    return num / den


def jacobi_closed_form_printed(l: int, p: int, alpha, beta) -> Fraction:
    """The variant with ``(l+s+1)_p (s+1)_l / (l+s+2p)_{l-p}`` in place of ``(s+1)_{2p}``.

    Agrees with :func:`jacobi_closed_form` when ``l == p`` or ``l == 1`` only.
    """
    if l < p:
        raise ValueError(f"closed form needs l >= p, got l={l}, p={p}")
    alpha, beta = Fraction(alpha), Fraction(beta)
    _check_beta(beta, p)
    s = alpha + beta
    tail = pochhammer(l + s + 2 * p, l - p)
    if tail == 0:
        raise PoleError(f"(l+s+2p)_(l-p) = 0 at l={l}, p={p}, s={s}")
    num = pochhammer(l + s + 1, p) * pochhammer(s + 1, l) * pochhammer(l - p - s, l - p)
    den = pochhammer(1, l - p) * pochhammer(1, p) * pochhammer(beta + 1, p) * tail * 2**p
    return num / den


def shifted_jacobi_closed_form(l: int, p: int, alpha, beta) -> Fraction:
    """Closed form of the weight sum for the shifted Jacobi family.

    ``(s+1)_{2p} (l-p-s+1)_{l-p-1} / ((l-p-1)! p! (beta+1)_p 2^p)`` for ``l > p``,
    and 0 for ``l == p`` since ``p_p`` has degree ``p - 1``.
    """
    if l < p:
        raise ValueError(f"closed form needs l >= p, got l={l}, p={p}")
    if l == p:
        return Fraction(0)
    alpha, beta = Fraction(alpha), Fraction(beta)
    _check_beta(beta, p)
    s = alpha + beta
    num = pochhammer(s + 1, 2 * p) * pochhammer(l - p - s + 1, l - p - 1)
    den = pochhammer(1, l - p - 1) * pochhammer(1, p) * pochhammer(beta + 1, p) * 2**p
    return num / den
