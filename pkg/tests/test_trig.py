from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trigpos.errors import PoleError
from trigpos.exact import Poly
from trigpos.sums import WeightFamily, weight_family_poly
from trigpos.trig import (
    CosSeries,
    cheb_T_shifted,
    cheb_U_shifted,
    derivative_transform,
    expand_cos_series,
    expand_sine_series,
    hadamard,
    jacobi_shifted,
)

series_st = st.dictionaries(st.integers(-6, 6), st.integers(-20, 20), max_size=6).map(CosSeries)


def t_recurrence(l, y):
    a, b = Fraction(1), Fraction(y)
    if l == 0:
        return a
    for _ in range(l - 1):
        a, b = b, 2 * y * b - a
    return b


def u_recurrence(l, y):
    a, b = Fraction(1), 2 * Fraction(y)
    if l == 0:
        return a
    for _ in range(l - 1):
        a, b = b, 2 * y * b - a
    return b


def jacobi_recurrence(n, alpha, beta, x):
    """Three-term recurrence for P_n^(alpha, beta)(x); independent of the 2F1 form."""
    p0 = Fraction(1)
    p1 = (alpha + 1) + (alpha + beta + 2) * (x - 1) / 2
    if n == 0:
        return p0
    for m in range(2, n + 1):
        s = 2 * m + alpha + beta
        a1 = 2 * m * (m + alpha + beta) * (s - 2)
        a2 = (s - 1) * (alpha**2 - beta**2)
        a3 = (s - 1) * s * (s - 2)
        a4 = 2 * (m + alpha - 1) * (m + beta - 1) * s
        p0, p1 = p1, ((a2 + a3 * x) * p1 - a4 * p0) / a1
    return p1


class TestChebyshev:
    @pytest.mark.parametrize("l, want", [(0, [1]), (1, [-1, 1]), (2, [1, -4, 2])])
    def test_T_examples(self, l, want):
        assert cheb_T_shifted(l) == Poly(want)

    @pytest.mark.parametrize("l, want", [(0, [1]), (1, [-2, 2]), (2, [3, -8, 4])])
    def test_U_examples(self, l, want):
        assert cheb_U_shifted(l) == Poly(want)

    def test_T_against_recurrence(self, sample_points):
        for l in range(17):
            T = cheb_T_shifted(l)
            assert T.degree == l and T.is_integral()
            for y in sample_points:
                assert T(1 + y) == t_recurrence(l, y)

    def test_U_against_recurrence(self, sample_points):
        for l in range(17):
            U = cheb_U_shifted(l)
            for y in sample_points:
                assert U(1 + y) == u_recurrence(l, y)

    def test_U_minus_one_is_zero(self):
        assert cheb_U_shifted(-1).is_zero()

    def test_T_derivative_is_l_U(self):
        for l in range(1, 15):
            assert cheb_T_shifted(l).derivative() == cheb_U_shifted(l - 1).scale(l)


class TestJacobi:
    def test_examples(self):
        assert jacobi_shifted(0, Fraction(3), Fraction(1, 2)) == Poly([1])
        assert jacobi_shifted(1, 0, 0) == Poly([-1, 1])
        a, b = Fraction(2, 3), Fraction(-1, 4)
        want = Poly([a + 1]) - Poly([2, -1]).scale((a + b + 2) / 2)
        assert jacobi_shifted(1, a, b) == want

    @pytest.mark.parametrize("alpha, beta", [(0, 0), (Fraction(1, 2), Fraction(1, 2)), (Fraction(-1, 3), 2),
                                             (Fraction(3, 2), Fraction(-1, 2)), (1, Fraction(1, 5))])
    def test_against_recurrence(self, alpha, beta, sample_points):
        alpha, beta = Fraction(alpha), Fraction(beta)
        for n in range(9):
            P = jacobi_shifted(n, alpha, beta)
            for x in sample_points[::3]:
                assert P(x + 1) == jacobi_recurrence(n, alpha, beta, x)

    def test_pole(self):
        with pytest.raises(PoleError):
            jacobi_shifted(3, -2, 0)

    def test_second_kind_special_case(self):
        fam = WeightFamily.shifted_jacobi(Fraction(1, 2), Fraction(1, 2))
        for l in range(12):
            assert weight_family_poly(fam, l) == cheb_U_shifted(l - 1)


class TestCosSeries:
    def test_drops_zeros_and_folds(self):
        s = CosSeries({-2: 1, -1: 9, 0: 9, 1: 1, 3: 0})
        assert 3 not in s.coeffs
        assert s.folded() == {0: 9, 1: 10, 2: 1}

    def test_expand_examples(self):
        assert expand_cos_series(CosSeries({0: 1})) == Poly([1])
        assert expand_cos_series(CosSeries({-1: 1, 0: 4, 1: 1})) == Poly([2, 2])
        assert expand_cos_series(CosSeries({-2: 1, -1: 9, 0: 9, 1: 1})) == Poly([0, 6, 2])

    def test_sine_examples(self):
        assert expand_sine_series(CosSeries({0: 5})).is_zero()
        assert expand_sine_series(CosSeries({-1: 1, 0: 4, 1: 1})) == Poly([2])
        assert expand_sine_series(CosSeries({1: 1, -2: 1})) == Poly([-1, 2])

    def test_derivative_examples(self):
        assert derivative_transform(CosSeries({0: 7})).is_zero()
        assert derivative_transform(CosSeries({-1: 1, 0: 4, 1: 1})) == Poly([2])
        assert derivative_transform(CosSeries({-2: 1, -1: 9, 0: 9, 1: 1})) == Poly([6, 4])

    @given(series_st, series_st)
    def test_expansion_linear(self, a, b):
        assert expand_cos_series(a + b) == expand_cos_series(a) + expand_cos_series(b)

    @given(series_st)
    def test_round_trip(self, s):
        poly = expand_cos_series(s)
        for i in range(20):
            y = Fraction(2 * i, 19) - 1
            assert poly(1 + y) == sum(c * t_recurrence(l, y) for l, c in s.folded().items())

    @given(series_st)
    def test_derivative_via_U(self, s):
        want = Poly()
        for l, c in s.folded().items():
            if l:
                want = want + cheb_U_shifted(l - 1).scale(c * l)
        assert derivative_transform(s) == want


class TestHadamard:
    def test_examples(self):
        s = CosSeries({-1: 1, 0: 2, 1: 1})
        ones = CosSeries({l: 1 for l in s.support()})
        assert hadamard(s, ones) == s
        assert hadamard(s, s) == CosSeries({-1: 1, 0: 4, 1: 1})
        assert hadamard(s, s, s) == CosSeries({-1: 1, 0: 8, 1: 1})

    @given(series_st, series_st, series_st)
    def test_algebra(self, a, b, c):
        assert hadamard(a, b) == hadamard(b, a)
        assert hadamard(hadamard(a, b), c) == hadamard(a, hadamard(b, c))
        assert hadamard(a, b + c) == hadamard(a, b) + hadamard(a, c)
