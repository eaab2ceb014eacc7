import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trigpos.errors import PoleError
from trigpos.exact import (
    Poly,
    Z,
    binom,
    hyp2f1_terminating,
    pochhammer,
    poly_add,
    poly_derivative,
    poly_eval,
    poly_mul,
    poly_scale,
)

small_rats = st.fractions(min_value=-5, max_value=5, max_denominator=7)
small_polys = st.lists(small_rats, max_size=5).map(Poly)


def factorial_binom(n, j):
    return math.factorial(n) // (math.factorial(j) * math.factorial(n - j))


class TestBinom:
    @pytest.mark.parametrize("n, j, want", [(2, -1, 0), (4, 2, 6), (10, 5, 252), (3, 4, 0), (0, 0, 1)])
    def test_values(self, n, j, want):
        assert binom(n, j) == want

    def test_matches_factorials(self):
        for n in range(25):
            for j in range(n + 1):
                assert binom(n, j) == factorial_binom(n, j)

    def test_pascal(self):
        for n in range(1, 31):
            for j in range(n + 1):
                assert binom(n, j) == binom(n - 1, j) + binom(n - 1, j - 1)

    def test_negative_upper_rejected(self):
        with pytest.raises(ValueError):
            binom(-1, 0)

    def test_big(self):
        assert binom(200, 100) == factorial_binom(200, 100)


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(Fraction(7, 3), 0) == 1

    def test_values(self):
        assert pochhammer(1, 4) == 24
        assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)
        assert pochhammer(-3, 4) == 0

    @given(small_rats, st.integers(0, 8))
    def test_shift_rule(self, a, n):
        assert pochhammer(a, n + 1) == pochhammer(a, n) * (a + n)


class TestHyp2F1:
    def test_single_term(self):
        assert hyp2f1_terminating(0, Fraction(3), Fraction(-7, 2)) == 1

    def test_examples(self):
        assert hyp2f1_terminating(2, 1, 3) == Fraction(1, 2)
        assert hyp2f1_terminating(1, 2, 5) == Fraction(3, 5)

    def test_pole(self):
        with pytest.raises(PoleError):
            hyp2f1_terminating(3, 1, -1)

    def test_chu_vandermonde(self):
        values = [Fraction(p, q) for p in range(-5, 6) for q in (1, 2, 3)]
        grid = [(a, c) for a in values[::3] for c in values if not (c.denominator == 1 and c <= 0)]
        for n in range(13):
            for a, c in grid:
                assert hyp2f1_terminating(n, a, c) == pochhammer(c - a, n) / pochhammer(c, n)


class TestPoly:
    def test_canonical_zero(self):
        assert Poly([0, 0]) == Poly() and Poly().degree == -1

    def test_examples(self):
        assert poly_mul(Z, Z) == Poly([0, 0, 1])
        assert poly_eval(Poly([2, 2]), 0) == 2
        assert poly_derivative(Poly([0, 6, 2])) == Poly([6, 4])
        assert poly_scale(Poly([1, 2]), Fraction(1, 2)) == Poly([Fraction(1, 2), 1])
        assert poly_add(Poly([1, 1]), Poly([0, -1])) == Poly([1])

    @given(small_polys, small_polys, small_polys)
    def test_ring_axioms(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a

    @given(small_polys, small_polys, small_rats)
    def test_eval_is_homomorphism(self, a, b, z):
        assert (a * b)(z) == a(z) * b(z)
        assert (a + b)(z) == a(z) + b(z)

    @given(small_polys)
    def test_coefficients_stay_reduced(self, a):
        for c in (a * a).coeffs:
            assert math.gcd(c.numerator, c.denominator) == 1 and c.denominator > 0
        assert not (a * a).coeffs or (a * a).coeffs[-1] != 0
