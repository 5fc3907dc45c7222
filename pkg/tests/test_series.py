import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hookbias.partitions import distinct, enumerate_partitions
from hookbias.series import (
    NonzeroRemainder,
    Polynomial,
    TruncatedSeries,
    _kronecker_mul,
    _naive_mul,
    eval_at_one,
    exact_poly_div,
    gaussian_binomial,
    gaussian_binomial_quotient,
    mul_binomial,
    mul_geometric,
    pochhammer,
    positivity_scan,
    series_add,
    series_mul,
)


def S(coeffs, trunc=None):
    coeffs = list(coeffs)
    return TruncatedSeries.from_coeffs(coeffs, len(coeffs) - 1 if trunc is None else trunc)


def distinct_count(n):
    return sum(1 for _ in enumerate_partitions(n, distinct(2)))


def signed_distinct_count(n):
    # inclusion-exclusion: distinct partitions weighted by (-1)^length
    return sum((-1) ** len(p) for p in enumerate_partitions(n, distinct(2)))


def factorwise_euler(N):
    # (q;q)_inf by plain list multiplication, one factor at a time
    c = [1] + [0] * N
    for m in range(1, N + 1):
        c = [c[n] - (c[n - m] if n >= m else 0) for n in range(N + 1)]
    return c


class TestConstruction:
    def test_length_matches_trunc(self):
        with pytest.raises(ValueError):
            TruncatedSeries((1, 2), 3)

    def test_from_coeffs_pads_and_cuts(self):
        assert S([1, 2], 4).coeffs == (1, 2, 0, 0, 0)
        assert TruncatedSeries.from_coeffs([1, 2, 3, 4], 1).coeffs == (1, 2)

    def test_min_trunc_on_combination(self):
        a, b = S([1] * 6), S([1] * 3)
        assert (a + b).trunc == 2
        assert (a * b).trunc == 2


class TestAdd:
    def test_cancellation(self):
        assert series_add(S([1, 1, 0]), S([1, -1, 0])) == S([2, 0, 0])

    def test_identity(self):
        a = S([3, -1, 4, 1, -5])
        assert a + TruncatedSeries.zero(4) == a

    def test_euler_plus_distinct_at_odd_n(self):
        N = 50
        total = pochhammer(1, 1, N=N) + pochhammer(1, 1, N=N, sign=1)
        for n in range(1, N + 1, 2):
            assert total[n] == distinct_count(n) + signed_distinct_count(n)


class TestMul:
    def test_difference_of_squares(self):
        assert series_mul(S([1, 1, 0, 0]), S([1, -1, 0, 0])) == S([1, 0, -1, 0])

    def test_telescoping(self):
        assert S([1] * 20) * S([1, -1], 19) == TruncatedSeries.one(19)

    def test_euler_times_reciprocal(self):
        N = 200
        assert pochhammer(1, 1, N=N) * pochhammer(1, 1, invert=True, N=N) == TruncatedSeries.one(N)

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(-10 ** 30, 10 ** 30), min_size=1, max_size=90),
           st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=1, max_size=90),
           st.integers(0, 200))
    def test_kronecker_matches_schoolbook(self, a, b, n):
        assert _kronecker_mul(a, b, n) == _naive_mul(a, b, n)


small = st.lists(st.integers(-9, 9), min_size=1, max_size=65)


@st.composite
def series_triple(draw):
    trunc = draw(st.integers(0, 64))
    mk = lambda: S(draw(st.lists(st.integers(-9, 9), min_size=trunc + 1, max_size=trunc + 1)))
    return mk(), mk(), mk()


class TestRingAxioms:
    @settings(max_examples=80, deadline=None)
    @given(series_triple())
    def test_axioms(self, abc):
        a, b, c = abc
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


class TestGeometric:
    def test_one_over_one_minus_q(self):
        assert mul_geometric(TruncatedSeries.one(4), 1) == S([1, 1, 1, 1, 1])

    def test_one_over_one_minus_q2(self):
        assert mul_geometric(TruncatedSeries.one(5), 2) == S([1, 0, 1, 0, 1, 0])

    def test_exact_cancellation(self):
        s = S([1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0], 10)
        assert mul_geometric(s, 8) == TruncatedSeries.one(10)

    @settings(max_examples=60, deadline=None)
    @given(small, st.data())
    def test_inverse_of_factor(self, coeffs, data):
        s = S(coeffs)
        k = data.draw(st.integers(1, max(1, s.trunc)))
        assert mul_binomial(mul_geometric(s, k), k) == s

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            mul_geometric(TruncatedSeries.one(3), 0)


class TestPochhammer:
    def test_distinct_parts(self):
        assert pochhammer(1, 1, N=5, sign=1).coeffs == (1, 1, 1, 2, 2, 3)

    def test_all_partitions(self):
        assert pochhammer(1, 1, invert=True, N=5).coeffs == (1, 1, 2, 3, 5, 7)

    def test_euler_product(self):
        got = pochhammer(1, 1, N=7).coeffs
        assert got == (1, -1, -1, 0, 0, 1, 0, 1)
        assert list(got) == factorwise_euler(7)
        assert list(got) == [signed_distinct_count(n) for n in range(8)]

    def test_distinct_matches_enumeration(self):
        s = pochhammer(1, 1, N=60, sign=1)
        assert list(s) == [distinct_count(n) for n in range(61)]

    def test_euler_matches_factorwise_at_larger_N(self):
        assert list(pochhammer(1, 1, N=300)) == factorwise_euler(300)

    def test_product_with_reciprocal(self):
        N = 120
        for start, step in [(1, 2), (3, 2), (2, 3), (12, 3)]:
            prod = pochhammer(start, step, N=N) * pochhammer(start, step, invert=True, N=N)
            assert prod == TruncatedSeries.one(N)

    def test_reciprocal_plus_sign(self):
        N = 80
        prod = pochhammer(1, 1, N=N, sign=1) * pochhammer(1, 1, invert=True, N=N, sign=1)
        assert prod == TruncatedSeries.one(N)

    def test_start_past_truncation(self):
        assert pochhammer(50, 1, N=10) == TruncatedSeries.one(10)


class TestGaussianBinomial:
    def test_small(self):
        assert gaussian_binomial(2, 1, 1) == Polynomial([1, 1])
        assert gaussian_binomial(7, 0, 3) == Polynomial([1])
        assert gaussian_binomial(4, 2, 2) == Polynomial([1, 0, 1, 0, 2, 0, 1, 0, 1])

    def test_quotient_route_is_remainder_free(self):
        assert gaussian_binomial_quotient(4, 2, 2) == Polynomial([1, 0, 1, 0, 2, 0, 1, 0, 1])

    def test_out_of_range_is_zero(self):
        assert gaussian_binomial(2, 3, 1) == Polynomial()
        assert gaussian_binomial(2, 3, 1).degree is None

    @pytest.mark.parametrize("e", [1, 2, 3])
    def test_routes_agree_and_symmetry(self, e):
        for m in range(9):
            for n in range(m + 1):
                g = gaussian_binomial(m, n, e)
                assert g == gaussian_binomial_quotient(m, n, e)
                assert g == gaussian_binomial(m, m - n, e)
                assert eval_at_one(g) == math.comb(m, n)
                assert all(c >= 0 for c in g.coeffs)


class TestPolynomial:
    def test_div_simple(self):
        assert exact_poly_div(Polynomial([1, 0, -1]), Polynomial([1, -1])) == Polynomial([1, 1])

    def test_div_constructed(self):
        num = Polynomial([1, 1]) * Polynomial([1, 1, 1, 1])
        assert exact_poly_div(num, Polynomial([1, 1])) == Polynomial([1, 1, 1, 1])

    def test_div_remainder(self):
        with pytest.raises(NonzeroRemainder):
            exact_poly_div(Polynomial([1, 0, 1]), Polynomial([1, 1]))

    def test_div_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            exact_poly_div(Polynomial([1]), Polynomial())

    @settings(max_examples=80, deadline=None)
    @given(st.lists(st.integers(-50, 50), max_size=30),
           st.lists(st.integers(-50, 50), min_size=1, max_size=30).filter(lambda c: any(c)))
    def test_div_of_product(self, a, b):
        a, b = Polynomial(a), Polynomial(b)
        assert exact_poly_div(a * b, b) == a

    def test_eval_at_one(self):
        assert eval_at_one(Polynomial([1, -1])) == 0
        A = Polynomial([2, 1, 3, 3, 4, 4, 6, 7, 6, 7, 5, 6, 4, 4, 3, 3, 1])
        assert eval_at_one(A) == 69
        assert eval_at_one(Polynomial.from_terms({18: 1, 20: 1})) == 2

    def test_trailing_zeros_stripped(self):
        p = Polynomial([1, 2, 0, 0])
        assert p.degree == 1
        assert Polynomial([0, 0]).degree is None

    def test_str(self):
        assert str(Polynomial([1, -1, 0, 3])) == "1 - q + 3*q^3"


class TestPositivityScan:
    def test_theta_like_series(self):
        N = 500
        s = Polynomial([1, -2, 1]) * pochhammer(1, 2, invert=True, N=N)
        assert positivity_scan(s, 0) == [1, 4]

    def test_all_ones(self):
        assert positivity_scan(S([1] * 30)) == []

    def test_polarity(self):
        s = S([0, -1, 2, 0, -3, 5])
        assert positivity_scan(s, 0, positive=True) == [2, 5]
        assert positivity_scan(s, 2) == [4]

    def test_start_beyond_trunc(self):
        with pytest.raises(ValueError):
            positivity_scan(S([1, 2]), 5)
