from fractions import Fraction
from math import comb

from hypothesis import given, settings, strategies as st
from mpmath import mpf

from szeta.families.bessel import bessel_mzsv_2n, bessel_mzv_2n, bessel_mzv_4n, bessel_S, bessel_S_star, lommel_poly
from szeta.families.hypergeometric import hyp_bernoulli, hyp_mzv_2n
from szeta.mzv import convolution_defects, newton_e_from_p, newton_h_from_p
from szeta.numkernel import as_param, classical_bernoulli, gamma, pochhammer
from szeta.powerseries import TruncatedSeries, ps_mul, ps_recip

FAST = settings(max_examples=40, deadline=None)

positive = st.fractions(min_value=Fraction(1, 10), max_value=5, max_denominator=12)
orders = st.fractions(min_value=Fraction(-9, 10), max_value=6, max_denominator=12)
rationals = st.fractions(min_value=-10, max_value=10, max_denominator=30)


@FAST
@given(st.fractions(min_value=Fraction(1, 7), max_value=12, max_denominator=20))
def test_gamma_recurrence(z):
    assert abs(gamma(z + 1) - z.numerator * gamma(z) / z.denominator) < mpf(10) ** -40 * gamma(z + 1)


@FAST
@given(rationals, st.integers(0, 12), st.integers(0, 12))
def test_pochhammer_splits(z, m, n):
    assert pochhammer(z, m + n) == pochhammer(z, m) * pochhammer(z + m, n)


@FAST
@given(st.lists(rationals, min_size=2, max_size=9), st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=9))
def test_series_times_reciprocal_is_one(tail, lead):
    series = TruncatedSeries((lead, *tail))
    product = ps_mul(series, ps_recip(series))
    assert list(product) == [1] + [0] * (len(tail))


@FAST
@given(st.lists(rationals, min_size=1, max_size=6))
def test_newton_identities_convolution(powers):
    n = len(powers)
    e = newton_e_from_p(powers, n)
    h = newton_h_from_p(powers, n)
    assert e[1] == h[1] == powers[0]
    assert all(d == 0 for d in convolution_defects(e, h))


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 40))
def test_bernoulli_recurrence(m):
    assert sum(comb(m + 1, k) * classical_bernoulli(k) for k in range(m + 1)) == 0


@FAST
@given(positive, positive)
def test_hypergeometric_bernoulli_kummer_transform(a, b):
    # 1F1(a; a+b; z) = e^z 1F1(b; a+b; -z)
    left, right = hyp_bernoulli(a, b, 7), hyp_bernoulli(b, a, 7)
    for n in range(7):
        assert left[n] == (-1) ** n * sum(comb(n, k) * right[k] for k in range(n + 1))


@FAST
@given(positive, positive)
def test_hypergeometric_depth_one(a, b):
    assert hyp_mzv_2n(a, b, 1) == -a * b / ((a + b) ** 2 * (a + b + 1))


@FAST
@given(orders)
def test_bessel_power_sum_relations(nu):
    e1, e2 = bessel_mzv_2n(nu, 1), bessel_mzv_2n(nu, 2)
    assert bessel_mzv_4n(nu, 1) == e1**2 - 2 * e2
    assert bessel_mzsv_2n(nu, 1) == e1
    assert bessel_mzsv_2n(nu, 2) == e1**2 - e2


@settings(max_examples=20, deadline=None)
@given(orders, st.integers(1, 6))
def test_bessel_average_extremes(nu, n):
    assert bessel_S(nu, n, n) == bessel_mzv_2n(nu, n)
    assert bessel_S_star(nu, n, n) == bessel_mzsv_2n(nu, n)


@FAST
@given(positive, st.fractions(min_value=Fraction(1, 5), max_value=9, max_denominator=9), st.integers(1, 8))
def test_lommel_three_term_recurrence(nu, z, m):
    lhs = lommel_poly(m + 1, nu, z)
    assert lhs == 2 * (nu + m) / z * lommel_poly(m, nu, z) - lommel_poly(m - 1, nu, z)


@FAST
@given(st.fractions(max_denominator=1000))
def test_parameters_stay_exact(x):
    assert as_param(x) == x
    assert as_param(str(x)) == x
