from fractions import Fraction

import mpmath
import pytest
from mpmath import mpf

from szeta.errors import ParameterError, ZeroConstantTermError
from szeta.powerseries import (
    TruncatedSeries,
    WeierstrassNormalization,
    hypergeometric_series,
    ps_dissect,
    ps_logderiv,
    ps_mul,
    ps_pow,
    ps_recip,
    ps_root_of_unity_product,
    ps_substitute_scale,
)


def sinc_series(order):
    """sin(z)/z = j_{1/2}(z)."""
    return TruncatedSeries(tuple(Fraction((-1) ** (k // 2), mpmath_fact(k + 1)) if k % 2 == 0 else Fraction(0) for k in range(order)))


def mpmath_fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def test_reciprocal_of_sinc_is_z_over_sin():
    recip = ps_recip(sinc_series(8))
    # z / sin z = 1 + z^2/6 + 7 z^4/360 + 31 z^6/15120
    assert recip[0] == 1
    assert recip[2] == Fraction(1, 6)
    assert recip[4] == Fraction(7, 360)
    assert recip[6] == Fraction(31, 15120)


def test_reciprocal_errors():
    with pytest.raises(ZeroConstantTermError):
        ps_recip(TruncatedSeries((0, 1, 2)))


def test_product_with_reciprocal_is_one():
    a = TruncatedSeries((mpf(2), mpf("0.3"), mpf(-1), mpf(5)))
    prod = ps_mul(a, ps_recip(a))
    assert abs(prod[0] - 1) < mpf(10) ** -50
    assert all(abs(c) < mpf(10) ** -50 for c in prod.coefficients[1:])


def test_logderiv_of_exponential():
    exp_series = TruncatedSeries(tuple(Fraction(3**k, mpmath_fact(k)) for k in range(6)))
    ld = ps_logderiv(exp_series)
    assert ld.coefficients == (3, 0, 0, 0, 0)


def test_pow_square_root():
    a = TruncatedSeries((Fraction(1), Fraction(2), Fraction(1)))  # (1 + z)^2
    root = ps_pow(a, Fraction(1, 2))
    assert root.coefficients == (1, 1, 0)
    with pytest.raises(ParameterError):
        ps_pow(TruncatedSeries((2, 1)), 2)


def test_dissect_and_scale():
    a = TruncatedSeries(tuple(range(10)))
    assert ps_dissect(a, 3, 1).coefficients == (1, 4, 7)
    assert ps_substitute_scale(TruncatedSeries((1, 1, 1)), 2).coefficients == (1, 2, 4)
    with pytest.raises(ParameterError):
        ps_dissect(a, 2, 2)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_root_of_unity_product_of_linear_factor(m, ctx):
    # prod_j (1 - w^j z) = 1 - z^m
    a = TruncatedSeries((Fraction(1), Fraction(-1)) + (Fraction(0),) * (2 * m))
    prod = ps_root_of_unity_product(a, m, ctx)
    expected = [0] * (2 * m + 2)
    expected[0], expected[m] = 1, -1
    assert all(abs(c - e) < mpf(10) ** -45 for c, e in zip(prod.coefficients, expected))


def test_hypergeometric_series_exact_and_numeric(ctx):
    exact = hypergeometric_series([], [Fraction(3, 2)], 7, Fraction(-1, 4), 2)
    assert exact.coefficients == sinc_series(7).coefficients
    numeric = hypergeometric_series([mpf("0.5")], [mpf("1.5")], 5, 1, 1, ctx)
    assert abs(numeric[3] - mpf(1) / (7 * 6)) < mpf(10) ** -50


def test_weierstrass_normalization():
    norm = WeierstrassNormalization(0, (0, Fraction(1, 2)), 1)
    assert norm.poly_derivative_coefficient(0) == Fraction(1, 2)
    assert norm.poly_derivative_coefficient(3) == 0
    with pytest.raises(ParameterError):
        WeierstrassNormalization(0, (0, 1, 1), 1)
