from fractions import Fraction

import mpmath
import pytest
from mpmath import mpf

from szeta.errors import DivergenceError, ParameterError, PoleError
from szeta.numkernel import (
    PrecisionContext,
    as_param,
    classical_bernoulli,
    euler_at_half,
    gamma,
    hyp_pfq,
    nonpositive_integer,
    pochhammer,
    to_mp,
)


def test_context_validation():
    with pytest.raises(ParameterError):
        PrecisionContext(digits=10)
    with pytest.raises(ParameterError):
        PrecisionContext(series_tol=2)
    with pytest.raises(ParameterError):
        PrecisionContext(max_terms=4)
    ctx = PrecisionContext(digits=30)
    assert ctx.series_tol == mpf(10) ** -35
    assert ctx.with_digits(40).digits == 40


def test_gamma_values(ctx):
    assert gamma(1, ctx) == 1
    assert gamma(5, ctx) == 24
    product = gamma(Fraction(5, 6), ctx) * gamma(Fraction(1, 6), ctx)
    assert abs(product - 2 * mpmath.pi) < mpf(10) ** -48


@pytest.mark.parametrize("z", [0, -1, -7, Fraction(-3)])
def test_gamma_poles(z, ctx):
    with pytest.raises(PoleError):
        gamma(z, ctx)


def test_pochhammer(ctx):
    z = mpf("0.37")
    assert pochhammer(z, 0, ctx) == 1
    assert pochhammer(Fraction(3, 2), 2) == Fraction(15, 4)
    frac = pochhammer(Fraction(5, 6), Fraction(1, 3), ctx)
    expected = mpmath.gamma(mpf(7) / 6) / mpmath.gamma(mpf(5) / 6)
    assert abs(frac - expected) < mpf(10) ** -48
    assert abs(frac - mpf("0.821872779")) < mpf(10) ** -8


def test_pochhammer_pole(ctx):
    with pytest.raises(PoleError):
        pochhammer(-2, Fraction(1, 2), ctx)


def test_hyp_pfq_examples(ctx):
    assert abs(hyp_pfq([1], [1], 1, ctx) - mpmath.e) < mpf(10) ** -48
    nu = Fraction(1, 2)
    assert hyp_pfq([Fraction(1), Fraction(2)], [nu + 1, nu, Fraction(3, 4)], 0, ctx) == 1
    value = hyp_pfq([-2, -2 - nu], [nu + 1], -1, ctx)
    assert value == Fraction(-4, 3)
    kummer = -2 * mpmath.gamma(mpf(1.5)) * mpmath.gamma(2) / (mpmath.gamma(mpf(2.5)) * mpmath.gamma(1))
    assert abs(to_mp(value) - kummer) < mpf(10) ** -40


def test_hyp_pfq_against_mpmath(ctx):
    value = hyp_pfq([mpf("0.3")], [mpf("1.7"), mpf("2.2")], mpf(-30), ctx)
    assert abs(value - mpmath.hyp1f2(mpf("0.3"), mpf("1.7"), mpf("2.2"), -30)) < mpf(10) ** -45


def test_hyp_pfq_errors(ctx):
    with pytest.raises(DivergenceError):
        hyp_pfq([1, 2, 3], [4], mpf("0.5"), ctx)
    with pytest.raises(DivergenceError):
        hyp_pfq([Fraction(1, 2), 1], [2], 2, ctx)
    with pytest.raises(ParameterError):
        hyp_pfq([1], [-3], 1, ctx)
    with pytest.raises(ParameterError):
        hyp_pfq([-5], [-3], 1, ctx)


def test_hyp_pfq_terminating_lower_of_equal_magnitude():
    # (b)_k first vanishes at k = m + 1, so upper -m over lower -m is a finite sum
    assert hyp_pfq([-2], [-2], 1) == 1 + 1 + Fraction(1, 2)


def test_classical_bernoulli():
    assert classical_bernoulli(0) == 1
    assert classical_bernoulli(1) == Fraction(-1, 2)
    assert classical_bernoulli(2) == Fraction(1, 6)
    assert classical_bernoulli(3) == 0
    assert classical_bernoulli(12) == Fraction(-691, 2730)


def test_euler_at_half():
    assert euler_at_half(0) == 1
    assert euler_at_half(1) == 0
    assert euler_at_half(2) == Fraction(-1, 4)
    assert euler_at_half(4) == Fraction(5, 16)


def test_helpers():
    assert nonpositive_integer(Fraction(-3)) == 3
    assert nonpositive_integer(Fraction(1, 2)) is None
    assert nonpositive_integer(mpf(-2) + mpf(10) ** -70) == 2
    assert as_param("1/3") == Fraction(1, 3)
    assert as_param(0.5) == Fraction(1, 2)
