from fractions import Fraction

import mpmath
import pytest
from mpmath import mpf

from conftest import AIRY_PRIME_ZEROS, AIRY_ZEROS, BESSEL0_FIRST_ZERO
from szeta.errors import ParameterError
from szeta.numkernel import PrecisionContext
from szeta.zerofinder import (
    Airy,
    AiryPrime,
    BesselJ,
    KummerDiagonal,
    airy_prime_zeros,
    airy_zeros,
    asymptotic_zero,
    bessel_zeros,
    clear_zero_cache,
    evaluate_family,
    family_zeros,
    kummer_zeros_diagonal,
    load_zero_cache,
    save_zero_cache,
    tail_power_sum,
)


def test_family_validation():
    with pytest.raises(ParameterError):
        BesselJ(-1)
    with pytest.raises(ParameterError):
        KummerDiagonal(0)
    assert BesselJ(Fraction(1, 2)).tag == "BesselJ(1/2)"
    assert Airy().tail_exponent == Fraction(3, 2)
    assert KummerDiagonal(1).tail_offset == 2


def test_bessel_half_zeros_are_multiples_of_pi(ctx):
    zeros = bessel_zeros(Fraction(1, 2), 200, ctx)
    for k in (1, 2, 57, 200):
        assert abs(zeros[k - 1] - k * mpmath.pi) < mpf(10) ** -45


def test_bessel_zero_nu_zero(ctx):
    zeros = bessel_zeros(0, 3, ctx)
    assert abs(zeros[0] - mpf(BESSEL0_FIRST_ZERO)) < mpf(10) ** -44
    assert abs(zeros[2] - mpmath.besseljzero(0, 3)) < mpf(10) ** -40


@pytest.mark.parametrize("nu", [Fraction(-1, 3), Fraction(-9, 10)])
def test_negative_order_residuals(nu, ctx):
    zeros = bessel_zeros(nu, 30, ctx)
    for z in zeros:
        assert abs(mpmath.besselj(nu.numerator / mpf(nu.denominator), z)) < mpf(10) ** -40
    assert all(a < b for a, b in zip(zeros.zeros, zeros.zeros[1:]))


def test_airy_zeros(ctx):
    zeros = airy_zeros(200, ctx)
    for k, text in enumerate(AIRY_ZEROS):
        assert abs(zeros[k] - mpf(text)) < mpf(10) ** -44
    assert abs(zeros[199] - mpmath.airyaizero(200)) < mpf(10) ** -40


def test_airy_prime_zeros(ctx):
    zeros = airy_prime_zeros(200, ctx)
    for k, text in enumerate(AIRY_PRIME_ZEROS):
        assert abs(zeros[k] - mpf(text)) < mpf(10) ** -44
    assert abs(evaluate_family(AiryPrime(), zeros[150], ctx)) < mpf(10) ** -40


def test_kummer_diagonal_zeros(ctx):
    zeros = kummer_zeros_diagonal(1, 4, ctx)
    assert abs(zeros[0] - mpmath.mpc(0, 2 * mpmath.pi)) < mpf(10) ** -45
    assert abs(zeros[1] - mpmath.mpc(0, -2 * mpmath.pi)) < mpf(10) ** -45
    half = kummer_zeros_diagonal(Fraction(1, 2), 2, ctx)
    assert abs(half[0].imag - 2 * mpmath.besseljzero(0, 1)) < mpf(10) ** -40
    with pytest.raises(ParameterError):
        family_zeros(KummerDiagonal(1), 3, ctx)


def test_asymptotic_model_accuracy(ctx):
    zeros = airy_zeros(200, ctx)
    assert abs(zeros[199] - asymptotic_zero(Airy(), 200)) < mpf(10) ** -15
    bz = bessel_zeros(Fraction(5, 2), 200, ctx)
    assert abs(bz[199] - asymptotic_zero(BesselJ(Fraction(5, 2)), 200)) < mpf(10) ** -10


@pytest.mark.parametrize("family", [Airy(), BesselJ(Fraction(1, 3))])
def test_tail_model_matches_direct_sum(family, ctx):
    zeros = family_zeros(family, 200, ctx)
    direct = sum(zeros[k] ** -4 for k in range(100, 200))
    model_100 = tail_power_sum(family, 4, 100)[0]
    model_200 = tail_power_sum(family, 4, 200)[0]
    assert abs((model_100 - model_200) - direct) < abs(direct) * mpf(10) ** -20


def test_cache_round_trip(tmp_path):
    ctx = PrecisionContext(digits=20)
    path = tmp_path / "zeros.txt"
    seq = bessel_zeros(Fraction(1, 3), 5, ctx)
    save_zero_cache(path, seq)
    save_zero_cache(path, seq)
    lines = path.read_text().splitlines()
    assert len(lines) == 5
    assert lines[0].split()[:3] == ["BesselJ", "1/3", "1"]
    loaded = load_zero_cache(path)
    assert len(loaded) == 1
    assert all(abs(a - b) < mpf(10) ** -20 for a, b in zip(loaded[0].zeros, seq.zeros))
    clear_zero_cache()
    again = family_zeros(BesselJ(Fraction(1, 3)), 5, ctx, cache_file=path)
    assert all(abs(a - b) < mpf(10) ** -20 for a, b in zip(again.zeros, seq.zeros))
