from fractions import Fraction

import mpmath
import pytest
from mpmath import mpf

from conftest import AIRY_ZETA, HALF
from szeta.errors import DepthLimitError, DivergenceError, ParameterError
from szeta.mzv import (
    Composition,
    PowerSumTable,
    averages,
    compositions,
    convolution_defects,
    dissect_mzv,
    mzv_nested_sum,
    mzv_tables,
    mzv_tables_from_zeros,
    newton_e_from_p,
    newton_h_from_p,
    power_sums_from_zeros,
    zeta_from_series,
)
from szeta.powerseries import TruncatedSeries
from szeta.zerofinder import airy_zeros, bessel_zeros

# zeta(2k) / pi^(2k)
RIEMANN_SCALED = [Fraction(1, 6), Fraction(1, 90), Fraction(1, 945), Fraction(1, 9450)]


@pytest.fixture(scope="module")
def half_zeros():
    return bessel_zeros(HALF, 200)


def test_composition_basics():
    c = Composition((4, 2))
    assert c.weight == 6 and c.depth == 2
    assert c.scaled(2).parts == (8, 4)
    assert c.converges(1) and not Composition((1, 3)).converges(1)
    assert Composition((2, 2)).converges(Fraction(3, 2))
    assert not Composition((1, 2)).converges(Fraction(3, 2))
    with pytest.raises(ParameterError):
        Composition((0, 1))
    assert sorted(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]


def test_newton_exact():
    e = newton_e_from_p(RIEMANN_SCALED, 3)
    h = newton_h_from_p(RIEMANN_SCALED, 3)
    assert e == [1, Fraction(1, 6), Fraction(1, 120), Fraction(1, 5040)]
    assert h[2] == Fraction(7, 360)
    assert all(d == 0 for d in convolution_defects(e, h))
    with pytest.raises(ParameterError):
        newton_e_from_p(RIEMANN_SCALED[:2], 3)


def test_power_sums_corrected_tail(half_zeros, ctx):
    table = power_sums_from_zeros(half_zeros, 2, 4, ctx)
    for k in range(4):
        err = abs(table.values[k] - RIEMANN_SCALED[k])
        assert err <= table.truncation_error[k]
    assert table.truncation_error[0] < mpf(10) ** -20


def test_power_sums_bound_only(half_zeros, ctx):
    table = power_sums_from_zeros(half_zeros, 2, 2, ctx, tail="bound")
    err = mpf(1) / 6 - table.values[0]
    assert 0 < err <= table.truncation_error[0]


def test_power_sums_divergent_weight(ctx):
    zeros = airy_zeros(200, ctx)
    with pytest.raises(DivergenceError):
        power_sums_from_zeros(zeros, 1, 2, ctx)


def test_airy_power_sums_against_reference(ctx):
    zeros = airy_zeros(200, ctx)
    for w in (2, 3, 4, 5):
        table = power_sums_from_zeros(zeros, w, 1, ctx)
        assert abs(table.values[0] - mpf(AIRY_ZETA[w])) <= table.truncation_error[0] + mpf(10) ** -45


def test_tables_from_zeros_have_errors(half_zeros, ctx):
    tables = mzv_tables_from_zeros(half_zeros, 2, 4, ctx)
    for n, expected in enumerate([1, Fraction(1, 6), Fraction(1, 120), Fraction(1, 5040), Fraction(1, 362880)]):
        assert abs(tables.e[n] - mpf(expected.numerator) / expected.denominator) <= tables.e_error[n] + mpf(10) ** -50
    assert max(abs(d) for d in convolution_defects(tables.e, tables.h)) < mpf(10) ** -45


def test_nested_sums_riemann(half_zeros, ctx):
    value, bound = mzv_nested_sum(half_zeros, (2, 2), 1, False, ctx)
    assert abs(value - mpf(1) / 120) <= bound and bound < mpf(10) ** -20
    value, bound = mzv_nested_sum(half_zeros, (2, 2), 1, True, ctx)
    assert abs(value - mpf(7) / 360) <= bound
    z3 = mpmath.zeta(3)
    pi6 = mpmath.pi**6
    v42, b42 = mzv_nested_sum(half_zeros, (4, 2), 1, False, ctx)
    assert abs(v42 - (z3**2 - 4 * pi6 / 2835) / pi6) <= b42
    v24, b24 = mzv_nested_sum(half_zeros, (2, 4), 1, False, ctx)
    assert abs(v24 - (25 * mpmath.zeta(6) / 12 - z3**2) / pi6) <= b24


def test_nested_sum_scaling_and_limits(half_zeros, ctx):
    value, bound = mzv_nested_sum(half_zeros, (1,), 4, False, ctx)
    assert abs(value - mpf(1) / 90) <= bound
    with pytest.raises(DivergenceError):
        mzv_nested_sum(half_zeros, (1, 2), 1, False, ctx)
    with pytest.raises(DepthLimitError):
        mzv_nested_sum(half_zeros, (2,) * 7, 1, False, ctx)


def test_dissection_exact_table(ctx):
    e = [Fraction(1, f) for f in (1, 6, 120, 5040, 362880)]
    out = dissect_mzv(e, 2, ctx)
    assert abs(out[1] - mpf(1) / 90) < mpf(10) ** -45
    assert abs(out[2] - mpf(1) / 113400) < mpf(10) ** -45


def test_averages_both_paths(half_zeros, ctx):
    s41 = averages(half_zeros, 2, 2, 1, ctx=ctx)
    s42 = averages(half_zeros, 2, 2, 2, ctx=ctx)
    s62 = averages(half_zeros, 2, 3, 2, ctx=ctx)
    star = averages(half_zeros, 2, 2, 2, starred=True, ctx=ctx)
    assert abs(s41.value - mpf(1) / 90) < mpf(10) ** -40
    assert abs(s42.value - mpf(1) / 120) < mpf(10) ** -40
    assert abs(s62.value - mpf(1) / 1260) < mpf(10) ** -40
    assert abs(star.value - mpf(7) / 360) < mpf(10) ** -40
    assert len(s62.paths) == 2


def test_averages_from_exact_power_sums(ctx):
    table = PowerSumTable(2, tuple(RIEMANN_SCALED), (0, 0, 0, 0))
    assert abs(averages(table, 2, 3, 2, ctx=ctx).value - mpf(1) / 1260) < mpf(10) ** -45
    assert averages(table, 2, 2, 3, ctx=ctx).value == 0


def test_zeta_from_series_sinc():
    sinc = TruncatedSeries(tuple(Fraction((-1) ** (k // 2), _fact(k + 1)) if k % 2 == 0 else Fraction(0) for k in range(8)))
    zeta = zeta_from_series(sinc)
    # zeros +-k pi: sum z^-2 = 2 zeta(2)/pi^2 = 1/3, odd powers cancel
    assert zeta[1] == Fraction(1, 3)
    assert zeta[3] == Fraction(1, 45)
    assert zeta[0] == zeta[2] == 0


def test_mzv_tables_plain_list():
    tables = mzv_tables(RIEMANN_SCALED, 2)
    assert tables.e[2] == Fraction(1, 120)
    assert tables.h[2] == Fraction(7, 360)


def _fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out
