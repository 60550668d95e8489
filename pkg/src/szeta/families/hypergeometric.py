"""Zeros of the Kummer function Phi_{a,b}(z) = 1F1(a; a+b; z).

Closed forms for zeta_{a,b}({2}^n) and zeta_{a,b}({4}^n), the
hypergeometric Bernoulli numbers B_n^{(a,b)} = n! [z^n] 1/Phi_{a,b}(z),
the star values zeta*_{a,b}({2}^n) and the single zeta values.
Rational parameters give exact Fraction results.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from mpmath import mpc

from ..errors import ParameterError, PrecisionError
from ..mzv import zeta_from_series
from ..numkernel import DEFAULT_CONTEXT, PrecisionContext, as_param, hyp_pfq, is_exact, pochhammer, to_mp
from ..powerseries import TruncatedSeries, WeierstrassNormalization, hypergeometric_series, ps_mul, ps_recip
from .report import BernoulliSequence, agreement_tolerance, assert_agree

__all__ = [
    "hyp_mzv_2n",
    "hyp_mzv_4n",
    "hyp_bernoulli",
    "hyp_mzsv_2n",
    "hyp_zeta_gen",
    "ramanujan_product_coeff",
    "kummer_series",
]


def _params(a, b):
    a, b = as_param(a), as_param(b)
    if not a > 0 or not b > 0:
        raise ParameterError("need a > 0 and b > 0")
    return a, b


def _check_n(n):
    if n < 0:
        raise ParameterError("n must be nonnegative")


def _tag(a, b):
    return f"Hypergeometric({a}, {b})"


def kummer_series(a, b, order: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> TruncatedSeries:
    """Taylor series of 1F1(a; a+b; z)."""
    a, b = _params(a, b)
    return hypergeometric_series([a], [a + b], order, 1, 1, ctx)


def hyp_mzv_2n(a, b, n: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """zeta_{a,b}({2}^n) = (-1)^n (a)_n (b)_n / (n! (a+b)_n (a+b)_{2n})."""
    a, b = _params(a, b)
    _check_n(n)
    with ctx.workdps():
        num = pochhammer(a, n, ctx) * pochhammer(b, n, ctx)
        den = factorial(n) * pochhammer(a + b, n, ctx) * pochhammer(a + b, 2 * n, ctx)
        return (-1) ** n * num / den


def hyp_mzv_4n(a, b, n: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """zeta_{a,b}({4}^n) as a terminating 6F5 at -1 (2n + 1 terms)."""
    a, b = _params(a, b)
    _check_n(n)
    if n == 0:
        return Fraction(1) if is_exact(a) and is_exact(b) else to_mp(1)
    c = a + b
    half = Fraction(1, 2) if is_exact(c) else to_mp(0.5)
    upper = [-2 * n, 1 - 2 * n - c, 1 - 2 * n - c * half, 1 - 2 * n - (c + 1) * half, a, b]
    lower = [1 - 2 * n - a, 1 - 2 * n - b, c, c * half, (c + 1) * half]
    with ctx.workdps():
        series = hyp_pfq(upper, lower, -1, ctx)
        pre = pochhammer(a, 2 * n, ctx) * pochhammer(b, 2 * n, ctx)
        pre = pre / (pochhammer(c, 2 * n, ctx) * pochhammer(c, 4 * n, ctx) * factorial(2 * n))
        return (-1) ** n * pre * series


def _gbinom(x, k: int):
    """Generalized binomial x (x-1) ... (x-k+1) / k!."""
    out = Fraction(1) if is_exact(x) else to_mp(1)
    for i in range(k):
        out = out * (x - i)
    return out / factorial(k)


def hyp_bernoulli(a, b, N: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> BernoulliSequence:
    """B_0..B_{N-1} of 1/1F1(a; a+b; z) from the linear recurrence, checked against the series reciprocal."""
    a, b = _params(a, b)
    if N < 1:
        raise ParameterError("N must be positive")
    with ctx.workdps():
        values = [Fraction(1) if is_exact(a) and is_exact(b) else to_mp(1)]
        for n in range(1, N):
            acc = 0
            for k in range(n):
                acc += _gbinom(a + b + n - 1, k) * _gbinom(a - 1 + n - k, n - k) * values[k]
            values.append(-acc / _gbinom(a + b + n - 1, n))
        recip = ps_recip(kummer_series(a, b, N, ctx))
        for n in range(N):
            assert_agree(values[n], recip[n] * factorial(n), ctx, f"B_{n}^({a},{b})")
    return BernoulliSequence(_tag(a, b), tuple(values))


def hyp_mzsv_2n(a, b, n: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """zeta*_{a,b}({2}^n) = sum_k (-1)^k B_k B_{2n-k} / (k! (2n-k)!)."""
    a, b = _params(a, b)
    _check_n(n)
    bern = hyp_bernoulli(a, b, 2 * n + 1, ctx).values
    with ctx.workdps():
        total = 0
        for k in range(2 * n + 1):
            total += (-1) ** k * bern[k] * bern[2 * n - k] / (factorial(k) * factorial(2 * n - k))
        return total


def hyp_zeta_gen(a, b, K: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """[c_0, ..., c_K] with c_k = zeta_{a,b}(k + 1) for k >= 1 and c_0 = 0.

    Series division (b/(a+b)) (Phi_{a,b+1}/Phi_{a,b} - 1), cross-checked
    against the log-derivative of the genus-1 product with prefactor e^{a z/(a+b)}.
    """
    a, b = _params(a, b)
    if K < 1:
        raise ParameterError("K must be positive")
    order = K + 1
    with ctx.workdps():
        num = hypergeometric_series([a], [a + b + 1], order, 1, 1, ctx)
        den = kummer_series(a, b, order, ctx)
        ratio = ps_mul(num, ps_recip(den))
        factor = b / (a + b)
        coeffs = [factor * (ratio[0] - 1)] + [factor * ratio[k] for k in range(1, order)]
        zero = Fraction(0) if is_exact(a) and is_exact(b) else to_mp(0)
        norm = WeierstrassNormalization(0, (zero, a / (a + b)), 1)
        check = zeta_from_series(kummer_series(a, b, order + 1, ctx), norm)
        for k in range(order):
            assert_agree(coeffs[k], check[k], ctx, f"zeta_({a},{b})({k + 1})")
        return coeffs


def ramanujan_product_coeff(a, b, n: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """[z^{2n}] 1F1(a; a+b; iz) 1F1(a; a+b; -iz), from the 2F3 closed form.

    The direct complex series product is computed alongside; disagreement
    beyond 10^-(digits - 12) raises PrecisionError.
    """
    a, b = _params(a, b)
    _check_n(n)
    closed = hyp_mzv_2n(a, b, n, ctx)
    order = 2 * n + 1
    with ctx.workdps():
        base = kummer_series(a, b, order, ctx)
        plus = TruncatedSeries(tuple(to_mp(c) * mpc(0, 1) ** k for k, c in enumerate(base)))
        minus = TruncatedSeries(tuple(to_mp(c) * mpc(0, -1) ** k for k, c in enumerate(base)))
        direct = ps_mul(plus, minus)[2 * n]
        scale = sum(abs(to_mp(base[k]) * to_mp(base[2 * n - k])) for k in range(order))
        if abs(direct - to_mp(closed)) > agreement_tolerance(ctx) * max(1, scale):
            raise PrecisionError(f"2F3 coefficient {n} disagrees with the series product")
    return closed
