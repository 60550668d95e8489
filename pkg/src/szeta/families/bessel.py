"""Zeros z_{nu,k} of the normalized Bessel function j_nu(z) = Gamma(nu+1) (z/2)^-nu J_nu(z).

j_nu(z) = 0F1(; nu+1; -z^2/4) is even of genus 0 in z^2, so all
({2}^n) and ({4}^n) values and the Bessel-Bernoulli numbers at 1/2 are
rational functions of nu (exact Fractions for rational nu).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from mpmath import mpf

from ..errors import DivergenceError, ParameterError, PoleError, PrecisionError
from ..mzv import zeta_from_series
from ..numkernel import DEFAULT_CONTEXT, PrecisionContext, as_param, is_exact, nonpositive_integer, pochhammer, to_mp
from ..powerseries import hypergeometric_series, ps_mul, ps_recip
from ..zerofinder import BesselJ, bessel_zeros, evaluate_family
from .report import BernoulliSequence, assert_agree

__all__ = [
    "bessel_series",
    "bessel_mzv_2n",
    "bessel_bernoulli_half",
    "bessel_bernoulli_sequence",
    "bessel_mzsv_2n",
    "bessel_mzv_4n",
    "bessel_S",
    "bessel_S_star",
    "bessel_zeta_gen",
    "alt_bessel_zeta",
    "lommel_poly",
]


def _nu(nu):
    nu = as_param(nu)
    if not nu > -1:
        raise ParameterError("need nu > -1")
    return nu


def _one(nu):
    return Fraction(1) if is_exact(nu) else to_mp(1)


def bessel_series(nu, order: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Coefficients of j_nu(sqrt(t)) in t: c_m = (-1/4)^m / (m! (nu+1)_m)."""
    nu = _nu(nu)
    return hypergeometric_series([], [nu + 1], order, Fraction(-1, 4), 1, ctx)


def _reciprocal_series(nu, order, ctx):
    """Coefficients d_m of 1/j_nu(sqrt(t)) in t."""
    return ps_recip(bessel_series(nu, order, ctx))


def bessel_mzv_2n(nu, n: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """zeta_{B,nu}({2}^n) = 1 / (4^n n! (nu+1)_n)."""
    nu = _nu(nu)
    if n < 0:
        raise ParameterError("n must be nonnegative")
    with ctx.workdps():
        return _one(nu) / (4**n * factorial(n) * pochhammer(nu + 1, n, ctx))


def bessel_mzv_4n(nu, n: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """zeta_{B,nu}({4}^n) = 1 / (16^n n! (nu+1)_{2n} (nu+1)_n)."""
    nu = _nu(nu)
    if n < 0:
        raise ParameterError("n must be nonnegative")
    with ctx.workdps():
        return _one(nu) / (16**n * factorial(n) * pochhammer(nu + 1, 2 * n, ctx) * pochhammer(nu + 1, n, ctx))


def bessel_bernoulli_half(nu, m: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """B_{m,nu}(1/2) = m! (-1)^{m/2} 2^{-m} [z^m] 1/j_nu(z); zero for odd m."""
    nu = _nu(nu)
    if m < 0:
        raise ParameterError("index must be nonnegative")
    if m % 2:
        return 0 * _one(nu)
    n = m // 2
    with ctx.workdps():
        d = _reciprocal_series(nu, n + 1, ctx)[n]
        return factorial(m) * (-1) ** n * d / 4**n


def bessel_bernoulli_sequence(nu, N: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> BernoulliSequence:
    """B_{0,nu}(1/2), ..., B_{N-1,nu}(1/2)."""
    nu = _nu(nu)
    if N < 1:
        raise ParameterError("N must be positive")
    half = (N + 1) // 2
    with ctx.workdps():
        d = _reciprocal_series(nu, half + 1, ctx)
        values = []
        for m in range(N):
            if m % 2:
                values.append(0 * _one(nu))
            else:
                values.append(factorial(m) * (-1) ** (m // 2) * d[m // 2] / 4 ** (m // 2))
    return BernoulliSequence(f"Bessel({nu})", tuple(values))


def bessel_mzsv_2n(nu, n: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """zeta*_{B,nu}({2}^n) = (-1)^n 4^n B_{2n,nu}(1/2) / (2n)!."""
    nu = _nu(nu)
    if n < 0:
        raise ParameterError("n must be nonnegative")
    with ctx.workdps():
        return (-1) ** n * 4**n * bessel_bernoulli_half(nu, 2 * n, ctx) / factorial(2 * n)


def bessel_zeta_gen(nu, P: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """[0, zeta_{B,nu}(2), ..., zeta_{B,nu}(2P)] from (t / (4(nu+1))) j_{nu+1}(sqrt t) / j_nu(sqrt t).

    Cross-checked against the log-derivative of j_nu(sqrt t).
    """
    nu = _nu(nu)
    if P < 1:
        raise ParameterError("P must be positive")
    with ctx.workdps():
        ratio = ps_mul(bessel_series(nu + 1, P, ctx), _reciprocal_series(nu, P, ctx))
        out = [0 * _one(nu)] + [ratio[p - 1] / (4 * (nu + 1)) for p in range(1, P + 1)]
        check = zeta_from_series(bessel_series(nu, P + 1, ctx))
        for p in range(1, P + 1):
            assert_agree(out[p], check[p - 1], ctx, f"zeta_B({nu})({2 * p})")
        return out


def _S_bernoulli_form(nu, n, k, ctx):
    total = 0
    for r in range(k, n + 1):
        coef = comb(r, k) * Fraction(4**n, 16**r) / (factorial(r) * factorial(2 * n - 2 * r))
        total += coef / pochhammer(nu + 1, r, ctx) * bessel_bernoulli_half(nu, 2 * n - 2 * r, ctx)
    return (-1) ** (n - k) * total


def _S_zeta_form(nu, n, k, ctx):
    zeta = bessel_zeta_gen(nu, n, ctx)
    total = 0
    for j in range((k - 1) // 2 + 1):
        ratio = pochhammer(nu + 1 + j, k - 1 - 2 * j, ctx)
        total += (-1) ** j * Fraction(1, 4**j) * comb(k - 1 - j, j) * ratio * zeta[n - j]
    return total / factorial(k)


def bessel_S(nu, n: int, k: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """S_{B,nu}(2n, k): sum of zeta_{B,nu}(2a_1, ..., 2a_k) over compositions of n into k parts.

    Computed from the Bernoulli expression and from the zeta expression;
    they must agree.
    """
    nu = _nu(nu)
    if not 1 <= k <= n:
        raise ParameterError("need 1 <= k <= n")
    with ctx.workdps():
        first = _S_bernoulli_form(nu, n, k, ctx)
        second = _S_zeta_form(nu, n, k, ctx)
        assert_agree(first, second, ctx, f"S_B({nu})({2 * n},{k})")
        return first


def bessel_S_star(nu, n: int, k: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """S*_{B,nu}(2n, k), the starred average.

    Closed form in B_{2r,nu}(1/2), cross-checked by coefficient extraction
    from j_nu(sqrt t) / j_nu(sqrt((1+y) t)).
    """
    nu = _nu(nu)
    if not 1 <= k <= n:
        raise ParameterError("need 1 <= k <= n")
    with ctx.workdps():
        total = 0
        for r in range(k, n + 1):
            coef = comb(r, k) * Fraction(16**r, 4**n) / (factorial(n - r) * factorial(2 * r))
            total += coef / pochhammer(nu + 1, n - r, ctx) * bessel_bernoulli_half(nu, 2 * r, ctx)
        closed = (-1) ** n * total
        c = bessel_series(nu, n + 1, ctx)
        d = _reciprocal_series(nu, n + 1, ctx)
        series = sum(c[n - m] * comb(m, k) * d[m] for m in range(k, n + 1))
        assert_agree(closed, series, ctx, f"S*_B({nu})({2 * n},{k})")
        return closed


def _alt_terms(nu, zeros, r, ctx):
    shifted = BesselJ(nu + 1)
    terms = []
    for z in zeros:
        terms.append(1 / (evaluate_family(shifted, z, ctx) * z ** (r + 2)))
    return terms


def _repeated_average(values, levels):
    """Apply ``levels`` rounds of neighbour averaging; returns the final row and the previous one."""
    row = list(values)
    prev = row
    for _ in range(levels):
        prev = row
        row = [(row[i] + row[i + 1]) / 2 for i in range(len(row) - 1)]
    return row, prev


def alt_bessel_zeta(nu, r: int, N: int = 200, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Alternate Bessel zeta sum_k 1 / (j_{nu+1}(z_{nu,k}) z_{nu,k}^{r+2}); returns (value, error_estimate).

    The summand alternates in sign with magnitude ~ k^{nu - r - 1/2}, so the
    partial sums are accelerated by repeated averaging.  The estimate adds
    the change between the last two averaging levels and the change when
    the last zero is dropped.
    """
    nu = _nu(nu)
    if r <= to_mp(nu) - mpf(0.5):
        raise DivergenceError(f"alternate Bessel zeta diverges at r = {r} for nu = {nu}")
    if N < 40:
        raise ParameterError("need at least 40 zeros")
    zeros = bessel_zeros(nu, N, ctx)
    levels = 25
    with ctx.workdps():
        terms = _alt_terms(nu, zeros, r, ctx)
        partial, acc = [], mpf(0)
        for t in terms:
            acc += t
            partial.append(acc)
        window = partial[-(levels + 1):]
        row, prev = _repeated_average(window, levels)
        value = row[0]
        shifted, _ = _repeated_average(partial[-(levels + 2):-1], levels)
        error = abs(value - prev[0]) + abs(value - prev[1]) + abs(value - shifted[0])
        error += mpf(10) ** (-(ctx.digits - 10))
        if not error < 1:
            raise PrecisionError("alternate Bessel zeta acceleration did not settle")
        return value, error


def lommel_poly(m: int, nu, z, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Lommel polynomial R_{m,nu}(z) = sum_j (-1)^j C(m-j, j) Gamma(nu+m-j)/Gamma(nu+j) (z/2)^{2j-m}."""
    if m < 0:
        raise ParameterError("m must be nonnegative")
    nu = as_param(nu)
    exact = is_exact(nu) and is_exact(z)
    if z == 0:
        raise ParameterError("z must be nonzero")
    for j in range(m // 2 + 1):
        if nonpositive_integer(nu + j) is not None or nonpositive_integer(nu + m - j) is not None:
            raise PoleError(f"Gamma pole in R_{m},{nu}")
    with ctx.workdps():
        half = Fraction(z) / 2 if exact else to_mp(z) / 2
        total = 0
        for j in range(m // 2 + 1):
            ratio = pochhammer(nu + j, m - 2 * j, ctx)
            total += (-1) ** j * comb(m - j, j) * ratio * half ** (2 * j - m)
        return total if exact else to_mp(total)
