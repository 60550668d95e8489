"""Zeros a_k < 0 of Ai(z) (genus 1) and a'_k < 0 of Ai'(z).

Ai(z) Ai(-z) is even and free of the genus-1 exponential factors, which
gives closed forms for zeta_Ai({2}^n) with fractional Pochhammer symbols
(5/6)_{n/3}.  The Airy Bernoulli numbers are n! [z^n] Ai(0)/Ai(z).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import mpmath
from mpmath import mpf

from ..errors import ParameterError
from ..mzv import dissect_mzv, zeta_from_series
from ..numkernel import DEFAULT_CONTEXT, PrecisionContext, gamma, hyp_pfq, pochhammer, to_mp
from ..powerseries import TruncatedSeries, WeierstrassNormalization, ps_mul, ps_recip
from .bessel import bessel_mzv_4n
from .report import BernoulliSequence, IdentityReport, agreement_tolerance, assert_agree

__all__ = [
    "airy_constants",
    "airy_series",
    "airy_prime_series",
    "airy_mzv_2n",
    "airy_mzv_2n_routes",
    "airy_bessel_relation_check",
    "airy_mzv_4n",
    "airy_mzv_4n_routes",
    "airy_prime_mzv_2n",
    "airy_bernoulli",
    "airy_bernoulli_closed_forms",
    "airy_zeta",
    "airy_zeta_values",
    "airy_mzsv_2n",
]


def _check_n(n):
    if n < 0:
        raise ParameterError("n must be nonnegative")


def airy_constants(ctx: PrecisionContext = DEFAULT_CONTEXT):
    """(Ai(0), Ai'(0)) at working precision."""
    with ctx.workdps():
        ai0 = 1 / (mpf(3) ** (mpf(2) / 3) * gamma(Fraction(2, 3), ctx))
        aip0 = -1 / (mpf(3) ** (mpf(1) / 3) * gamma(Fraction(1, 3), ctx))
        return ai0, aip0


def _log_slope(ctx):
    ai0, aip0 = airy_constants(ctx)
    return aip0 / ai0


def airy_series(order: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> TruncatedSeries:
    """Taylor series of Ai(z)/Ai(0): t_{3m} = 1/(9^m m! (2/3)_m), t_{3m+1} = c/(9^m m! (4/3)_m), c = Ai'(0)/Ai(0)."""
    with ctx.workdps():
        c = _log_slope(ctx)
        coeffs = [mpf(0)] * order
        for k in range(order):
            m, res = divmod(k, 3)
            if res == 0:
                coeffs[k] = to_mp(Fraction(1, 9**m * factorial(m)) / pochhammer(Fraction(2, 3), m))
            elif res == 1:
                coeffs[k] = c * to_mp(Fraction(1, 9**m * factorial(m)) / pochhammer(Fraction(4, 3), m))
        return TruncatedSeries(tuple(coeffs))


def airy_prime_series(order: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> TruncatedSeries:
    """Taylor series of Ai'(z)/Ai'(0)."""
    with ctx.workdps():
        base = airy_series(order + 1, ctx)
        c = _log_slope(ctx)
        return TruncatedSeries(tuple((k + 1) * base[k + 1] / c for k in range(order)))


def airy_mzv_2n(n: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """zeta_Ai({2}^n) = 1 / (12^{n/3} n! (5/6)_{n/3}); exact Fraction when 3 | n."""
    _check_n(n)
    if n % 3 == 0:
        m = n // 3
        return Fraction(1, 12**m * factorial(n)) / pochhammer(Fraction(5, 6), m)
    with ctx.workdps():
        return 1 / (mpf(12) ** (mpf(n) / 3) * factorial(n) * pochhammer(Fraction(5, 6), Fraction(n, 3), ctx))


def _two_series_route(n, ctx):
    """(-1)^n [z^{2n}] Ai(z) Ai(-z) / Ai(0)^2."""
    base = airy_series(2 * n + 1, ctx)
    mirrored = TruncatedSeries(tuple(c if k % 2 == 0 else -c for k, c in enumerate(base)))
    return (-1) ** n * ps_mul(base, mirrored)[2 * n]


def _residue_route(n, ctx):
    """zeta_Ai({2}^n) through the Bessel {4} values (n = 0, 1 mod 3) or the 0F3 expansion (n = 2 mod 3)."""
    m, res = divmod(n, 3)
    scale = Fraction(2, 3) ** (4 * m)
    if res == 0:
        return scale * bessel_mzv_4n(Fraction(-1, 3), m, ctx)
    if res == 1:
        return to_mp(scale * bessel_mzv_4n(Fraction(1, 3), m, ctx)) * airy_mzv_2n(1, ctx)
    lead = gamma(Fraction(2, 3), ctx) ** 2 / (4 * mpmath.pi * mpf(3) ** (mpf(1) / 6))
    term = Fraction(1, 324**m * factorial(m))
    for p in (Fraction(4, 3), Fraction(3, 2), Fraction(5, 3)):
        term /= pochhammer(p, m)
    return lead * to_mp(term)


def airy_mzv_2n_routes(n: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> dict:
    """The closed form of zeta_Ai({2}^n) and its two independent cross-checks."""
    _check_n(n)
    with ctx.workdps():
        return {
            "closed_form": airy_mzv_2n(n, ctx),
            "series_product": _two_series_route(n, ctx),
            "residue_class": _residue_route(n, ctx),
        }


def airy_bessel_relation_check(n: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> IdentityReport:
    """zeta_Ai({2}^{3n}) = (2/3)^{4n} zeta_{-1/3}({4}^n) and zeta_Ai({2}^{3n+1}) / zeta_Ai({2}) = (2/3)^{4n} zeta_{1/3}({4}^n)."""
    _check_n(n)
    scale = Fraction(2, 3) ** (4 * n)
    tol = agreement_tolerance(ctx)
    with ctx.workdps():
        first_l, first_r = airy_mzv_2n(3 * n, ctx), scale * bessel_mzv_4n(Fraction(-1, 3), n, ctx)
        second_l = airy_mzv_2n(3 * n + 1, ctx) / airy_mzv_2n(1, ctx)
        second_r = scale * bessel_mzv_4n(Fraction(1, 3), n, ctx)
        d1 = abs(to_mp(first_l - first_r))
        d2 = abs(second_l - to_mp(second_r))
        cases = (
            {"identity": "triple", "n": n, "lhs": first_l, "rhs": first_r, "defect": d1},
            {"identity": "triple_plus_one", "n": n, "lhs": second_l, "rhs": second_r, "defect": d2},
        )
        worst = max(d1, d2)
        return IdentityReport("airy-bessel", {"n": n}, worst, tol, bool(worst <= tol), False, cases)


def _convolution_4n(n, ctx):
    total = mpf(0)
    for k in range(2 * n + 1):
        den = factorial(k) * factorial(2 * n - k)
        den = den * pochhammer(Fraction(5, 6), Fraction(k, 3), ctx) * pochhammer(Fraction(5, 6), Fraction(2 * n - k, 3), ctx)
        total += (-1) ** k / to_mp(den)
    return (-1) ** n * mpf(12) ** (-mpf(2 * n) / 3) * total


def _split_4f3(n, ctx):
    """The convolution regrouped by k mod 3 into three terminating 4F3 at -1."""
    t = Fraction(2 * n, 3)
    g56 = gamma(Fraction(5, 6), ctx)
    total = mpf(0)
    up0 = [-t, Fraction(1, 3) - t, Fraction(2, 3) - t, Fraction(1, 6) - t]
    total += g56 * to_mp(hyp_pfq(up0, [Fraction(1, 3), Fraction(2, 3), Fraction(5, 6)], -1, ctx)) / (gamma(t + Fraction(5, 6), ctx) * factorial(2 * n))
    if 2 * n >= 1:
        up1 = [Fraction(1, 3) - t, Fraction(2, 3) - t, 1 - t, Fraction(1, 2) - t]
        f = to_mp(hyp_pfq(up1, [Fraction(2, 3), Fraction(4, 3), Fraction(7, 6)], -1, ctx))
        total -= g56**2 * f / (gamma(Fraction(7, 6), ctx) * gamma(t + Fraction(1, 2), ctx) * factorial(2 * n - 1))
    if 2 * n >= 2:
        up2 = [Fraction(2, 3) - t, 1 - t, Fraction(4, 3) - t, Fraction(5, 6) - t]
        f = to_mp(hyp_pfq(up2, [Fraction(4, 3), Fraction(3, 2), Fraction(5, 3)], -1, ctx))
        total += g56**2 * f / (2 * gamma(Fraction(3, 2), ctx) * gamma(t + Fraction(1, 6), ctx) * factorial(2 * n - 2))
    return (-1) ** n * mpf(12) ** (-mpf(2 * n) / 3) * total


def _dissection_4n(n, ctx):
    table = [airy_mzv_2n(k, ctx) for k in range(2 * n + 1)]
    return dissect_mzv(table, 2, ctx)[n]


def airy_mzv_4n_routes(n: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> dict:
    """zeta_Ai({4}^n) by convolution, by the three-4F3 split and by root-of-unity dissection."""
    _check_n(n)
    with ctx.workdps():
        return {
            "convolution": _convolution_4n(n, ctx),
            "hypergeometric_split": _split_4f3(n, ctx),
            "dissection": _dissection_4n(n, ctx),
        }


def airy_mzv_4n(n: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """zeta_Ai({4}^n) = (-1)^n 12^{-2n/3} sum_k (-1)^k / (k! (2n-k)! (5/6)_{k/3} (5/6)_{(2n-k)/3})."""
    routes = airy_mzv_4n_routes(n, ctx)
    value = routes["convolution"]
    assert_agree(value, routes["hypergeometric_split"], ctx, f"zeta_Ai({{4}}^{n}) 4F3 split")
    assert_agree(value, routes["dissection"], ctx, f"zeta_Ai({{4}}^{n}) dissection")
    return value


def airy_prime_mzv_2n(n: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """zeta_Ai'({2}^n) = Gamma(1/3)^2 / (n! 2^{(2n+1)/3} 3^{(2n-3)/6} Gamma(1/2) Gamma((2n+1)/6)).

    Cross-checked against (-1)^n [z^{2n}] Ai'(z) Ai'(-z) / Ai'(0)^2.
    """
    _check_n(n)
    with ctx.workdps():
        den = factorial(n) * mpf(2) ** (mpf(2 * n + 1) / 3) * mpf(3) ** (mpf(2 * n - 3) / 6)
        den *= gamma(Fraction(1, 2), ctx) * gamma(Fraction(2 * n + 1, 6), ctx)
        value = gamma(Fraction(1, 3), ctx) ** 2 / den
        base = airy_prime_series(2 * n + 1, ctx)
        mirrored = TruncatedSeries(tuple(c if k % 2 == 0 else -c for k, c in enumerate(base)))
        assert_agree(value, (-1) ** n * ps_mul(base, mirrored)[2 * n], ctx, f"zeta_Ai'({{2}}^{n})")
        return value


def _a_sequence(N, alternating_signs, ctx):
    """a_j = j! [z^j] Ai(z)/Ai(0); with alternating_signs, a_{3n} and a_{3n+1} also carry (-1)^n."""
    series = airy_series(N, ctx)
    out = []
    for j in range(N):
        value = factorial(j) * series[j]
        if alternating_signs and (j // 3) % 2 == 1:
            value = -value
        out.append(value)
    return out


def airy_bernoulli(N: int, alternating_signs: bool = False, ctx: PrecisionContext = DEFAULT_CONTEXT) -> BernoulliSequence:
    """Airy Bernoulli numbers B_0..B_{N-1} with sum B_n z^n / n! = Ai(0)/Ai(z).

    Computed by the linear recurrence sum_k C(n,k) B_k a_{n-k} = n! delta_n
    and checked against the series reciprocal.  ``alternating_signs=True`` runs
    the recurrence with the alternating-sign a-sequence instead; that
    variant is returned unchecked since it is not the reciprocal series.
    """
    if N < 1:
        raise ParameterError("N must be positive")
    with ctx.workdps():
        a = _a_sequence(N, alternating_signs, ctx)
        values = [mpf(1)]
        for n in range(1, N):
            values.append(-sum(comb(n, k) * values[k] * a[n - k] for k in range(n)))
        if not alternating_signs:
            recip = ps_recip(airy_series(N, ctx))
            for n in range(N):
                assert_agree(values[n], factorial(n) * recip[n], ctx, f"Airy B_{n}")
        return BernoulliSequence("Airy", tuple(values))


def airy_bernoulli_closed_forms(ctx: PrecisionContext = DEFAULT_CONTEXT) -> dict:
    """Closed forms of B_1/1!, B_2/2!, B_3/3!, B_4/4! in terms of Gamma(1/3), Gamma(2/3).

    ``"4"`` is the variant with Gamma(1/3) and Gamma(2/3) exchanged inside the bracket;
    ``"4_corrected"`` is the value that matches the reciprocal series.
    """
    with ctx.workdps():
        g1, g2 = gamma(Fraction(1, 3), ctx), gamma(Fraction(2, 3), ctx)
        c3 = mpf(3) ** (mpf(1) / 3)
        b1 = c3 * g2 / g1
        return {
            "1": b1,
            "2": b1**2,
            "3": -mpf(1) / 6 + 3 * g2**3 / g1**3,
            "4": -(c3 / 4) * g2 * (g2**3 - 12 * g1**3) / g1**4,
            "4_corrected": -(c3 / 4) * g2 * (g1**3 - 12 * g2**3) / g1**4,
        }


def airy_zeta_values(K: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """[zeta_Ai(2), ..., zeta_Ai(K + 1)] by the Bernoulli recurrence.

    Cross-checked against the log-derivative of Ai(z)/Ai(0) = e^{cz} prod (1 - z/a_k) e^{z/a_k}.
    """
    if K < 1:
        raise ParameterError("K must be positive")
    with ctx.workdps():
        bern = airy_bernoulli(K + 2, ctx=ctx).values
        c = _log_slope(ctx)
        zeta = {}
        for n in range(1, K + 1):
            value = c * bern[n] / factorial(n) + bern[n + 1] / factorial(n)
            value -= sum(bern[r] / factorial(r) * zeta[n + 1 - r] for r in range(1, n))
            zeta[n + 1] = value
        norm = WeierstrassNormalization(0, (mpf(0), c), 1)
        check = zeta_from_series(airy_series(K + 2, ctx), norm)
        for n in range(1, K + 1):
            assert_agree(zeta[n + 1], check[n], ctx, f"zeta_Ai({n + 1})")
        return [zeta[k] for k in range(2, K + 2)]


def airy_zeta(n: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """zeta_Ai(n + 1) for n >= 1."""
    if n < 1:
        raise ParameterError("n must be >= 1")
    return airy_zeta_values(n, ctx)[-1]


def airy_mzsv_2n(n: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """zeta*_Ai({2}^n) = sum_{k=0}^{2n} (-1)^k B_k B_{2n-k} / (k! (2n-k)!)."""
    _check_n(n)
    with ctx.workdps():
        bern = airy_bernoulli(2 * n + 1, ctx=ctx).values
        return sum((-1) ** k * bern[k] * bern[2 * n - k] / (factorial(k) * factorial(2 * n - k)) for k in range(2 * n + 1))
