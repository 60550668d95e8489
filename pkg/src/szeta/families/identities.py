"""Identity checkers: Krein expansion, Lommel orthogonality and the Gessel-Viennot family."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from mpmath import mpf

from ..errors import ParameterError
from ..mzv import power_sums_from_zeros
from ..numkernel import DEFAULT_CONTEXT, PrecisionContext, as_param, classical_bernoulli, pochhammer, to_mp
from ..zerofinder import bessel_zeros
from .bessel import _S_bernoulli_form, _S_zeta_form, alt_bessel_zeta, bessel_mzsv_2n, bessel_zeta_gen
from .report import IdentityReport, agreement_tolerance

__all__ = [
    "krein_check",
    "lommel_orthogonality_check",
    "lommel_expansion",
    "gessel_viennot_check",
    "range1_unnormalized_defect",
]


def krein_check(nu, n: int, N: int = 200, ctx: PrecisionContext = DEFAULT_CONTEXT) -> IdentityReport:
    """4 (nu+1) alternate-zeta(2n) against (-1)^n 4^n B_{2n,nu}(1/2) / (2n)!.

    Passes when the defect is within the acceleration error estimate.
    """
    nu = as_param(nu)
    if n < 1:
        raise ParameterError("n must be >= 1")
    with ctx.workdps():
        value, err = alt_bessel_zeta(nu, 2 * n, N, ctx)
        scale = 4 * (to_mp(nu) + 1)
        lhs, bound = scale * value, scale * err
        rhs = bessel_mzsv_2n(nu, n, ctx)
        defect = abs(lhs - to_mp(rhs))
        case = {"nu": nu, "n": n, "lhs": lhs, "rhs": rhs, "defect": defect, "bound": bound}
        return IdentityReport("krein", {"nu": nu, "n": n, "zeros": N}, defect, bound, bool(defect <= bound), False, (case,))


def lommel_expansion(r: int, nu):
    """[(weight, coefficient)] with R_{r,nu}(z) z^{-s-2} = sum coefficient z^{-(weight + s)}.

    Term j of R_{r,nu} contributes (-1)^j C(r-j, j) (nu+j)_{r-2j} 2^{r-2j} at weight r + 2 - 2j.
    """
    out = []
    for j in range(r // 2 + 1):
        coef = (-1) ** j * comb(r - j, j) * pochhammer(nu + j, r - 2 * j) * 2 ** (r - 2 * j)
        out.append((r + 2 - 2 * j, coef))
    return out


def lommel_orthogonality_check(nu, r: int, s: int, N: int = 200, ctx: PrecisionContext = DEFAULT_CONTEXT, two_sided: bool = False) -> IdentityReport:
    """sum_q R_{r,nu}(z_q) / z_q^{s+2} over zeros of j_{nu-1} against Gamma(nu) / (2^{r+2} Gamma(nu+r+1)) delta_{r,s}.

    The left side is expanded into Bessel zeta values at weights r+s+2-2j,
    each summed over N zeros plus the asymptotic tail.  ``two_sided=True``
    sums over the symmetric zero set {+z_q, -z_q} and compares with twice
    the right side.
    """
    nu = as_param(nu)
    if not nu > 0:
        raise ParameterError("need nu > 0")
    if not 0 <= s <= r:
        raise ParameterError("need 0 <= s <= r")
    zeros = bessel_zeros(nu - 1, N, ctx)
    with ctx.workdps():
        lhs, bound = mpf(0), mpf(0)
        for weight, coef in lommel_expansion(r, nu):
            table = power_sums_from_zeros(zeros, weight + s, 1, ctx)
            lhs += to_mp(coef) * table.values[0]
            bound += abs(to_mp(coef)) * table.truncation_error[0]
        rhs = Fraction(0)
        if r == s:
            rhs = 1 / (2 ** (r + 2) * pochhammer(nu, r + 1))
        if two_sided:
            lhs, bound, rhs = lhs * (1 + (-1) ** (r + s)), bound * 2, 2 * rhs
        defect = abs(lhs - to_mp(rhs))
        tol = max(bound, mpf(10) ** -6)
        case = {"nu": nu, "r": r, "s": s, "lhs": lhs, "rhs": rhs, "defect": defect, "bound": bound}
        params = {"nu": nu, "r": r, "s": s, "zeros": N, "two_sided": two_sided}
        return IdentityReport("lommel", params, defect, tol, bool(defect <= tol), False, (case,))


def _bernoulli_or_zero(m):
    return classical_bernoulli(m) if m >= 0 else Fraction(0)


def _gv_sum(n, k):
    """sum_{i <= (k-1)/2} C(2k-2i-1, k) C(2n+1, 2i+1) B_{2n-2i}."""
    return sum(comb(2 * k - 2 * i - 1, k) * comb(2 * n + 1, 2 * i + 1) * _bernoulli_or_zero(2 * n - 2 * i) for i in range((k - 1) // 2 + 1))


def _riemann_zeta_scaled(m):
    """zeta(2m) / pi^{2m} = (-1)^{m-1} 2^{2m-1} B_{2m} / (2m)!."""
    return (-1) ** (m - 1) * Fraction(2 ** (2 * m - 1)) * classical_bernoulli(2 * m) / factorial(2 * m)


def _S_zeta_riemann(n, k):
    """S(2n, k) / pi^{2n} from the zeta-value expression."""
    total = Fraction(0)
    for j in range((k - 1) // 2 + 1):
        term = _riemann_zeta_scaled(n - j) * comb(2 * k - 2 * j - 1, k)
        total += (-1) ** j * term / (Fraction(2) ** (2 * k - 2 * j - 2) * factorial(2 * j + 1))
    return total


def _S_bernoulli_riemann(n, k):
    """S(2n, k) / pi^{2n} from the Bernoulli-at-1/2 expression."""
    total = Fraction(0)
    for i in range(n - k + 1):
        b_half = (Fraction(2) ** (1 - 2 * i) - 1) * classical_bernoulli(2 * i)
        total += comb(n - i, k) * comb(2 * n + 1, 2 * i) * 2 ** (2 * i) * b_half
    return (-1) ** (n - k) * total / factorial(2 * n + 1)


def _lommel_sum(nu, zeta, n, k, top):
    total = Fraction(0)
    for j in range(top + 1):
        if n - j < 1:
            continue
        ratio = pochhammer(nu + 1 + j, k - 1 - 2 * j)
        total += zeta[n - j] * (-1) ** j * comb(k - 1 - j, j) * ratio / 4**j
    return total


def _cases(n, k, nu):
    """Yield (identity name, lhs, rhs) for every identity applicable at (n, k)."""
    half = Fraction(1, 2)
    if k > n:
        yield "range2", _gv_sum(n, k), Fraction(2 * n + 1, 2) * comb(2 * k - 2 * n, k)
    else:
        yield "range1_zeta_vs_bernoulli", _S_zeta_riemann(n, k), _S_bernoulli_riemann(n, k)
        lhs = (-1) ** (n - 1) * Fraction(2) ** (2 * n - 2 * k + 1) * _gv_sum(n, k) / factorial(2 * n + 1)
        yield "range1_normalized", lhs, _S_bernoulli_riemann(n, k)
        yield "bessel_S_half", _S_bernoulli_form(half, n, k, DEFAULT_CONTEXT), _S_zeta_form(half, n, k, DEFAULT_CONTEXT)
        if nu != half:
            yield "bessel_S_nu", _S_bernoulli_form(nu, n, k, DEFAULT_CONTEXT), _S_zeta_form(nu, n, k, DEFAULT_CONTEXT)
    for label, v in (("half", half), ("nu", nu)):
        if label == "nu" and nu == half:
            continue
        zeta = bessel_zeta_gen(v, n, DEFAULT_CONTEXT)
        if 1 <= n <= k // 2:
            rhs = (-1) ** (n - 1) * comb(k - 1 - n, n - 1) * pochhammer(v + 1 + n, k - 2 * n) / 4**n
            yield f"first_lommel_{label}", _lommel_sum(v, zeta, n, k, n - 1), rhs
        if (k + 1) // 2 < n <= k - 1:
            yield f"second_lommel_{label}", _lommel_sum(v, zeta, n, k, (k - 1) // 2), Fraction(0)


def gessel_viennot_check(n: int, k: int, nu=Fraction(1, 2)) -> IdentityReport:
    """Exact rational check of the Gessel-Viennot family at (n, k).

    k > n: the classical identity.  k <= n: the zeta-value and Bernoulli
    expressions of S(2n, k) / pi^{2n} agree, together with the normalized
    form of the Bernoulli sum and both Bessel S expressions.  The two
    Lommel-type identities are checked where they apply, at nu = 1/2 and
    at the given rational nu.
    """
    if n < 1 or k < 1:
        raise ParameterError("need n, k >= 1")
    nu = Fraction(nu)
    if not nu > -1:
        raise ParameterError("need nu > -1")
    cases = []
    worst = Fraction(0)
    for name, lhs, rhs in _cases(n, k, nu):
        defect = abs(lhs - rhs)
        worst = max(worst, defect)
        cases.append({"identity": name, "n": n, "k": k, "lhs": lhs, "rhs": rhs, "defect": defect})
    return IdentityReport("gessel-viennot", {"n": n, "k": k, "nu": nu}, worst, Fraction(0), worst == 0, True, tuple(cases))


def range1_unnormalized_defect(n: int, k: int) -> Fraction:
    """Difference of the two sides of the k <= n identity taken without the normalizing factor."""
    return _gv_sum(n, k) - _S_bernoulli_riemann(n, k)
