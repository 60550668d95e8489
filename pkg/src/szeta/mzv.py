"""Family-agnostic MZV machinery over a sequence of zeros.

Power sums, Newton identities between e/h/p tables, the nested-sum
oracle with a head/tail split, root-of-unity dissection, the weight/depth
averages S and S*, and zeta values from a Weierstrass log-derivative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from mpmath import mp, mpf

from .errors import DepthLimitError, DivergenceError, ParameterError, PrecisionError
from .numkernel import DEFAULT_CONTEXT, PrecisionContext, is_exact, to_mp
from .powerseries import (
    TruncatedSeries,
    WeierstrassNormalization,
    ps_logderiv,
    ps_mul,
    ps_root_of_unity_product,
)
from .zerofinder import ZeroFamily, ZeroSequence, asymptotic_zero, tail_power_sum

__all__ = [
    "MAX_DEPTH",
    "Composition",
    "PowerSumTable",
    "MzvTables",
    "AverageValue",
    "compositions",
    "power_sums_from_zeros",
    "newton_e_from_p",
    "newton_h_from_p",
    "mzv_tables",
    "mzv_tables_from_zeros",
    "convolution_defects",
    "mzv_nested_sum",
    "dissect_mzv",
    "averages",
    "zeta_from_series",
]

MAX_DEPTH = 6


@dataclass(frozen=True)
class Composition:
    """Exponent tuple (s_1, ..., s_r) of a multiple zeta value; s_1 sits on the largest index."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts or any(p < 1 for p in parts):
            raise ParameterError("a composition needs at least one part, all >= 1")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    def scaled(self, factor: int) -> "Composition":
        return Composition(tuple(factor * p for p in self.parts))

    def converges(self, tail_exponent) -> bool:
        """Absolute convergence when |z_n| grows like n^(1/rho): every leading partial weight exceeds j*rho."""
        rho = Fraction(tail_exponent)
        total = 0
        for j, p in enumerate(self.parts, 1):
            total += p
            if total <= j * rho:
                return False
        return True

    def is_repeated(self) -> bool:
        return len(set(self.parts)) == 1


def compositions(n: int, k: int):
    """All compositions of n into exactly k positive parts, in lexicographic order."""
    if k == 0:
        return [()] if n == 0 else []
    if k > n:
        return []
    out = []
    for cuts in combinations(range(1, n), k - 1):
        bounds = (0,) + cuts + (n,)
        out.append(tuple(bounds[i + 1] - bounds[i] for i in range(k)))
    return out


@dataclass(frozen=True)
class PowerSumTable:
    """values[k] = zeta_G((k + 1) s) with an absolute error bound per row."""

    base_exponent: int
    values: tuple
    truncation_error: tuple
    absolute: tuple = ()

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class MzvTables:
    """e[k] = zeta_G({s}^k), h[k] = zeta*_G({s}^k), with e[0] = h[0] = 1."""

    base_exponent: int
    e: tuple
    h: tuple
    e_error: tuple = ()
    h_error: tuple = ()
    power_sums: PowerSumTable | None = None


@dataclass(frozen=True)
class AverageValue:
    """S_G(weight, depth) or its starred version, with the values of both paths."""

    weight: int
    depth: int
    value: object
    starred: bool
    error_bound: object = 0
    paths: tuple = field(default=())


# Tails ---------------------------------------------------------------------


@lru_cache(maxsize=4096)
def _tail(family: ZeroFamily, weight: int, start: int, prec: int):
    with mp.workprec(prec):
        return tail_power_sum(family, weight, start)


def _tail_sum(family, weight, start):
    return _tail(family, weight, start, mp.prec)


def _model_error(zeros: ZeroSequence):
    """Twice the largest relative model error over the last few computed zeros."""
    n = zeros.count
    worst = mpf(0)
    for k in range(max(1, n - 4), n + 1):
        z = zeros[k - 1]
        worst = max(worst, abs(z - asymptotic_zero(zeros.family, k)) / abs(z))
    return 2 * worst + mpf(10) ** (-(mp.dps - 5))


def _integral_tail_bound(zeros: ZeroSequence, weight: int):
    """Sum_{n > N} |z_n|^-w <= C^-w (N - d)^(1 - w/rho) / (w/rho - 1)."""
    family = zeros.family
    rho = family.tail_exponent
    ratio = Fraction(weight) / rho
    if ratio <= 1:
        raise DivergenceError(f"zeta over {family.tag} diverges at weight {weight}")
    base = zeros.count - family.tail_offset
    if base < 1:
        raise ParameterError("too few zeros for the integral tail bound")
    r = to_mp(ratio)
    return family.tail_constant() ** (-weight) * mpf(base) ** (1 - r) / (r - 1)


def _check_weight(zeros: ZeroSequence, weight: int):
    if Fraction(weight) <= zeros.family.tail_exponent:
        raise DivergenceError(f"zeta over {zeros.family.tag} diverges at weight {weight}")


class _TailData:
    """Tail sums beyond the computed zeros, corrected by the asymptotic model or only bounded."""

    def __init__(self, zeros: ZeroSequence, corrected: bool):
        self.zeros = zeros
        self.corrected = corrected
        self.eps = _model_error(zeros) if corrected else None
        self._cache = {}

    def get(self, weight):
        """(signed tail value, error of that value, bound on the absolute tail)."""
        if weight in self._cache:
            return self._cache[weight]
        _check_weight(self.zeros, weight)
        if self.corrected:
            value, absolute = _tail_sum(self.zeros.family, weight, self.zeros.count)
            err = 2 * weight * self.eps * absolute + absolute * mpf(10) ** (-(mp.dps - 5))
            out = (value, err, absolute)
        else:
            bound = _integral_tail_bound(self.zeros, weight)
            out = (mpf(0), bound, bound)
        self._cache[weight] = out
        return out


# Power sums and Newton identities -------------------------------------------


def power_sums_from_zeros(zeros: ZeroSequence, s: int, K: int, ctx: PrecisionContext = DEFAULT_CONTEXT, tail: str = "corrected") -> PowerSumTable:
    """zeta_G(k s) for k = 1..K over the computed zeros plus a tail.

    ``tail="corrected"`` adds the sum over the asymptotic zero model beyond
    the last computed zero, with a bound from the measured model error.
    ``tail="bound"`` adds nothing and reports the integral-comparison bound.
    """
    if tail not in ("corrected", "bound"):
        raise ParameterError("tail must be 'corrected' or 'bound'")
    _check_weight(zeros, s)
    with ctx.workdps():
        tails = _TailData(zeros, tail == "corrected")
        values, errors, absolute = [], [], []
        for k in range(1, K + 1):
            w = k * s
            head = mpf(0)
            head_abs = mpf(0)
            for z in zeros:
                term = z ** (-w)
                head += term
                head_abs += abs(term)
            tval, terr, tabs = tails.get(w)
            values.append(_real_if_possible(head + tval))
            errors.append(terr + mpf(10) ** (-(ctx.digits + 2)) * head_abs)
            absolute.append(head_abs + tabs)
        for k in range(K - 2, -1, -1):
            errors[k] = max(errors[k], errors[k + 1])
    return PowerSumTable(s, tuple(values), tuple(errors), tuple(absolute))


def _real_if_possible(x):
    if hasattr(x, "imag") and x.imag == 0:
        return x.real
    return x


def _p_list(P):
    return list(P.values) if isinstance(P, PowerSumTable) else list(P)


def newton_e_from_p(P, N: int):
    """e_0..e_N from power sums P[0] = p_1, ...: k e_k = sum_i (-1)^(i-1) e_{k-i} p_i."""
    p = _p_list(P)
    if len(p) < N:
        raise ParameterError(f"need {N} power sums, got {len(p)}")
    one = Fraction(1) if all(is_exact(x) for x in p[:N]) else mpf(1)
    e = [one]
    for k in range(1, N + 1):
        acc = 0
        for i in range(1, k + 1):
            term = e[k - i] * p[i - 1]
            acc = acc + term if i % 2 else acc - term
        e.append(acc / k)
    return e


def newton_h_from_p(P, N: int):
    """h_0..h_N from power sums: k h_k = sum_i h_{k-i} p_i."""
    p = _p_list(P)
    if len(p) < N:
        raise ParameterError(f"need {N} power sums, got {len(p)}")
    one = Fraction(1) if all(is_exact(x) for x in p[:N]) else mpf(1)
    h = [one]
    for k in range(1, N + 1):
        acc = 0
        for i in range(1, k + 1):
            acc = acc + h[k - i] * p[i - 1]
        h.append(acc / k)
    return h


def _newton_majorant_error(pabs, perr, N):
    """Bound on the error of e_k or h_k caused by errors perr in the power sums."""
    # D_k = h_k(p + d) - h_k(p) for the all-positive (h-type) majorant,
    # k D_k = sum_i D_{k-i} (p_i + d_i) + h_{k-i}(p) d_i, free of cancellation
    base = newton_h_from_p(pabs, N)
    diff = [mpf(0)]
    for k in range(1, N + 1):
        acc = mpf(0)
        for i in range(1, k + 1):
            acc += diff[k - i] * (pabs[i - 1] + perr[i - 1]) + base[k - i] * perr[i - 1]
        diff.append(acc / k)
    return diff


def mzv_tables(P, N: int) -> MzvTables:
    """Both Newton tables from a PowerSumTable (or a plain list of power sums)."""
    e = newton_e_from_p(P, N)
    h = newton_h_from_p(P, N)
    if isinstance(P, PowerSumTable):
        err = _newton_majorant_error(list(P.absolute), list(P.truncation_error), N)
        return MzvTables(P.base_exponent, tuple(e), tuple(h), tuple(err), tuple(err), P)
    return MzvTables(0, tuple(e), tuple(h))


def mzv_tables_from_zeros(zeros: ZeroSequence, s: int, N: int, ctx: PrecisionContext = DEFAULT_CONTEXT, tail: str = "corrected") -> MzvTables:
    with ctx.workdps():
        return mzv_tables(power_sums_from_zeros(zeros, s, N, ctx, tail), N)


def convolution_defects(e, h):
    """sum_{k=0}^{n} (-1)^k e_k h_{n-k} - delta_{n,0} for each n."""
    out = []
    for n in range(min(len(e), len(h))):
        acc = 0
        for k in range(n + 1):
            term = e[k] * h[n - k]
            acc = acc - term if k % 2 else acc + term
        out.append(acc - (1 if n == 0 else 0))
    return out


# Nested sums -----------------------------------------------------------------


def _suffix_sums(weights, powers, count, starred, take_abs):
    """zeta over the head for every suffix of ``weights``: result[i] = zeta_H(weights[i:])."""
    r = len(weights)
    result = [None] * (r + 1)
    result[r] = mpf(1)
    cur = [mpf(1)] * (count + 1)
    for i in range(r - 1, -1, -1):
        row = powers[weights[i]]
        nxt = [mpf(0)] * (count + 1)
        acc = mpf(0)
        for n in range(1, count + 1):
            inner = cur[n] if starred else cur[n - 1]
            x = row[n - 1]
            acc += (abs(x) if take_abs else x) * inner
            nxt[n] = acc
        cur = nxt
        result[i] = cur[count]
    return result


def mzv_nested_sum(zeros: ZeroSequence, composition, s_scale: int = 1, starred: bool = False, ctx: PrecisionContext = DEFAULT_CONTEXT, tail: str = "corrected"):
    """Nested sum over zeros with strictly (or, if starred, weakly) decreasing indices.

    Returns (value, error_bound).  The sum is split at the last computed
    zero: the head is an exact dynamic programme over the computed zeros;
    tail pieces with repeated exponents come from Newton identities on
    tail power sums, any other tail piece is only bounded.
    """
    if not isinstance(composition, Composition):
        composition = Composition(tuple(composition))
    comp = composition.scaled(s_scale)
    if comp.depth > MAX_DEPTH:
        raise DepthLimitError(f"depth {comp.depth} exceeds {MAX_DEPTH}")
    if tail not in ("corrected", "bound"):
        raise ParameterError("tail must be 'corrected' or 'bound'")
    if not comp.converges(zeros.tail_exponent):
        raise DivergenceError(f"nested sum {comp.parts} diverges over {zeros.family.tag}")
    parts = comp.parts
    with ctx.workdps():
        powers = {w: [z ** (-w) for z in zeros] for w in set(parts)}
        head = _suffix_sums(parts, powers, zeros.count, starred, False)
        head_abs = _suffix_sums(parts, powers, zeros.count, starred, True)
        tails = _TailData(zeros, tail == "corrected")
        value = head[0]
        bound = mpf(10) ** (-(ctx.digits + 2)) * head_abs[0]
        for j in range(1, len(parts) + 1):
            lead = parts[:j]
            absolute = mpf(1)
            for w in lead:
                absolute *= tails.get(w)[2]
            if tails.corrected and len(set(lead)) == 1:
                tval = _repeated_tail(tails, lead[0], j, starred)
                terr = 2 * sum(lead) * tails.eps * absolute + absolute * mpf(10) ** (-(ctx.digits + 2))
                value += tval * head[j]
                bound += terr * head_abs[j]
            else:
                bound += absolute * head_abs[j]
        return _real_if_possible(value), bound


def _repeated_tail(tails: _TailData, w: int, j: int, starred: bool):
    p = [tails.get(w * i)[0] for i in range(1, j + 1)]
    table = newton_h_from_p(p, j) if starred else newton_e_from_p(p, j)
    return table[j]


# Dissection --------------------------------------------------------------------


def dissect_mzv(e_at_s, m: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """zeta_G({m s}^n) for n = 0..(len-1)//m from the table zeta_G({s}^l).

    Coefficient extraction from prod_j A(w^j t) with A(t) = sum_l (-1)^l e_l t^l.
    """
    if m < 1:
        raise ParameterError("m must be positive")
    e = list(e_at_s)
    with ctx.workdps():
        signed = TruncatedSeries(tuple(to_mp(x) if k % 2 == 0 else -to_mp(x) for k, x in enumerate(e)))
        product = ps_root_of_unity_product(signed, m, ctx)
        out = []
        for n in range((len(e) - 1) // m + 1):
            c = product[m * n]
            out.append(c if n % 2 == 0 else -c)
    return out


# Averages ------------------------------------------------------------------------


def _series_newton(pseries, k, starred):
    """E_k (or H_k) from t-series power sums p_1..p_k in the ring of truncated series."""
    order = pseries[0].order
    one = TruncatedSeries.constant(mpf(1), order)
    table = [one]
    for j in range(1, k + 1):
        acc = TruncatedSeries.constant(mpf(0), order)
        for i in range(1, j + 1):
            term = ps_mul(table[j - i], pseries[i - 1])
            acc = acc - term if (not starred and i % 2 == 0) else acc + term
        table.append(acc * (mpf(1) / j))
    return table[k]


def _average_from_power_sums(values, n, k, starred):
    """[t^n] of e_k (or h_k) in the variables x_i = sum_m t^m u_i^m."""
    pseries = []
    for j in range(1, k + 1):
        coeffs = [mpf(0)] * (n + 1)
        for m in range(j, n + 1):
            coeffs[m] = comb(m - 1, j - 1) * values[m - 1]
        pseries.append(TruncatedSeries(tuple(coeffs)))
    return _series_newton(pseries, k, starred)[n]


def averages(source, s: int, n: int, k: int, starred: bool = False, ctx: PrecisionContext = DEFAULT_CONTEXT, path: str = "both") -> AverageValue:
    """S_G(s n, k): sum of zeta_G(s a_1, ..., s a_k) over compositions a of n into k parts.

    ``source`` is a ZeroSequence (both paths available) or a PowerSumTable
    with base exponent s (generating-product path only).  With
    ``path="both"`` the nested-sum path and the generating-product path
    must agree within their combined bounds, else PrecisionError.
    """
    if k < 0 or n < 0:
        raise ParameterError("n and k must be nonnegative")
    if k > n or (k == 0 and n > 0):
        return AverageValue(s * n, k, mpf(0), starred, mpf(0))
    if n == 0:
        return AverageValue(0, 0, mpf(1), starred, mpf(0))
    is_zeros = isinstance(source, ZeroSequence)
    if path not in ("both", "nested", "product"):
        raise ParameterError("path must be 'both', 'nested' or 'product'")
    if path == "both" and not is_zeros:
        path = "product"
    results = []
    with ctx.workdps():
        if path in ("both", "nested"):
            if not is_zeros:
                raise ParameterError("the nested-sum path needs zeros")
            if k > MAX_DEPTH:
                raise DepthLimitError(f"depth {k} exceeds {MAX_DEPTH}")
            total, bound = mpf(0), mpf(0)
            for comp in compositions(n, k):
                v, b = mzv_nested_sum(source, comp, s, starred, ctx)
                total += v
                bound += b
            results.append((total, bound))
        if path in ("both", "product"):
            table = power_sums_from_zeros(source, s, n, ctx) if is_zeros else source
            if table.base_exponent != s or len(table) < n:
                raise ParameterError("power-sum table does not match the requested weight")
            vals = list(table.values)
            value = _average_from_power_sums(vals, n, k, starred)
            absolute = list(table.absolute) if table.absolute else [abs(v) for v in vals]
            hi = _average_from_power_sums([a + d for a, d in zip(absolute, table.truncation_error)], n, k, True)
            lo = _average_from_power_sums(absolute, n, k, True)
            results.append((value, hi - lo + mpf(10) ** (-(ctx.digits + 2))))
        if len(results) == 2:
            (v1, b1), (v2, b2) = results
            if abs(v1 - v2) > b1 + b2 + mpf(10) ** (-(ctx.digits - 12)):
                raise PrecisionError(f"averages disagree: |{v1} - {v2}| exceeds bounds")
        value, bound = results[-1]
        return AverageValue(s * n, k, _real_if_possible(value), starred, bound, tuple(_real_if_possible(v) for v, _ in results))


# Weierstrass log-derivative --------------------------------------------------------


def zeta_from_series(psi: TruncatedSeries, norm: WeierstrassNormalization = WeierstrassNormalization()):
    """Coefficients of m/z + P'(z) - psi'(z)/psi(z): list L with L[k] = zeta_G(k + 1).

    ``psi`` may carry the factor z^m (it is shifted out) and e^{P(z)}
    (added back through ``norm.exp_poly``).  Entries with k < genus are the
    residual coefficients and vanish for a correctly normalized input.
    """
    m = norm.origin_multiplicity
    coeffs = psi.coefficients[m:]
    if len(coeffs) < 2:
        raise ParameterError("series too short after removing the zero at the origin")
    shifted = TruncatedSeries(coeffs)
    c0 = shifted[0]
    shifted = shifted * (Fraction(1) / c0 if is_exact(c0) else 1 / c0)
    log_d = ps_logderiv(shifted)
    return [-c + norm.poly_derivative_coefficient(k) for k, c in enumerate(log_d.coefficients)]
