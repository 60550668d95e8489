"""Ordered zeros of j_nu, Ai, Ai' and the diagonal Kummer function.

Zeros are refined by safeguarded Newton iteration on the Taylor series
(evaluated through mpmath's hypergeometric summation at raised precision),
starting from the classical asymptotic expansions.  The same expansions
drive the tail corrections used by the MZV engine.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import log

import mpmath
from mpmath import mp, mpc, mpf, pi

from .errors import ConvergenceError, ParameterError
from .numkernel import DEFAULT_CONTEXT, GUARD_DIGITS, PrecisionContext, to_mp
from .powerseries import TruncatedSeries, ps_pow

__all__ = [
    "ZeroFamily",
    "ZeroSequence",
    "BesselJ",
    "Airy",
    "AiryPrime",
    "KummerDiagonal",
    "evaluate_family",
    "bessel_zeros",
    "airy_zeros",
    "airy_prime_zeros",
    "kummer_zeros_diagonal",
    "family_zeros",
    "asymptotic_zero",
    "tail_power_sum",
    "clear_zero_cache",
    "load_zero_cache",
    "save_zero_cache",
]

KINDS = ("BesselJ", "Airy", "AiryPrime", "KummerDiagonal")


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(mpmath.nstr(to_mp(x), 30, strip_zeros=True))


@dataclass(frozen=True)
class ZeroFamily:
    """Which function the zeros belong to, with its (rational) parameter."""

    kind: str
    param: Fraction | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(f"unknown zero family {self.kind!r}")
        if self.kind in ("BesselJ", "KummerDiagonal"):
            if self.param is None:
                raise ParameterError(f"{self.kind} needs a parameter")
            p = _as_fraction(self.param)
            object.__setattr__(self, "param", p)
            if self.kind == "BesselJ" and p <= -1:
                raise ParameterError("Bessel order must exceed -1")
            if self.kind == "KummerDiagonal" and p <= 0:
                raise ParameterError("Kummer parameter must be positive")
        elif self.param is not None:
            raise ParameterError(f"{self.kind} takes no parameter")

    @property
    def tag(self) -> str:
        return self.kind if self.param is None else f"{self.kind}({self.param})"

    @property
    def tail_exponent(self) -> Fraction:
        """Growth order rho: |z_n| ~ C n^(1/rho)."""
        return Fraction(3, 2) if self.kind in ("Airy", "AiryPrime") else Fraction(1)

    @property
    def tail_offset(self) -> int:
        """d with |z_n| >= C (n - d)^(1/rho) for every n > d."""
        return 2 if self.kind == "KummerDiagonal" else 1

    def tail_constant(self):
        if self.kind in ("Airy", "AiryPrime"):
            return (3 * pi / 2) ** (mpf(2) / 3)
        return +pi

    def __str__(self):
        return self.tag


def BesselJ(nu) -> ZeroFamily:
    return ZeroFamily("BesselJ", nu)


def Airy() -> ZeroFamily:
    return ZeroFamily("Airy")


def AiryPrime() -> ZeroFamily:
    return ZeroFamily("AiryPrime")


def KummerDiagonal(a) -> ZeroFamily:
    return ZeroFamily("KummerDiagonal", a)


@dataclass(frozen=True)
class ZeroSequence:
    """First ``count`` zeros of a family, ordered by increasing magnitude."""

    family: ZeroFamily
    zeros: tuple
    digits: int

    @property
    def count(self) -> int:
        return len(self.zeros)

    @property
    def tail_exponent(self) -> Fraction:
        return self.family.tail_exponent

    @property
    def tail_constant(self):
        return self.family.tail_constant()

    def __len__(self):
        return len(self.zeros)

    def __getitem__(self, index):
        return self.zeros[index]

    def __iter__(self):
        return iter(self.zeros)

    def head(self, count: int) -> "ZeroSequence":
        if count > self.count:
            raise ParameterError("requested more zeros than available")
        return ZeroSequence(self.family, self.zeros[:count], self.digits)


# Function values ----------------------------------------------------------


def _airy_constants():
    ai0 = 1 / (mpmath.cbrt(9) * mpmath.gamma(mpf(2) / 3))
    aip0 = -1 / (mpmath.cbrt(3) * mpmath.gamma(mpf(1) / 3))
    return ai0, aip0


def _guard(family: ZeroFamily, z) -> int:
    size = float(abs(z))
    if family.kind in ("Airy", "AiryPrime"):
        return int((2.0 / 3.0) * size**1.5 / log(10)) + 10
    return int(size / log(10)) + 10


def _raw_values(family: ZeroFamily, z, series: bool = True):
    """(f(z), f'(z)) at the current working precision.

    ``series=False`` lets mpmath choose its own method (asymptotic at large |z|).
    """
    kind = family.kind
    if kind == "BesselJ":
        nu = to_mp(family.param)
        w = -z * z / 4
        value = mpmath.hyp0f1(nu + 1, w, force_series=series)
        deriv = -z / (2 * (nu + 1)) * mpmath.hyp0f1(nu + 2, w, force_series=series)
        return value, deriv
    if kind == "KummerDiagonal":
        a = to_mp(family.param)
        value = mpmath.hyp1f1(a, 2 * a, z, force_series=series)
        deriv = mpmath.hyp1f1(a + 1, 2 * a + 1, z, force_series=series) / 2
        return value, deriv
    ai0, aip0 = _airy_constants()
    x = z**3 / 9
    ai = ai0 * mpmath.hyp0f1(mpf(2) / 3, x, force_series=series) + aip0 * z * mpmath.hyp0f1(mpf(4) / 3, x, force_series=series)
    aip = ai0 * z * z / 2 * mpmath.hyp0f1(mpf(5) / 3, x, force_series=series) + aip0 * mpmath.hyp0f1(mpf(1) / 3, x, force_series=series)
    if kind == "Airy":
        return ai, aip
    return aip, z * ai


def evaluate_family(family: ZeroFamily, z, ctx: PrecisionContext = DEFAULT_CONTEXT, derivative: bool = False):
    """Value of j_nu, Ai, Ai' or 1F1(a; 2a; z) at z from the Taylor series.

    With ``derivative=True`` returns the pair (f(z), f'(z)).
    """
    zz = to_mp(z)
    with ctx.workdps(_guard(family, zz)):
        zz = to_mp(z) if not isinstance(z, (mpf, mpc)) else z
        value, deriv = _raw_values(family, zz)
    if derivative:
        return value, deriv
    return value


# Asymptotic models --------------------------------------------------------


def _mcmahon_coefficients(nu):
    """u_j with z = beta (1 + sum_j u_j beta^(-2j)), beta = (k + nu/2 - 1/4) pi."""
    mu = 4 * to_mp(nu) ** 2
    a1 = (mu - 1) / 8
    a3 = 4 * (mu - 1) * (7 * mu - 31) / (3 * 8**3)
    a5 = 32 * (mu - 1) * (83 * mu**2 - 982 * mu + 3779) / (15 * 8**5)
    a7 = 64 * (mu - 1) * (6949 * mu**3 - 153855 * mu**2 + 1585743 * mu - 6277237) / (105 * 8**7)
    return [-a1, -a3, -a5, -a7]


_AIRY_T = [mpf(5) / 48, -mpf(5) / 36, mpf(77125) / 82944, -mpf(108056875) / 6967296]
_AIRY_U = [-mpf(7) / 48, mpf(35) / 288, -mpf(181223) / 207360, mpf(18683371) / 1244160]


def _model(family: ZeroFamily):
    """(shift, scale, power, correction coefficients, sign).

    The n-th zero is modelled as sign * t^power * (1 + sum_j c_j t^(-2j))
    with t = scale * (n - shift).
    """
    kind = family.kind
    if kind in ("BesselJ", "KummerDiagonal"):
        nu = family.param if kind == "BesselJ" else family.param - Fraction(1, 2)
        shift = Fraction(1, 4) - nu / 2
        return to_mp(shift), +pi, mpf(1), _mcmahon_coefficients(nu), 1
    if kind == "Airy":
        return mpf(1) / 4, 3 * pi / 2, mpf(2) / 3, list(_AIRY_T), -1
    return mpf(3) / 4, 3 * pi / 2, mpf(2) / 3, list(_AIRY_U), -1


def _model_value(family: ZeroFamily, n: int):
    shift, scale, power, coeffs, sign = _model(family)
    t = scale * (n - shift)
    x = 1 / (t * t)
    corr = mpf(1)
    xp = mpf(1)
    last = mpf(1)
    for c in coeffs:
        xp *= x
        term = c * xp
        # asymptotic series: stop once terms grow
        if abs(term) >= abs(last):
            break
        corr += term
        last = term
    return sign * t**power * corr


def asymptotic_zero(family: ZeroFamily, n: int):
    """Asymptotic approximation to the n-th zero (1-based)."""
    if family.kind == "KummerDiagonal":
        pair = (n + 1) // 2
        j = _model_value(family, pair)
        return mpc(0, 2 * j) if n % 2 else mpc(0, -2 * j)
    return _model_value(family, n)


def tail_power_sum(family: ZeroFamily, weight: int, start: int, terms: int = 14):
    """Sum over the asymptotic model of z_n^(-weight) for n > start.

    Returns (signed sum, sum of absolute values).  Each model zero is
    expanded in powers of 1/t^2 and summed with Hurwitz zeta functions.
    """
    if family.kind == "KummerDiagonal":
        if start % 2:
            raise ParameterError("Kummer tails start after a complete conjugate pair")
        bessel = BesselJ(family.param - Fraction(1, 2))
        _, absolute = tail_power_sum(bessel, weight, start // 2, terms)
        factor = 2 * mpf(2) ** (-weight)
        return factor * mpmath.cospi(mpf(weight) / 2) * absolute, factor * absolute
    shift, scale, power, coeffs, sign = _model(family)
    series = TruncatedSeries(tuple([mpf(1)] + coeffs + [mpf(0)] * (terms - len(coeffs) - 1)))
    expansion = ps_pow(series, -weight)
    absolute = mpf(0)
    for j, d in enumerate(expansion.coefficients):
        s = weight * power + 2 * j
        absolute += d * scale ** (-s) * mpmath.zeta(s, start + 1 - shift)
    signed = absolute if (sign > 0 or weight % 2 == 0) else -absolute
    return signed, abs(absolute)


# Root finding -------------------------------------------------------------

COARSE_DIGITS = 20


def _refine(family, guess, lo, hi, ctx, index):
    """Safeguarded Newton on the real function x -> f(sign * x) over [lo, hi].

    The bracket and the first steps run at low precision; the last steps at full precision.
    """
    sign = -1 if family.kind in ("Airy", "AiryPrime") else 1

    # Newton runs on mpmath's own evaluation; the forced-series residual check certifies the result
    def f_and_df(x, digits):
        with mp.workdps(digits + GUARD_DIGITS):
            v, d = _raw_values(family, sign * x, series=False)
        return v, sign * d

    coarse = min(COARSE_DIGITS, ctx.digits)
    flo, _ = f_and_df(lo, coarse)
    fhi, _ = f_and_df(hi, coarse)
    if flo * fhi > 0:
        raise ConvergenceError(f"{family.tag}: no sign change bracketing zero #{index}")
    x = guess if lo < guess < hi else (lo + hi) / 2
    bracket = (lo, hi)
    for digits in (coarse, ctx.digits + GUARD_DIGITS):
        # low-precision signs near the root are noise, so each stage starts from the full bracket
        lo, hi = bracket
        target = mpf(10) ** (-(digits - 5 if digits == coarse else ctx.digits + 5))
        for _ in range(200):
            v, d = f_and_df(x, digits)
            if v == 0:
                break
            if (v > 0) == (flo > 0):
                lo = x
            else:
                hi = x
            step = v / d if d != 0 else None
            if step is not None and abs(step) <= target * abs(x):
                x = x - step
                break
            nxt = x - step if step is not None else None
            if nxt is None or not lo < nxt < hi:
                nxt = (lo + hi) / 2
                step = nxt - x
            x = nxt
            if abs(step) <= target * abs(x):
                break
        else:
            raise ConvergenceError(f"{family.tag}: Newton iteration failed at zero #{index}")
    return x


def _compute_real_zeros(family: ZeroFamily, count: int, ctx: PrecisionContext):
    with ctx.workdps():
        guesses = [abs(_model_value(family, k)) for k in range(1, count + 2)]
        out = []
        lower = mpf(0)
        for k in range(1, count + 1):
            g = guesses[k - 1]
            hi = (g + guesses[k]) / 2
            if k > 1:
                lower = max((guesses[k - 2] + g) / 2, out[-1] * (1 + mpf(10) ** (-ctx.digits)))
            x = _refine(family, g, lower, hi, ctx, k)
            out.append(x)
        sign = -1 if family.kind in ("Airy", "AiryPrime") else 1
        zeros = tuple(sign * x for x in out)
    _check_residuals(family, zeros, ctx)
    return zeros


def _check_residuals(family, zeros, ctx):
    limit = mpf(10) ** (-(ctx.digits - 8))
    for k, z in enumerate(zeros, 1):
        if abs(evaluate_family(family, z, ctx)) >= limit:
            raise ConvergenceError(f"{family.tag}: residual too large at zero #{k}")


# Cache --------------------------------------------------------------------

_cache_lock = threading.Lock()
_cache: dict = {}


def clear_zero_cache():
    with _cache_lock:
        _cache.clear()


def _cached(family, count, digits):
    with _cache_lock:
        best = None
        for (fam, n, d), seq in _cache.items():
            if fam == family and n >= count and d >= digits:
                if best is None or (n, d) < (best.count, best.digits):
                    best = seq
        if best is None:
            return None
        return ZeroSequence(family, best.zeros[:count], digits)


def _store(seq: ZeroSequence):
    with _cache_lock:
        _cache.setdefault((seq.family, seq.count, seq.digits), seq)
        return _cache[(seq.family, seq.count, seq.digits)]


def family_zeros(family: ZeroFamily, count: int, ctx: PrecisionContext = DEFAULT_CONTEXT, cache_file=None) -> ZeroSequence:
    """First ``count`` zeros of any supported family (cached in process)."""
    if count < 1:
        raise ParameterError("count must be positive")
    if family.kind == "KummerDiagonal" and count % 2:
        raise ParameterError("diagonal Kummer zeros come in conjugate pairs; count must be even")
    hit = _cached(family, count, ctx.digits)
    if hit is not None:
        return hit
    if cache_file is not None:
        for seq in load_zero_cache(cache_file):
            _store(seq)
        hit = _cached(family, count, ctx.digits)
        if hit is not None:
            return hit
    if family.kind == "KummerDiagonal":
        bessel = family_zeros(BesselJ(family.param - Fraction(1, 2)), count // 2, ctx)
        zeros = []
        for j in bessel.zeros:
            zeros.append(mpc(0, 2 * j))
            zeros.append(mpc(0, -2 * j))
        zeros = tuple(zeros)
        _check_residuals(family, zeros, ctx)
    else:
        zeros = _compute_real_zeros(family, count, ctx)
    seq = _store(ZeroSequence(family, zeros, ctx.digits))
    if cache_file is not None:
        save_zero_cache(cache_file, seq)
    return seq


def bessel_zeros(nu, count: int, ctx: PrecisionContext = DEFAULT_CONTEXT, cache_file=None) -> ZeroSequence:
    """Positive zeros of the normalized Bessel function j_nu."""
    return family_zeros(BesselJ(nu), count, ctx, cache_file)


def airy_zeros(count: int, ctx: PrecisionContext = DEFAULT_CONTEXT, cache_file=None) -> ZeroSequence:
    """Zeros a_1 > a_2 > ... of Ai on the negative axis."""
    return family_zeros(Airy(), count, ctx, cache_file)


def airy_prime_zeros(count: int, ctx: PrecisionContext = DEFAULT_CONTEXT, cache_file=None) -> ZeroSequence:
    """Zeros of Ai' on the negative axis."""
    return family_zeros(AiryPrime(), count, ctx, cache_file)


def kummer_zeros_diagonal(a, count: int, ctx: PrecisionContext = DEFAULT_CONTEXT, cache_file=None) -> ZeroSequence:
    """Zeros of 1F1(a; 2a; z): the pairs +-2i j_{a-1/2,k}, +i first."""
    return family_zeros(KummerDiagonal(a), count, ctx, cache_file)


# Disk cache ---------------------------------------------------------------


def _family_from_record(tag, param):
    return ZeroFamily(tag, None if param == "-" else Fraction(param))


def load_zero_cache(path):
    """Read zero records, one per line: tag, parameter, index, re, im, digits."""
    import os

    if not os.path.exists(path):
        return []
    groups: dict = {}
    with open(path, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            tag, param, index, re, im, digits = line.split()
            key = (tag, param, int(digits))
            groups.setdefault(key, {})[int(index)] = (re, im)
    out = []
    for (tag, param, digits), rows in groups.items():
        family = _family_from_record(tag, param)
        count = 0
        while count + 1 in rows:
            count += 1
        if count == 0:
            continue
        with mp.workdps(digits + 10):
            zeros = []
            for k in range(1, count + 1):
                re, im = rows[k]
                z = mpf(re) if family.kind != "KummerDiagonal" else mpc(re, im)
                zeros.append(z)
        out.append(ZeroSequence(family, tuple(zeros), digits))
    return out


def save_zero_cache(path, seq: ZeroSequence):
    """Append the records of ``seq`` not already present in ``path``."""
    existing = set()
    try:
        with open(path, encoding="ascii") as fh:
            for line in fh:
                parts = line.split()
                if len(parts) == 6:
                    existing.add((parts[0], parts[1], parts[2], parts[5]))
    except FileNotFoundError:
        pass
    param = "-" if seq.family.param is None else str(seq.family.param)
    lines = []
    for k, z in enumerate(seq.zeros, 1):
        key = (seq.family.kind, param, str(k), str(seq.digits))
        if key in existing:
            continue
        zc = mpc(z)
        re = mpmath.nstr(zc.real, seq.digits + 5, strip_zeros=False, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)
        im = mpmath.nstr(zc.imag, seq.digits + 5, strip_zeros=False, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)
        lines.append(f"{seq.family.kind} {param} {k} {re} {im} {seq.digits}\n")
    with _cache_lock, open(path, "a", encoding="ascii") as fh:
        fh.writelines(lines)
