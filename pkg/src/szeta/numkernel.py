"""Arbitrary-precision kernel: Gamma, Pochhammer, pFq series and exact rationals.

Floating values are mpmath ``mpf``/``mpc``.  Exact inputs (``int`` and
``fractions.Fraction``) are kept exact wherever the result is rational.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb

import mpmath
from mpmath import mp, mpc, mpf

from .errors import DivergenceError, ParameterError, PoleError

__all__ = [
    "PrecisionContext",
    "DEFAULT_CONTEXT",
    "to_mp",
    "as_param",
    "is_exact",
    "nonpositive_integer",
    "gamma",
    "pochhammer",
    "hyp_pfq",
    "classical_bernoulli",
    "euler_at_half",
]

GUARD_DIGITS = 10


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision shared by every numerical routine.

    ``series_tol`` defaults to ``10**-(digits + 5)``.
    """

    digits: int = 50
    series_tol: object = None
    max_terms: int = 100_000

    def __post_init__(self):
        if not isinstance(self.digits, int) or self.digits < 15:
            raise ParameterError(f"digits must be an integer >= 15, got {self.digits!r}")
        if self.series_tol is None:
            object.__setattr__(self, "series_tol", mpf(10) ** (-(self.digits + 5)))
        else:
            tol = mpf(self.series_tol)
            if not 0 < tol < 1:
                raise ParameterError("series_tol must lie in (0, 1)")
            object.__setattr__(self, "series_tol", tol)
        if not isinstance(self.max_terms, int) or self.max_terms < 16:
            raise ParameterError("max_terms must be an integer >= 16")

    def with_digits(self, digits: int) -> "PrecisionContext":
        return replace(self, digits=digits, series_tol=None)

    def workdps(self, extra: int = GUARD_DIGITS):
        """mpmath precision block at ``digits + extra``."""
        return mp.workdps(self.digits + extra)

    @property
    def eps(self):
        """Nominal accuracy ``10**-digits``."""
        return mpf(10) ** (-self.digits)


DEFAULT_CONTEXT = PrecisionContext()


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def as_param(x):
    """Keep a parameter exact (Fraction) when it is given exactly, else convert to mpmath."""
    if isinstance(x, bool):
        raise ParameterError("boolean is not a parameter")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError:
            return to_mp(x)
    if isinstance(x, float):
        return Fraction(repr(x))
    return to_mp(x)


def to_mp(x):
    """Convert int, Fraction, str, float or complex to mpf/mpc at the current precision."""
    if isinstance(x, (mpf, mpc)):
        return x
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    if isinstance(x, int):
        return mpf(x)
    if isinstance(x, str):
        if "/" in x:
            return to_mp(Fraction(x))
        return mpmath.mpmathify(x)
    if isinstance(x, complex):
        return mpc(x)
    return mpmath.mpmathify(x)


def _snap_tol():
    return mpf(10) ** (-(mp.dps - 8))


def nonpositive_integer(x):
    """Return m >= 0 if ``x == -m`` (exactly, or within rounding for floats), else None."""
    if is_exact(x):
        x = Fraction(x)
        if x.denominator == 1 and x <= 0:
            return int(-x)
        return None
    v = to_mp(x)
    if isinstance(v, mpc):
        if abs(v.imag) > _snap_tol() * max(1, abs(v.real)):
            return None
        v = v.real
    if v > _snap_tol():
        return None
    r = mpmath.nint(v)
    if abs(v - r) <= _snap_tol() * max(1, abs(r)):
        return int(-r)
    return None


def _integer_value(x):
    """Return int(x) if x is an exact or snapped integer, else None."""
    if is_exact(x):
        x = Fraction(x)
        return int(x) if x.denominator == 1 else None
    v = to_mp(x)
    if isinstance(v, mpc):
        if v.imag != 0:
            return None
        v = v.real
    r = mpmath.nint(v)
    if abs(v - r) <= _snap_tol() * max(1, abs(r)):
        return int(r)
    return None


def gamma(z, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Gamma function; raises PoleError at 0, -1, -2, ..."""
    if nonpositive_integer(z) is not None:
        raise PoleError(f"Gamma has a pole at {z}")
    with ctx.workdps():
        return mpmath.gamma(to_mp(z))


def pochhammer(z, n, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Rising factorial (z)_n.

    Nonnegative integer n uses the direct product (exact for rational z).
    Any other n goes through Gamma(z + n) / Gamma(z).
    """
    m = _integer_value(n)
    if m is not None and m >= 0:
        if is_exact(z):
            out = Fraction(1)
            for j in range(m):
                out *= z + j
            return out
        with ctx.workdps():
            zz = to_mp(z)
            out = mpf(1)
            for j in range(m):
                out *= zz + j
            return out
    if is_exact(z) and is_exact(n):
        total = Fraction(z) + Fraction(n)
    else:
        with ctx.workdps():
            total = to_mp(z) + to_mp(n)
    if nonpositive_integer(total) is not None or nonpositive_integer(z) is not None:
        raise PoleError(f"Gamma-ratio form of ({z})_{n} hits a pole")
    with ctx.workdps():
        return gamma(total, ctx) / gamma(z, ctx)


def _termination_index(upper):
    """Largest k with a nonzero term, for a terminating series; None otherwise."""
    found = [m for m in (nonpositive_integer(a) for a in upper) if m is not None]
    return min(found) if found else None


def _check_lower(lower, last):
    for b in lower:
        m = nonpositive_integer(b)
        # (b)_k first vanishes at k = m + 1, so termination at k <= m is safe
        if m is not None and (last is None or last > m):
            raise ParameterError(f"lower parameter {b} is a nonpositive integer")


def _exact_sum(upper, lower, z, last):
    term = Fraction(1)
    total = Fraction(1)
    for k in range(last):
        num = Fraction(1)
        for a in upper:
            num *= a + k
        den = Fraction(k + 1)
        for b in lower:
            den *= b + k
        term = term * num * z / den
        total += term
    return total


def _float_sum(upper, lower, z, last, tol, max_terms):
    """Return (sum, largest |term|)."""
    upper = [to_mp(a) for a in upper]
    lower = [to_mp(b) for b in lower]
    z = to_mp(z)
    term = mpf(1)
    total = mpf(1)
    peak = mpf(1)
    small = 0
    k = 0
    while True:
        if last is not None and k >= last:
            break
        num = z
        for a in upper:
            num *= a + k
        den = mpf(k + 1)
        for b in lower:
            den *= b + k
        term = term * num / den
        total += term
        k += 1
        size = abs(term)
        if size > peak:
            peak = size
        if last is None:
            if size <= tol * abs(total):
                small += 1
                if small >= 2:
                    break
            else:
                small = 0
            if k >= max_terms:
                raise DivergenceError(f"pFq not converged after {max_terms} terms")
    return total, peak


def hyp_pfq(upper, lower, z, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Generalized hypergeometric series pFq(upper; lower; z).

    Terminating series with all-rational data are summed exactly and
    returned as ``Fraction``.  Otherwise the partial sums run until two
    consecutive terms fall below ``ctx.series_tol`` relative to the sum,
    with guard digits raised to cover cancellation.
    """
    upper = list(upper)
    lower = list(lower)
    last = _termination_index(upper)
    _check_lower(lower, last)
    if z == 0:
        return Fraction(1) if is_exact(z) else mpf(1)
    if last is None:
        p, q = len(upper), len(lower)
        if p > q + 1:
            raise DivergenceError(f"{p}F{q} diverges for nonzero argument")
        if p == q + 1:
            with ctx.workdps():
                if abs(to_mp(z)) > 1:
                    raise DivergenceError(f"{p}F{q} diverges for |z| > 1")
    if last is not None and all(is_exact(x) for x in upper + lower + [z]):
        return _exact_sum([Fraction(a) for a in upper], [Fraction(b) for b in lower], Fraction(z), last)
    guard = GUARD_DIGITS
    while True:
        with ctx.workdps(guard):
            total, peak = _float_sum(upper, lower, z, last, ctx.series_tol, ctx.max_terms)
            if total == 0:
                lost = guard
            else:
                lost = int(mpmath.log10(peak / abs(total))) if peak > abs(total) else 0
        if lost + 5 <= guard:
            return total
        guard = lost + GUARD_DIGITS + 5


_bernoulli_lock = threading.Lock()
_bernoulli_table = [Fraction(1)]
_euler_table = [1]


def classical_bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2 (generating function z/(e^z - 1))."""
    if n < 0:
        raise ParameterError("n must be nonnegative")
    with _bernoulli_lock:
        table = _bernoulli_table
        while len(table) <= n:
            m = len(table)
            acc = sum(comb(m + 1, k) * table[k] for k in range(m))
            table.append(-acc / (m + 1))
        return table[n]


def euler_at_half(n: int) -> Fraction:
    """Euler polynomial E_n(1/2) = E_n / 2^n, with E_n the (integer) Euler numbers."""
    if n < 0:
        raise ParameterError("n must be nonnegative")
    if n % 2:
        return Fraction(0)
    half = n // 2
    with _bernoulli_lock:
        table = _euler_table
        while len(table) <= half:
            m = len(table)
            table.append(-sum(comb(2 * m, 2 * k) * table[k] for k in range(m)))
        return Fraction(table[half], 2**n)

