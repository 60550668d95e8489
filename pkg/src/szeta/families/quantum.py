"""Spectral estimates from zeta values over a zero set read as energy levels.

For E_1 < E_2 < ... the sum Z(s) = sum E_n^{-s} is dominated by its first
term at large s, so Z(s)^{-1/s} approaches E_1, and the depth-r value
Z({s}^r)^{-1/s} approaches E_1 E_2 ... E_r.
"""

from __future__ import annotations

from mpmath import mpf

from ..errors import DepthLimitError, ParameterError
from ..mzv import mzv_tables, power_sums_from_zeros
from ..numkernel import DEFAULT_CONTEXT, PrecisionContext
from ..zerofinder import ZeroFamily, ZeroSequence, family_zeros

__all__ = ["ground_state_estimate", "energy_product_estimate", "estimate_ladder", "MAX_PRODUCT_DEPTH"]

MAX_PRODUCT_DEPTH = 4


def _zeros(source, count, ctx) -> ZeroSequence:
    if isinstance(source, ZeroSequence):
        return source
    if isinstance(source, ZeroFamily):
        if source.kind == "KummerDiagonal":
            raise ParameterError("energy levels need a real zero set")
        return family_zeros(source, count, ctx)
    raise ParameterError("source must be a ZeroFamily or ZeroSequence")


def _power_sums(zeros, s, depth, ctx, transform):
    if transform is None:
        return list(power_sums_from_zeros(zeros, s, depth, ctx).values)
    energies = [transform(z) for z in zeros]
    return [sum(e ** (-s * k) for e in energies) for k in range(1, depth + 1)]


def ground_state_estimate(source, s: int, count: int = 200, ctx: PrecisionContext = DEFAULT_CONTEXT, transform=None):
    """|Z(s)|^{-1/s} with Z(s) summed over |zeros| (or over ``transform(zero)`` when given).

    Without a transform the tail beyond the computed zeros is included;
    with a transform only the computed levels are summed.
    """
    return energy_product_estimate(source, s, 1, count, ctx, transform)


def energy_product_estimate(source, s: int, r: int, count: int = 200, ctx: PrecisionContext = DEFAULT_CONTEXT, transform=None):
    """|Z({s}^r)|^{-1/s}, an estimate of the product of the r lowest levels."""
    if r < 1:
        raise ParameterError("r must be positive")
    if r > MAX_PRODUCT_DEPTH:
        raise DepthLimitError(f"depth {r} exceeds {MAX_PRODUCT_DEPTH}")
    if s < 1:
        raise ParameterError("s must be a positive integer")
    zeros = _zeros(source, count, ctx)
    with ctx.workdps():
        p = _power_sums(zeros, s, r, ctx, transform)
        e = mzv_tables(p, r).e[r]
        return abs(e) ** (-mpf(1) / s)


def estimate_ladder(source, s_values, r: int = 1, reference=None, count: int = 200, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """[(s, estimate, |estimate - reference|)] along increasing s; the error is None without a reference."""
    zeros = _zeros(source, count, ctx)
    out = []
    for s in sorted(s_values):
        value = energy_product_estimate(zeros, s, r, count, ctx)
        err = None if reference is None else abs(value - reference)
        out.append((s, value, err))
    return out
