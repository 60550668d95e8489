"""Truncated power series with mpmath (or exact Fraction) coefficients.

Products, reciprocals and log-derivatives turn the zeros of an entire
function into elementary symmetric (e), complete (h) and power-sum (p)
generating functions.  Root-of-unity products and multisection handle
the strided variants such as ({4}^n) and the mod-3 Airy structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from mpmath import cospi, mpc, mpf, sinpi

from .errors import ParameterError, PrecisionError, ZeroConstantTermError
from .numkernel import DEFAULT_CONTEXT, PrecisionContext, is_exact, to_mp

__all__ = [
    "TruncatedSeries",
    "WeierstrassNormalization",
    "ps_mul",
    "ps_recip",
    "ps_logderiv",
    "ps_pow",
    "ps_dissect",
    "ps_substitute_scale",
    "ps_root_of_unity_product",
    "hypergeometric_series",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0, ..., c_{order-1} of a power series in z."""

    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        if not coeffs:
            raise ParameterError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def constant(cls, value, order: int) -> "TruncatedSeries":
        zero = Fraction(0) if is_exact(value) else mpf(0)
        return cls((value,) + (zero,) * (order - 1))

    @classmethod
    def polynomial(cls, coeffs, order: int) -> "TruncatedSeries":
        coeffs = list(coeffs)[:order]
        zero = Fraction(0) if all(is_exact(c) for c in coeffs) else mpf(0)
        return cls(tuple(coeffs) + (zero,) * (order - len(coeffs)))

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, index):
        return self.coefficients[index]

    def __iter__(self):
        return iter(self.coefficients)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coefficients[:order])

    def __add__(self, other):
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self[k] + other[k] for k in range(n)))

    def __sub__(self, other):
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self[k] - other[k] for k in range(n)))

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return ps_mul(self, other)
        return TruncatedSeries(tuple(c * other for c in self.coefficients))

    __rmul__ = __mul__

    def derivative(self) -> "TruncatedSeries":
        if self.order == 1:
            return TruncatedSeries((self[0] * 0,))
        return TruncatedSeries(tuple(k * self[k] for k in range(1, self.order)))

    def real(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(c.real if isinstance(c, mpc) else c for c in self.coefficients))


@dataclass(frozen=True)
class WeierstrassNormalization:
    """Data of the canonical product f(z) = z^m e^{P(z)} prod E_p(z / z_k).

    ``exp_poly`` lists the coefficients of P, constant term first.
    """

    origin_multiplicity: int = 0
    exp_poly: tuple = field(default_factory=tuple)
    genus: int = 0

    def __post_init__(self):
        poly = tuple(self.exp_poly)
        object.__setattr__(self, "exp_poly", poly)
        if self.origin_multiplicity < 0 or self.genus < 0:
            raise ParameterError("multiplicity and genus must be nonnegative")
        degree = max((k for k, c in enumerate(poly) if c != 0), default=0)
        if degree > self.genus:
            raise ParameterError(f"deg P = {degree} exceeds genus {self.genus}")

    def poly_derivative_coefficient(self, k: int):
        """Coefficient of z^k in P'(z)."""
        if k + 1 < len(self.exp_poly):
            return (k + 1) * self.exp_poly[k + 1]
        return 0


def ps_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the shorter order."""
    n = min(a.order, b.order)
    out = []
    for k in range(n):
        acc = a[0] * b[k]
        for j in range(1, k + 1):
            acc += a[j] * b[k - j]
        out.append(acc)
    return TruncatedSeries(tuple(out))


def ps_recip(a: TruncatedSeries) -> TruncatedSeries:
    """1 / A, requiring a nonzero constant term."""
    if a[0] == 0:
        raise ZeroConstantTermError("reciprocal of a series with zero constant term")
    inv0 = Fraction(1) / a[0] if is_exact(a[0]) else 1 / a[0]
    out = [inv0]
    for k in range(1, a.order):
        acc = a[1] * out[k - 1]
        for j in range(2, k + 1):
            acc += a[j] * out[k - j]
        out.append(-acc * inv0)
    return TruncatedSeries(tuple(out))


def ps_logderiv(a: TruncatedSeries) -> TruncatedSeries:
    """A'/A truncated at order - 1."""
    if a[0] == 0:
        raise ZeroConstantTermError("log-derivative of a series with zero constant term")
    if a.order == 1:
        raise ParameterError("log-derivative needs at least two coefficients")
    return ps_mul(a.derivative(), ps_recip(a.truncate(a.order - 1)))


def ps_pow(a: TruncatedSeries, alpha) -> TruncatedSeries:
    """A^alpha for A with constant term 1 (any real or complex alpha)."""
    if a[0] != 1:
        raise ParameterError("ps_pow expects a constant term equal to 1")
    out = [a[0] ** 0]
    for k in range(1, a.order):
        acc = 0
        for j in range(1, k + 1):
            acc += (alpha * j - (k - j)) * a[j] * out[k - j]
        out.append(acc / k)
    return TruncatedSeries(tuple(out))


def ps_dissect(a: TruncatedSeries, modulus: int, residue: int) -> TruncatedSeries:
    """Keep indices congruent to ``residue`` mod ``modulus``, reindexed by (index - residue) / modulus."""
    if modulus < 1 or not 0 <= residue < modulus:
        raise ParameterError("need modulus >= 1 and 0 <= residue < modulus")
    picked = a.coefficients[residue::modulus]
    if not picked:
        return TruncatedSeries((a[0] * 0,))
    return TruncatedSeries(picked)


def ps_substitute_scale(a: TruncatedSeries, factor) -> TruncatedSeries:
    """A(factor * z)."""
    out = []
    power = factor**0
    for c in a.coefficients:
        out.append(c * power)
        power = power * factor
    return TruncatedSeries(tuple(out))


def _unit_root_power(m: int, k: int):
    """exp(2 pi i k / m) with exact values at quarter turns."""
    k %= m
    if (4 * k) % m == 0:
        quarter = 4 * k // m
        return [mpc(1, 0), mpc(0, 1), mpc(-1, 0), mpc(0, -1)][quarter]
    angle = mpf(2 * k) / m
    return mpc(cospi(angle), sinpi(angle))


def ps_root_of_unity_product(a: TruncatedSeries, m: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> TruncatedSeries:
    """prod_{j=0}^{m-1} A(w^j z) with w = exp(2 pi i / m).

    The product is formed sequentially.  For real input the imaginary
    parts and the coefficients at indices not divisible by m must vanish;
    residues below ``10**-(digits-10)`` (relative to the absolute majorant
    product) are zeroed, larger ones raise PrecisionError.
    """
    if m < 1:
        raise ParameterError("m must be positive")
    real_input = all(not isinstance(c, mpc) for c in a.coefficients)
    with ctx.workdps():
        base = TruncatedSeries(tuple(to_mp(c) for c in a.coefficients))
        result = base
        majorant = TruncatedSeries(tuple(abs(c) for c in base.coefficients))
        bound = majorant
        for j in range(1, m):
            rotated = TruncatedSeries(
                tuple(c * _unit_root_power(m, j * k) for k, c in enumerate(base.coefficients))
            )
            result = ps_mul(result, rotated)
            bound = ps_mul(bound, majorant)
        tol = mpf(10) ** (-(ctx.digits - 10))
        out = []
        for k, c in enumerate(result.coefficients):
            scale = max(bound[k], mpf(10) ** (-ctx.digits))
            if k % m:
                if abs(c) > tol * scale:
                    raise PrecisionError(f"coefficient {k} of the root-of-unity product did not cancel")
                c = mpf(0)
            elif real_input and isinstance(c, mpc):
                if abs(c.imag) > tol * scale:
                    raise PrecisionError(f"imaginary residue at coefficient {k} exceeds tolerance")
                c = c.real
            out.append(c)
        return TruncatedSeries(tuple(out))


def hypergeometric_series(upper, lower, order: int, scale=1, step: int = 1, ctx: PrecisionContext = DEFAULT_CONTEXT) -> TruncatedSeries:
    """Series of pFq(upper; lower; scale * z^step) in z, truncated at ``order``.

    Exact (Fraction) coefficients when every parameter and ``scale`` is rational.
    """
    exact = all(is_exact(x) for x in list(upper) + list(lower) + [scale])
    if exact:
        return _hyp_coefficients(upper, lower, order, scale, step, True)
    with ctx.workdps():
        return _hyp_coefficients(upper, lower, order, scale, step, False)


def _hyp_coefficients(upper, lower, order, scale, step, exact):
    if exact:
        upper = [Fraction(x) for x in upper]
        lower = [Fraction(x) for x in lower]
        scale = Fraction(scale)
        zero, term = Fraction(0), Fraction(1)
    else:
        upper = [to_mp(x) for x in upper]
        lower = [to_mp(x) for x in lower]
        scale = to_mp(scale)
        zero, term = mpf(0), mpf(1)
    coeffs = [zero] * order
    k = 0
    while k * step < order:
        coeffs[k * step] = term
        num = scale
        for x in upper:
            num = num * (x + k)
        den = k + 1
        for x in lower:
            den = den * (x + k)
        if den == 0:
            raise ParameterError("lower parameter hits a nonpositive integer")
        term = term * num / den
        k += 1
    return TruncatedSeries(tuple(coeffs))

