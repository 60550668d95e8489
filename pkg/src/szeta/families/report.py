"""Result containers shared by the family evaluators and identity checkers."""

from __future__ import annotations

from dataclasses import dataclass, field

from mpmath import mpf

from ..errors import PrecisionError
from ..numkernel import PrecisionContext, is_exact, to_mp


@dataclass(frozen=True)
class BernoulliSequence:
    """Generalized Bernoulli numbers values[0..count-1] of one family.

    ``family`` is a short tag such as ``"Hypergeometric(1, 2)"``, ``"Bessel(1/2)"`` or ``"Airy"``.
    """

    family: str
    values: tuple

    @property
    def count(self) -> int:
        return len(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of an identity check.

    ``exact`` reports rational checks, where ``passed`` means exact equality
    and ``max_abs_defect`` is 0 on success.  ``cases`` holds one dict per
    evaluated instance.
    """

    name: str
    parameters: dict
    max_abs_defect: object
    tolerance: object
    passed: bool
    exact: bool = False
    cases: tuple = field(default=())


def agreement_tolerance(ctx: PrecisionContext):
    """Relative tolerance for dual-path agreement: 10^-(digits - 12)."""
    return mpf(10) ** (-(ctx.digits - 12))


def assert_agree(x, y, ctx: PrecisionContext, what: str):
    """Require exact equality for rationals, else relative agreement within agreement_tolerance."""
    if is_exact(x) and is_exact(y):
        if x != y:
            raise PrecisionError(f"{what}: exact paths disagree ({x} != {y})")
        return
    with ctx.workdps():
        a, b = to_mp(x), to_mp(y)
        scale = max(mpf(1), abs(a), abs(b))
        if abs(a - b) > agreement_tolerance(ctx) * scale:
            raise PrecisionError(f"{what}: paths disagree by {abs(a - b)}")


def combine_reports(name: str, parameters: dict, reports) -> IdentityReport:
    """Merge several reports into one that passes only if all of them pass."""
    reports = list(reports)
    exact = all(r.exact for r in reports)
    cases = tuple(c for r in reports for c in r.cases)
    worst = max((r.max_abs_defect for r in reports), default=0)
    tol = max((r.tolerance for r in reports), default=0)
    return IdentityReport(name, parameters, worst, tol, all(r.passed for r in reports), exact, cases)
