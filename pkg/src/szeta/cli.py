"""Command-line front end: value tables, verification suites, zero tables and spectral estimates.

Subcommands::

    szeta values bessel --nu 1/2 --quantity mzv2n --n 0..4
    szeta verify gessel-viennot --max 20
    szeta zeros airy --count 3
    szeta estimate airy --s 10,20,30 --r 2

Precision comes from --digits, then the SZETA_DIGITS environment variable,
then the default of 50 digits.  Output is JSON (default) or CSV, written to
stdout or --out.  ``verify`` exits 0 exactly when every check passes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
from mpmath import mpf

from .errors import ParameterError, SzetaError
from .families import (
    airy_bessel_relation_check,
    airy_mzsv_2n,
    airy_mzv_2n,
    airy_mzv_4n,
    airy_prime_mzv_2n,
    airy_zeta,
    alt_bessel_zeta,
    bessel_bernoulli_half,
    bessel_mzsv_2n,
    bessel_mzv_2n,
    bessel_mzv_4n,
    bessel_S,
    bessel_S_star,
    bessel_zeta_gen,
    gessel_viennot_check,
    hyp_bernoulli,
    hyp_mzsv_2n,
    hyp_mzv_2n,
    hyp_mzv_4n,
    hyp_zeta_gen,
    krein_check,
    lommel_orthogonality_check,
)
from .families.airy import airy_bernoulli
from .families.quantum import energy_product_estimate
from .families.report import IdentityReport
from .mzv import MAX_DEPTH, convolution_defects, dissect_mzv, mzv_nested_sum, mzv_tables_from_zeros
from .numkernel import PrecisionContext, is_exact, to_mp
from .zerofinder import Airy, AiryPrime, BesselJ, KummerDiagonal, family_zeros

DEFAULT_DIGITS = 50
DEFAULT_ZEROS = 200
FAMILIES = ("bessel", "hyper", "airy", "airy-prime")
SUITES = ("oracle", "dissection", "gessel-viennot", "lommel", "krein", "airy-bessel", "star-convolution", "quantum")
RECORD_FIELDS = ("quantity", "parameters", "n", "k", "value", "error_bound", "provenance")


@dataclass(frozen=True)
class RunConfig:
    digits: int = DEFAULT_DIGITS
    zero_count: int = DEFAULT_ZEROS
    max_depth: int = 3
    family: str = "bessel"
    params: dict = field(default_factory=dict)
    fmt: str = "json"
    deterministic: bool = True

    def __post_init__(self):
        if self.digits < 15:
            raise ParameterError("digits must be >= 15")
        if self.zero_count < 10:
            raise ParameterError("zero count must be >= 10")
        if not 1 <= self.max_depth <= MAX_DEPTH:
            raise ParameterError(f"depth must lie in 1..{MAX_DEPTH}")

    @property
    def ctx(self) -> PrecisionContext:
        return PrecisionContext(digits=self.digits)


# Formatting ---------------------------------------------------------------------


def decimal_string(x, digits: int) -> str:
    """Decimal string of x with ``digits`` significant digits (never a binary float)."""
    with mpmath.workdps(digits + 10):
        v = to_mp(x)
        if isinstance(v, mpmath.mpc):
            if v.imag == 0:
                v = v.real
            else:
                return f"{mpmath.nstr(v.real, digits)}{'+' if v.imag >= 0 else '-'}{mpmath.nstr(abs(v.imag), digits)}j"
        return mpmath.nstr(v, digits)


def bound_string(x) -> str:
    return mpmath.nstr(to_mp(x), 3)


def record(quantity, params, n, k, value, bound, provenance, digits):
    """One output record; exact rationals get the error bound ``"exact"``."""
    if is_exact(value) and bound is None:
        err = "exact"
    else:
        err = bound_string(bound if bound is not None else mpf(10) ** (-(digits - 12)))
    return {
        "quantity": quantity,
        "parameters": {key: str(v) for key, v in sorted(params.items())},
        "n": n,
        "k": k,
        "value": decimal_string(value, digits),
        "error_bound": err,
        "provenance": provenance,
    }


def _jsonable(x, digits):
    if isinstance(x, dict):
        return {str(k): _jsonable(v, digits) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v, digits) for v in x]
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return str(x)
    return decimal_string(x, digits)


def report_dict(report: IdentityReport, digits: int) -> dict:
    return {
        "name": report.name,
        "parameters": _jsonable(report.parameters, digits),
        "max_abs_defect": _jsonable(report.max_abs_defect, digits),
        "tolerance": _jsonable(report.tolerance, digits),
        "passed": bool(report.passed),
        "exact": bool(report.exact),
        "cases": _jsonable(list(report.cases), digits),
    }


def render(rows, fmt: str, fields) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2, sort_keys=False) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        cells = []
        for f in fields:
            v = row.get(f, "")
            if isinstance(v, dict):
                v = ";".join(f"{k}={v[k]}" for k in sorted(v))
            elif isinstance(v, list):
                v = json.dumps(v, sort_keys=True)
            cells.append("" if v is None else v)
        writer.writerow(cells)
    return buf.getvalue()


def emit(text: str, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# Argument helpers ----------------------------------------------------------------


def parse_range(text: str):
    """``"a..b"`` (inclusive) or a single integer."""
    if text is None:
        return None
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def parse_param(text: str):
    """Rational parameter from ``"1/2"``, ``"0.5"`` or ``"2"``."""
    try:
        return Fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def resolve_digits(flag):
    if flag is not None:
        return flag
    env = os.environ.get("SZETA_DIGITS")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise ParameterError(f"SZETA_DIGITS must be an integer, got {env!r}") from exc
    return DEFAULT_DIGITS


def _family_params(args):
    family = args.family
    if family == "bessel":
        return {"nu": args.nu if args.nu is not None else Fraction(1, 2)}
    if family == "hyper":
        return {"a": args.a if args.a is not None else Fraction(1), "b": args.b if args.b is not None else Fraction(1)}
    return {}


def _zero_family(family, params):
    if family == "bessel":
        return BesselJ(params["nu"])
    if family == "airy":
        return Airy()
    if family == "airy-prime":
        return AiryPrime()
    if params["a"] != params["b"]:
        raise ParameterError("zeros of 1F1(a; a+b; z) are available only for a = b")
    return KummerDiagonal(params["a"])


def _zeros(config, params, cache):
    family = _zero_family(config.family, params)
    count = config.zero_count
    if family.kind == "KummerDiagonal" and count % 2:
        count += 1
    return family_zeros(family, count, config.ctx, cache)


# values ---------------------------------------------------------------------------


def _closed_forms(family, params, ctx):
    """quantity -> (label, evaluator(n, k))."""
    if family == "bessel":
        nu = params["nu"]
        return {
            "mzv2n": ("zeta_B.mzv2n", lambda n, k: bessel_mzv_2n(nu, n, ctx)),
            "mzv4n": ("zeta_B.mzv4n", lambda n, k: bessel_mzv_4n(nu, n, ctx)),
            "mzsv2n": ("zeta_B.mzsv2n", lambda n, k: bessel_mzsv_2n(nu, n, ctx)),
            "bernoulli": ("zeta_B.bernoulli_half", lambda n, k: bessel_bernoulli_half(nu, n, ctx)),
            "zeta": ("zeta_B.zeta2n", lambda n, k: bessel_zeta_gen(nu, n, ctx)[n]),
            "S": ("zeta_B.S", lambda n, k: bessel_S(nu, n, k, ctx)),
            "Sstar": ("zeta_B.S_star", lambda n, k: bessel_S_star(nu, n, k, ctx)),
        }
    if family == "hyper":
        a, b = params["a"], params["b"]
        return {
            "mzv2n": ("zeta_ab.mzv2n", lambda n, k: hyp_mzv_2n(a, b, n, ctx)),
            "mzv4n": ("zeta_ab.mzv4n", lambda n, k: hyp_mzv_4n(a, b, n, ctx)),
            "mzsv2n": ("zeta_ab.mzsv2n", lambda n, k: hyp_mzsv_2n(a, b, n, ctx)),
            "bernoulli": ("zeta_ab.bernoulli", lambda n, k: hyp_bernoulli(a, b, n + 1, ctx)[n]),
            "zeta": ("zeta_ab.zeta", lambda n, k: hyp_zeta_gen(a, b, n - 1, ctx)[n - 1]),
        }
    if family == "airy":
        return {
            "mzv2n": ("zeta_Ai.mzv2n", lambda n, k: airy_mzv_2n(n, ctx)),
            "mzv4n": ("zeta_Ai.mzv4n", lambda n, k: airy_mzv_4n(n, ctx)),
            "mzsv2n": ("zeta_Ai.mzsv2n", lambda n, k: airy_mzsv_2n(n, ctx)),
            "bernoulli": ("zeta_Ai.bernoulli", lambda n, k: airy_bernoulli(n + 1, ctx=ctx)[n]),
            "zeta": ("zeta_Ai.zeta", lambda n, k: airy_zeta(n - 1, ctx)),
        }
    return {"mzv2n": ("zeta_Aip.mzv2n", lambda n, k: airy_prime_mzv_2n(n, ctx))}


ORACLE_QUANTITIES = ("nested2n", "nested_star2n", "nested4n", "altzeta")


def cmd_values(args, config, params):
    ctx = config.ctx
    closed = _closed_forms(config.family, params, ctx)
    quantity = args.quantity
    if quantity not in closed and quantity not in ORACLE_QUANTITIES:
        raise ParameterError(f"unknown quantity {quantity!r} for {config.family}; choose from {sorted(closed) + list(ORACLE_QUANTITIES)}")
    ns = args.n if args.n is not None else [1]
    ks = args.k if args.k is not None else [None]
    rows = []
    if quantity in closed:
        label, fn = closed[quantity]
        for n in ns:
            for k in ks:
                if quantity in ("S", "Sstar") and k is None:
                    raise ParameterError("S and Sstar need --k")
                rows.append(record(label, params, n, k, fn(n, k), None, "closed-form", config.digits))
    elif quantity == "altzeta":
        if config.family != "bessel":
            raise ParameterError("altzeta is defined for the bessel family")
        for n in ns:
            value, err = alt_bessel_zeta(params["nu"], n, config.zero_count, ctx)
            rows.append(record("zeta_B.alt", params, n, None, value, err, "oracle", config.digits))
    else:
        zeros = _zeros(config, params, args.cache)
        scale = 4 if quantity == "nested4n" else 2
        starred = quantity == "nested_star2n"
        for n in ns:
            if n == 0:
                rows.append(record(f"{config.family}.{quantity}", params, 0, None, Fraction(1), None, "oracle", config.digits))
                continue
            value, bound = mzv_nested_sum(zeros, (1,) * n, scale, starred, ctx)
            rows.append(record(f"{config.family}.{quantity}", params, n, None, value, bound, "oracle", config.digits))
    rows.sort(key=lambda r: (r["quantity"], r["n"], -1 if r["k"] is None else r["k"]))
    emit(render(rows, config.fmt, RECORD_FIELDS), args.out)
    return 0


# verify -------------------------------------------------------------------------------


def _numeric_report(name, parameters, cases, tol_key="tolerance"):
    worst = max((c["defect"] for c in cases), default=mpf(0))
    passed = all(c["defect"] <= c[tol_key] for c in cases)
    tol = max((c[tol_key] for c in cases), default=mpf(0))
    return IdentityReport(name, parameters, worst, tol, passed, False, tuple(cases))


def _oracle_pairs(family, params, ctx):
    """[(label, closed(n), scale, starred)] available for the family."""
    if family == "bessel":
        nu = params["nu"]
        return [
            ("mzv2n", lambda n: bessel_mzv_2n(nu, n, ctx), 2, False),
            ("mzsv2n", lambda n: bessel_mzsv_2n(nu, n, ctx), 2, True),
            ("mzv4n", lambda n: bessel_mzv_4n(nu, n, ctx), 4, False),
        ]
    if family == "hyper":
        a, b = params["a"], params["b"]
        return [
            ("mzv2n", lambda n: hyp_mzv_2n(a, b, n, ctx), 2, False),
            ("mzsv2n", lambda n: hyp_mzsv_2n(a, b, n, ctx), 2, True),
            ("mzv4n", lambda n: hyp_mzv_4n(a, b, n, ctx), 4, False),
        ]
    if family == "airy":
        return [
            ("mzv2n", lambda n: airy_mzv_2n(n, ctx), 2, False),
            ("mzsv2n", lambda n: airy_mzsv_2n(n, ctx), 2, True),
            ("mzv4n", lambda n: airy_mzv_4n(n, ctx), 4, False),
        ]
    return [("mzv2n", lambda n: airy_prime_mzv_2n(n, ctx), 2, False)]


def suite_oracle(args, config, params):
    ctx = config.ctx
    zeros = _zeros(config, params, args.cache)
    floor = mpf(10) ** (-(ctx.digits - 12))
    cases = []
    for label, closed, scale, starred in _oracle_pairs(config.family, params, ctx):
        for n in range(1, config.max_depth + 1):
            value, bound = mzv_nested_sum(zeros, (1,) * n, scale, starred, ctx)
            expected = to_mp(closed(n))
            cases.append({"quantity": label, "n": n, "closed_form": expected, "oracle": value, "defect": abs(value - expected), "tolerance": bound + floor})
    return [_numeric_report("oracle", {"family": config.family, **params, "depth": config.max_depth, "zeros": zeros.count}, cases)]


def suite_dissection(args, config, params):
    ctx = config.ctx
    top = max(args.n) if args.n else 3
    closed = {label: fn for label, fn, _, _ in _oracle_pairs(config.family, params, ctx)}
    if "mzv4n" not in closed:
        raise ParameterError("dissection needs a family with a ({4}^n) closed form")
    table = [closed["mzv2n"](l) for l in range(2 * top + 1)]
    dissected = dissect_mzv(table, 2, ctx)
    tol = mpf(10) ** (-(ctx.digits - 15))
    cases = []
    for n in range(top + 1):
        expected = to_mp(closed["mzv4n"](n))
        cases.append({"n": n, "dissection": dissected[n], "closed_form": expected, "defect": abs(dissected[n] - expected), "tolerance": tol})
    return [_numeric_report("dissection", {"family": config.family, **params, "n_max": top}, cases)]


def suite_gessel_viennot(args, config, params):
    top = args.max if args.max is not None else 20
    nu = args.nu if args.nu is not None else Fraction(1, 2)
    failures = []
    total = 0
    for n in range(1, top + 1):
        for k in range(1, top + 1):
            rep = gessel_viennot_check(n, k, nu)
            total += len(rep.cases)
            failures.extend(c for c in rep.cases if c["defect"] != 0)
    worst = max((c["defect"] for c in failures), default=Fraction(0))
    summary = ({"checked": total, "failures": len(failures)},) + tuple(failures)
    return [IdentityReport("gessel-viennot", {"max": top, "nu": nu}, worst, Fraction(0), not failures, True, summary)]


def suite_lommel(args, config, params):
    nu = args.nu if args.nu is not None else Fraction(3, 2)
    top = args.max if args.max is not None else 5
    out = []
    for r in range(top + 1):
        for s in range(r + 1):
            out.append(lommel_orthogonality_check(nu, r, s, config.zero_count, config.ctx, two_sided=args.two_sided))
    return out


def suite_krein(args, config, params):
    nu = args.nu if args.nu is not None else Fraction(1, 2)
    ns = args.n if args.n is not None else [1, 2, 3]
    return [krein_check(nu, n, config.zero_count, config.ctx) for n in ns]


def suite_airy_bessel(args, config, params):
    ns = args.n if args.n is not None else [0, 1, 2]
    return [airy_bessel_relation_check(n, config.ctx) for n in ns]


def suite_star_convolution(args, config, params):
    ctx = config.ctx
    top = max(args.n) if args.n else 6
    tol = mpf(10) ** (-(ctx.digits - 15))
    pairs = {label: fn for label, fn, _, _ in _oracle_pairs(config.family, params, ctx)}
    reports = []
    if "mzsv2n" in pairs:
        e = [pairs["mzv2n"](n) for n in range(top + 1)]
        h = [pairs["mzsv2n"](n) for n in range(top + 1)]
        cases = [{"table": "closed-form", "n": n, "defect": abs(to_mp(d)), "tolerance": tol} for n, d in enumerate(convolution_defects(e, h))]
        reports.append(_numeric_report("star-convolution", {"family": config.family, **params, "table": "closed-form"}, cases))
    zeros = _zeros(config, params, args.cache)
    tables = mzv_tables_from_zeros(zeros, 2, top, ctx)
    cases = [{"table": "zeros", "n": n, "defect": abs(to_mp(d)), "tolerance": tol} for n, d in enumerate(convolution_defects(tables.e, tables.h))]
    reports.append(_numeric_report("star-convolution", {"family": config.family, **params, "table": "zeros"}, cases))
    return reports


def suite_quantum(args, config, params):
    ctx = config.ctx
    family = _zero_family(config.family, params)
    zeros = family_zeros(family, config.zero_count, ctx)
    reports = []
    for r, tol in ((1, mpf(10) ** -6), (2, mpf(10) ** -4)):
        reference = abs(mpmath.fprod(zeros[i] for i in range(r)))
        cases = []
        for s in (10, 20, 30):
            est = energy_product_estimate(zeros, s, r, ctx=ctx)
            cases.append({"r": r, "s": s, "estimate": est, "reference": reference, "defect": abs(est - reference)})
        errors = [c["defect"] for c in cases]
        decreasing = all(a > b for a, b in zip(errors, errors[1:]))
        passed = decreasing and errors[-1] <= tol
        reports.append(IdentityReport("quantum", {"family": family.tag, "r": r, "decreasing": decreasing}, errors[-1], tol, passed, False, tuple(cases)))
    return reports


SUITE_RUNNERS = {
    "oracle": suite_oracle,
    "dissection": suite_dissection,
    "gessel-viennot": suite_gessel_viennot,
    "lommel": suite_lommel,
    "krein": suite_krein,
    "airy-bessel": suite_airy_bessel,
    "star-convolution": suite_star_convolution,
    "quantum": suite_quantum,
}


def cmd_verify(args, config, params):
    reports = SUITE_RUNNERS[args.suite](args, config, params)
    rows = [report_dict(r, config.digits) for r in reports]
    fields = ("name", "parameters", "max_abs_defect", "tolerance", "passed", "exact", "cases")
    emit(render(rows, config.fmt, fields), args.out)
    failed = [r for r in rows if not r["passed"]]
    for row in failed:
        bad = [c for c in row["cases"] if not _case_passed(c)]
        sys.stderr.write(f"FAIL {row['name']} {json.dumps(row['parameters'], sort_keys=True)}: {json.dumps(bad[:3], sort_keys=True)}\n")
    return 0 if not failed else 1


def _case_passed(case):
    if "tolerance" in case and "defect" in case:
        return mpf(case["defect"]) <= mpf(case["tolerance"])
    if "bound" in case and "defect" in case:
        return mpf(case["defect"]) <= max(mpf(case["bound"]), mpf(10) ** -6)
    return case.get("defect") in (None, "0")


# zeros / estimate ---------------------------------------------------------------------------


def cmd_zeros(args, config, params):
    if args.count > 10000:
        raise ParameterError("count must be <= 10000")
    family = _zero_family(config.family, params)
    count = args.count
    if family.kind == "KummerDiagonal" and count % 2:
        count += 1
    zeros = family_zeros(family, count, config.ctx, args.cache)
    bound = mpf(10) ** (-(config.digits - 8))
    rows = []
    for i, z in enumerate(zeros.zeros[: args.count], 1):
        rows.append(record(f"zeros.{config.family}", {**params, "family": family.tag}, i, None, z, bound * max(1, abs(z)), "oracle", config.digits))
    emit(render(rows, config.fmt, RECORD_FIELDS), args.out)
    return 0


def cmd_estimate(args, config, params):
    family = _zero_family(config.family, params)
    zeros = family_zeros(family, config.zero_count, config.ctx, args.cache)
    r = args.r
    reference = abs(mpmath.fprod(zeros[i] for i in range(r)))
    label = "quantum.ground_state" if r == 1 else "quantum.energy_product"
    rows = []
    for s in sorted(args.s):
        est = energy_product_estimate(zeros, s, r, ctx=config.ctx)
        rows.append(record(label, {**params, "family": family.tag, "r": r}, s, None, est, abs(est - reference), "oracle", config.digits))
    emit(render(rows, config.fmt, RECORD_FIELDS), args.out)
    return 0


# Parser -------------------------------------------------------------------------------------


def _common(p):
    p.add_argument("--digits", type=int, default=None, help="working precision in decimal digits")
    p.add_argument("--zeros", type=int, default=DEFAULT_ZEROS, help="number of zeros for oracle sums")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None, help="write output to FILE instead of stdout")
    p.add_argument("--cache", default=None, help="zero cache file to read and extend")
    p.add_argument("--nu", type=parse_param, default=None)
    p.add_argument("--a", type=parse_param, default=None)
    p.add_argument("--b", type=parse_param, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="szeta", description="Zeta values over zeros of Kummer, Bessel and Airy functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    values = sub.add_parser("values", help="tabulate closed forms or oracle sums")
    values.add_argument("family", choices=FAMILIES)
    values.add_argument("--quantity", required=True)
    values.add_argument("--n", type=parse_range, default=None, help="index range a..b")
    values.add_argument("--k", type=parse_range, default=None, help="depth range a..b (S, Sstar)")
    _common(values)

    verify = sub.add_parser("verify", help="run an identity or oracle suite")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--family", choices=FAMILIES, default=None)
    verify.add_argument("--depth", type=int, default=3)
    verify.add_argument("--n", type=parse_range, default=None)
    verify.add_argument("--max", type=int, default=None)
    verify.add_argument("--two-sided", action="store_true", help="lommel: sum over the symmetric zero set")
    _common(verify)

    zeros = sub.add_parser("zeros", help="tabulate zeros")
    zeros.add_argument("family", choices=FAMILIES)
    zeros.add_argument("--count", type=int, default=10)
    _common(zeros)

    estimate = sub.add_parser("estimate", help="ground-state and level-product estimates")
    estimate.add_argument("family", choices=("bessel", "airy", "airy-prime"))
    estimate.add_argument("--s", type=lambda t: [int(x) for x in t.split(",")], default=[10, 20, 30])
    estimate.add_argument("--r", type=int, default=1)
    _common(estimate)
    return parser


COMMANDS = {"values": cmd_values, "verify": cmd_verify, "zeros": cmd_zeros, "estimate": cmd_estimate}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.family is None:
        args.family = "airy" if args.suite == "quantum" else "bessel"
    try:
        params = _family_params(args)
        config = RunConfig(
            digits=resolve_digits(args.digits),
            zero_count=args.zeros,
            max_depth=getattr(args, "depth", 3),
            family=args.family,
            params=params,
            fmt=args.format,
        )
        with mpmath.workdps(config.digits):
            return COMMANDS[args.command](args, config, params)
    except SzetaError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
