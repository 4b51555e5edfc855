"""Command-line front end: ``fivevertex {compute,verify,table,count}``.

Rationals travel as ``p/q`` strings. Reports are JSON by default; every
command also has a CSV rendering. Exit status is 0 on success, 1 when a
verification fails and 2 on invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from . import __version__
from .detform import Z_hom_Q, Z_theorem1
from .exact import format_rational, parse_rational, rational_sqrt
from .exact.halfpower import HalfPowerScalar
from .hankel import Z_hankel_ad, Z_hankel_explicit, Z_hypergeom
from .lattice import LatticeSpec, SizeBudgetError, WeightParams, partition_function_oracle
from .painleve import homogeneous_Z, nu_parameters, sigma_form_residual, sigma_from_Z
from .qism import DimensionCapError, matrix_element_Z
from .suites import SOLUTIONS, SUITES, Case, count_report

METHODS = ("oracle", "qism", "theorem1", "q-limit", "hankel-ad", "hankel-explicit", "hypergeom")
HOMOGENEOUS_ONLY = {"q-limit", "hankel-ad", "hankel-explicit", "hypergeom"}

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    """Invalid command-line input; reported with exit status 2."""


# -- parsing helpers ---------------------------------------------------------


def rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def rational_list(values: Sequence[str] | None) -> list[Fraction] | None:
    """Flatten space- and comma-separated ``p/q`` values."""
    if values is None:
        return None
    out = []
    for v in values:
        out += [parse_rational(t) for t in v.split(",") if t]
    return out


def parse_grid(text: str) -> list[Fraction]:
    """``a..b`` (integer steps) or a comma-separated list of rationals."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = parse_rational(lo), parse_rational(hi)
        if lo > hi:
            raise InputError(f"empty grid {text!r}")
        out, v = [], lo
        while v <= hi:
            out.append(v)
            v += 1
        return out
    return [parse_rational(t) for t in text.split(",") if t]


def _spec(args) -> LatticeSpec:
    if args.L is None or args.M is None or args.N is None:
        raise InputError("--L, --M and --N are required")
    return LatticeSpec(args.L, args.M, args.N)


# -- reports ----------------------------------------------------------------


def _config_dict(args) -> dict:
    skip = {"func", "config", "output"}
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in skip or v is None:
            continue
        if isinstance(v, Fraction):
            v = format_rational(v)
        elif isinstance(v, list):
            v = [format_rational(x) if isinstance(x, Fraction) else x for x in v]
        out[k] = v
    return out


def make_report(command: str, args, cases: Sequence[Case], extra: dict | None = None) -> dict:
    passed = sum(1 for c in cases if c.passed)
    report = {
        "command": command,
        "config": _config_dict(args),
        "cases": [c.to_json() for c in cases],
        "summary": {"total": len(cases), "passed": passed, "failed": len(cases) - passed,
                    "all_pass": passed == len(cases)},
    }
    if extra:
        report.update(extra)
    return report


def _csv_cell(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def report_to_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["id", "pass", "expected", "actual", "inputs"])
    for c in report["cases"]:
        w.writerow([c["id"], _csv_cell(c["pass"]), c["expected"], c["actual"],
                    _csv_cell(c["inputs"])])
    return buf.getvalue()


def emit(text: str, args) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def emit_report(report: dict, args) -> None:
    if args.format == "csv":
        emit(report_to_csv(report), args)
    else:
        emit(json.dumps(report, indent=2, sort_keys=False) + "\n", args)


# -- compute ----------------------------------------------------------------


def _point(args, spec: LatticeSpec):
    """(params, homogeneous u or None) from --u/--xi/--x."""
    u = rational_list(args.u)
    xi = rational_list(args.xi)
    if args.x is not None:
        if u:
            raise InputError("give either --x or --u, not both")
        if args.x in (0, 1):
            raise InputError("x must avoid 0 and 1")
        root = rational_sqrt(args.x)
        if root is None:
            return None, None, args.x
        return WeightParams.homogeneous_point(spec, root, args.alpha, args.delta), root, args.x
    if not u:
        raise InputError("give --x or --u")
    if len(u) == 1 and (xi is None or all(v == 1 for v in xi)) and (xi is None or len(xi) == spec.M):
        params = WeightParams.homogeneous_point(spec, u[0], args.alpha, args.delta)
        return params, u[0], u[0] * u[0]
    if len(u) != spec.L:
        raise InputError(f"need 1 or L={spec.L} values for --u, got {len(u)}")
    xi = xi if xi is not None else [Fraction(1)] * spec.M
    if len(xi) != spec.M:
        raise InputError(f"need M={spec.M} values for --xi, got {len(xi)}")
    return WeightParams(args.alpha, args.delta, u, xi), None, None


def _as_value(z) -> dict:
    """Exact rendering of a Fraction or a HalfPowerScalar."""
    if isinstance(z, HalfPowerScalar):
        out = {"coefficient": format_rational(z.coefficient), "x_power_times_2": z.exp2}
        return out
    return {"Z": format_rational(z)}


def _resolve_half_power(z: HalfPowerScalar, u, x):
    if u is not None:
        return z.evaluate(u)
    if z.exp2 % 2 == 0:
        return z.collapse(x)
    # normal form c * sqrt(x), so values from different methods compare directly
    return HalfPowerScalar(z.coefficient * x ** ((z.exp2 - 1) // 2), 1)


def compute_method(method: str, spec: LatticeSpec, args, params, u, x, side: str):
    """Z by one method; Fraction, or HalfPowerScalar when sqrt(x) is irrational."""
    homogeneous = params is None or params.homogeneous
    if method in HOMOGENEOUS_ONLY and not homogeneous:
        raise InputError(f"method {method} needs homogeneous input (--x, or a single --u)")
    if method in ("oracle", "qism", "q-limit", "hankel-ad") and params is None:
        raise InputError(f"method {method} needs u = sqrt(x) rational; x={format_rational(x)}")
    if method == "oracle":
        return partition_function_oracle(spec, params, budget=args.budget)
    if method == "qism":
        return matrix_element_Z(spec, params)
    if method == "theorem1":
        if params is None or homogeneous and spec.L > 1:
            raise InputError("coincident rapidities: theorem1 needs distinct u_j^2 "
                             "(use q-limit for the homogeneous model)")
        return Z_theorem1(spec, params)
    if method == "q-limit":
        return Z_hom_Q(spec, u, args.alpha, args.delta)
    if method == "hankel-ad":
        return Z_hankel_ad(spec, u, args.alpha, args.delta, side)
    if method == "hankel-explicit":
        return _resolve_half_power(Z_hankel_explicit(spec, x, args.alpha, args.delta, side), u, x)
    if method == "hypergeom":
        return _resolve_half_power(Z_hypergeom(spec, x, args.alpha, args.delta, side), u, x)
    raise InputError(f"unknown method {method!r}")


def _closed_form_n0(spec: LatticeSpec, params, u, x, args):
    """N = 0: every vertex is empty, Z = prod_j a(u_j)."""
    from .qism import VacuumEigenvalues

    if params is None:
        return None
    eig = VacuumEigenvalues.five_vertex(params.xi, params.alpha, params.delta)
    out = Fraction(1)
    for v in params.u:
        out *= eig.a(v)
    return out


def cmd_compute(args) -> int:
    spec = _spec(args)
    params, u, x = _point(args, spec)
    if params is not None:
        params.check(spec)
    methods = [args.method or "oracle"]
    skipped = {}
    if args.cross_check:
        homogeneous = params is None or params.homogeneous
        methods = [m for m in METHODS
                   if (homogeneous or m not in HOMOGENEOUS_ONLY)
                   and not (m == "theorem1" and homogeneous and spec.L > 1)
                   and not (params is None and m in ("oracle", "qism", "q-limit", "hankel-ad"))]
        if "theorem1" in methods:
            try:
                params.check(spec, distinct=True)
            except ValueError as exc:
                methods.remove("theorem1")
                skipped["theorem1"] = str(exc)
        if args.method is not None and args.method in methods:
            methods.remove(args.method)
            methods.insert(0, args.method)
        elif args.method is not None:
            raise InputError(f"method {args.method} does not apply to this input")
    sides = ("LN", "N") if args.cross_check else (args.side,)
    results = []
    for m in methods:
        for side in (sides if m.startswith("hankel") or m == "hypergeom" else ("LN",)):
            t0 = time.perf_counter()
            z = compute_method(m, spec, args, params, u, x, side)
            dt = time.perf_counter() - t0
            label = f"{m}/{side}" if (m.startswith("hankel") or m == "hypergeom") else m
            results.append((label, z, dt))
    ref = results[0][1]
    inputs = {"L": spec.L, "M": spec.M, "N": spec.N, "alpha": format_rational(args.alpha),
              "delta": format_rational(args.delta)}
    if x is not None:
        inputs["x"] = format_rational(x)
    if params is not None:
        inputs["u"] = [format_rational(v) for v in params.u]
        inputs["xi"] = [format_rational(v) for v in params.xi]
    cases = []
    for label, z, dt in results:
        case = Case(f"compute/{label}", inputs, _render(ref), _render(z), z == ref)
        if args.timings:
            case.notes["seconds"] = round(dt, 6)
        cases.append(case)
    extra = {"result": {"method": results[0][0], **_as_value(ref)}}
    if args.cross_check:
        extra["result"]["method_independent"] = all(c.passed for c in cases)
        if skipped:
            extra["result"]["skipped"] = skipped
    if spec.N == 0:
        closed = _closed_form_n0(spec, params, u, x, args)
        if closed is not None:
            extra["result"]["closed_form"] = format_rational(closed)
            extra["result"]["matches_closed_form"] = closed == ref
    report = make_report("compute", args, cases, extra)
    emit_report(report, args)
    return EXIT_OK if report["summary"]["all_pass"] else EXIT_FAIL


def _render(z) -> str:
    if isinstance(z, HalfPowerScalar):
        return f"{format_rational(z.coefficient)}*x^({z.exp2}/2)"
    return format_rational(z)


# -- verify -----------------------------------------------------------------


def cmd_verify(args) -> int:
    name = args.suite
    fn = SUITES[name]
    kw = {"seed": args.seed}
    if name in ("theorem1", "theorem2-chain", "painleve") and args.max_size is not None:
        kw["max_size"] = args.max_size
    if name in ("theorem1", "theorem2-chain", "appendix-b", "lemma-dets",
                "derivative-formula") and args.draws is not None:
        kw["draws"] = args.draws
    if name in ("rll", "commutation16"):
        kw["solution"] = args.solution
    if name == "painleve" and args.L is not None:
        kw["spec"] = _spec(args)
    elif args.L is not None and name not in ("painleve",):
        raise InputError("--L/--M/--N only apply to the painleve suite")
    cases = fn(**kw)
    report = make_report("verify", args, cases, {"suite": name})
    emit_report(report, args)
    return EXIT_OK if report["summary"]["all_pass"] else EXIT_FAIL


# -- table ------------------------------------------------------------------


def _decimal_sqrt(q: Fraction, digits: int) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits + 10
        return (Decimal(q.numerator) / Decimal(q.denominator)).sqrt()


def _decimal(q: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits + 10
        v = Decimal(q.numerator) / Decimal(q.denominator)
        return f"{v:.{digits}f}"


def table_rows(spec: LatticeSpec, grid: Sequence[Fraction], alpha, delta) -> list[dict]:
    """Z(x) = Z_rational * x^(parity/2) and sigma(x) at each grid point."""
    Zs = homogeneous_Z(spec, alpha, delta)
    sigma = sigma_from_Z(spec, alpha, delta, Z=Zs)
    residual = sigma_form_residual(sigma, nu_parameters(spec))
    rows = []
    for x in grid:
        if x in (0, 1):
            raise InputError("the x-grid must avoid 0 and 1")
        coeff = Zs.coefficient(x)
        parity = Zs.exp2 % 2
        z_rat = coeff * x ** (Zs.exp2 // 2)
        root = rational_sqrt(x) if parity else Fraction(1)
        rows.append({
            "x": x,
            "Z_rational_part": z_rat,
            "sqrt_x_power": parity,
            "Z": z_rat * root if root is not None else None,
            "sigma": sigma(x),
            "sigma_residual": residual(x),
        })
    return rows


def _row_strings(row: dict, decimals: int | None) -> dict:
    out = {}
    for k, v in row.items():
        if isinstance(v, Fraction):
            out[k] = format_rational(v)
        elif v is None:
            out[k] = ""
        else:
            out[k] = str(v)
    if decimals is not None:
        z = row["Z_rational_part"]
        if row["sqrt_x_power"]:
            with localcontext() as ctx:
                ctx.prec = decimals + 10
                zd = (Decimal(z.numerator) / Decimal(z.denominator)) * _decimal_sqrt(row["x"], decimals)
                out["Z_decimal"] = f"{zd:.{decimals}f}"
        else:
            out["Z_decimal"] = _decimal(z, decimals)
        out["sigma_decimal"] = _decimal(row["sigma"], decimals)
    return out


TABLE_COLUMNS = ("x", "Z", "Z_rational_part", "sqrt_x_power", "sigma", "sigma_residual")


def cmd_table(args) -> int:
    spec = _spec(args)
    if args.x_grid is None:
        raise InputError("--x-grid is required")
    grid = parse_grid(args.x_grid)
    rows = [_row_strings(r, args.decimals) for r in table_rows(spec, grid, args.alpha, args.delta)]
    cols = list(TABLE_COLUMNS) + (["Z_decimal", "sigma_decimal"] if args.decimals is not None else [])
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({c: r[c] for c in cols})
        emit(buf.getvalue(), args)
    else:
        payload = {"command": "table", "config": _config_dict(args), "columns": cols,
                   "rows": [{c: r[c] for c in cols} for r in rows]}
        emit(json.dumps(payload, indent=2) + "\n", args)
    bad = [r for r in rows if r["sigma_residual"] != "0/1"]
    return EXIT_FAIL if bad else EXIT_OK


# -- count ------------------------------------------------------------------


def cmd_count(args) -> int:
    spec = _spec(args)
    r = count_report(spec)
    same = len(set(r.values())) == 1
    case = Case(f"count/L{spec.L}M{spec.M}N{spec.N}",
                {"L": spec.L, "M": spec.M, "N": spec.N, "box": list(spec.box)},
                str(r["product_formula"]), str(r["configurations"]), same,
                {k: str(v) for k, v in r.items()})
    report = make_report("count", args, [case], {"counts": r})
    emit_report(report, args)
    return EXIT_OK if same else EXIT_FAIL


# -- entry point ------------------------------------------------------------


_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file of option defaults (flags override it)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--L", type=int)
    common.add_argument("--M", type=int)
    common.add_argument("--N", type=int)
    common.add_argument("--alpha", type=rational_arg, default=Fraction(1))
    common.add_argument("--delta", type=rational_arg, default=Fraction(1))

    p = argparse.ArgumentParser(prog="fivevertex", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="partition function by one method")
    c.add_argument("--method", choices=METHODS, help="default: oracle")
    c.add_argument("--side", choices=("LN", "N"), default="LN")
    c.add_argument("--u", nargs="+", help="one value (homogeneous) or L values")
    c.add_argument("--xi", nargs="+", help="M row rapidities (default all 1)")
    c.add_argument("--x", type=rational_arg, help="homogeneous point x = u^2")
    c.add_argument("--cross-check", action="store_true",
                   help="run every applicable method and require identical values")
    c.add_argument("--budget", type=int, default=10 ** 6,
                   help="maximum number of lattice configurations to enumerate")
    c.add_argument("--timings", action="store_true", help="record seconds per method")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", choices=sorted(SUITES), required=True)
    v.add_argument("--max-size", type=int)
    v.add_argument("--draws", type=int)
    v.add_argument("--solution", choices=("all",) + SOLUTIONS, default="all")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", parents=[common], help="Z(x) and sigma(x) on an x-grid")
    t.add_argument("--x-grid", help="a..b in unit steps, or p/q,p/q,...")
    t.add_argument("--decimals", type=int, help="add decimal columns with K digits")
    t.set_defaults(func=cmd_table)

    n = sub.add_parser("count", parents=[common], help="configuration and plane-partition counts")
    n.set_defaults(func=cmd_count)
    # let values such as -3/4 through as arguments rather than flags
    for parser in (p, c, v, t, n):
        parser._negative_number_matcher = _NEGATIVE_RATIONAL
    return p


def _apply_config(parser: argparse.ArgumentParser, argv: Sequence[str]) -> argparse.Namespace:
    """Parse argv, taking option defaults from ``--config`` when given."""
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if known.config:
        with open(known.config, encoding="utf-8") as fh:
            cfg = json.load(fh)
        if not isinstance(cfg, dict):
            raise InputError("config file must hold a JSON object")
        subparsers = parser._subparsers._group_actions[0].choices
        dests = {a.dest for sp in subparsers.values() for a in sp._actions}
        unknown = set(cfg) - dests
        if unknown:
            raise InputError(f"unknown config keys: {sorted(unknown)}")
        defaults = {k.replace("-", "_"): (parse_rational(str(v)) if k in ("alpha", "delta", "x")
                                          else v) for k, v in cfg.items()}
        for sp in subparsers.values():
            own = {a.dest for a in sp._actions}
            sp.set_defaults(**{k: v for k, v in defaults.items() if k in own})
            for a in sp._actions:
                if a.dest in defaults and a.required:
                    a.required = False
    return parser.parse_args(argv)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = _apply_config(parser, argv)
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_INPUT
    except (SizeBudgetError, DimensionCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, ValueError, TypeError, ZeroDivisionError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
