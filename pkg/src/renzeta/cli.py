"""Command-line front end.

Subcommands: ``zeta`` (one renormalised value), ``table`` (the depth-2 value
table), ``hdim`` (higher-dimensional values), ``chen`` (continuous side), and
``verify`` (identity suites). Every number crosses the boundary as an exact
``p/q`` string; there is no floating point in any output.

Exit codes: 0 success, 1 internal invariant violation, 2 malformed input,
3 verification failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import chenint, mzv, verify
from .emsum import RationalityLeak, StructuralViolation
from .exactnum import parse_rational, rat_str
from .mzv import HolomorphyViolation

DEFAULT_LIMIT_DEPTH = 6
DEFAULT_LIMIT_WEIGHT = 24
DEFAULT_LIMIT_DIM = 5


class InputError(ValueError):
    pass


def _parse_args_list(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"argument list must be comma-separated integers: {text!r}") from exc
    if not parts:
        raise InputError("empty argument list")
    if any(x < 0 for x in parts):
        raise InputError("arguments are exponents of nonpositive integers: need a_i >= 0")
    return parts


def _parse_v(text: str) -> Fraction:
    try:
        v = parse_rational(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if v <= -1:
        raise InputError(f"Hurwitz shift must satisfy v > -1, got {text}")
    return v


def _guard(args, a) -> None:
    if len(a) > args.limit_depth:
        raise InputError(f"depth {len(a)} exceeds limit {args.limit_depth} (raise --limit-depth)")
    if sum(a) > args.limit_weight:
        raise InputError(f"weight {sum(a)} exceeds limit {args.limit_weight} (raise --limit-weight)")


def cmd_zeta(args) -> int:
    a = _parse_args_list(args.args)
    _guard(args, a)
    v = _parse_v(args.v)
    result = mzv._zeta_result(a, v, args.variant, args.poly_v)
    payload = {
        "args": [-x for x in a],
        "v": rat_str(v),
        "variant": args.variant,
        "value": rat_str(result.value),
    }
    if args.poly_v:
        payload["poly_v"] = [rat_str(c) for c in result.as_poly_in_v.coeffs] or ["0"]
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(f"zeta({', '.join(str(-x) for x in a)}; v={rat_str(v)}) [{args.variant}] = {rat_str(result.value)}")
        if args.poly_v:
            print(f"as polynomial in v: {result.as_poly_in_v.to_str('v')}")
    return 0


def _table_values(max_a: int):
    return {
        (a, b): mzv.zeta_value((a, b), 0, "strict")
        for a in range(max_a + 1)
        for b in range(max_a + 1)
    }


def _latex_rat(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def cmd_table(args) -> int:
    if args.max < 0 or args.max > 12:
        raise InputError("--max must lie in 0..12")
    values = _table_values(args.max)
    cols = list(range(args.max + 1))
    if args.format == "json":
        print(
            json.dumps(
                {
                    "max": args.max,
                    "entries": {f"{a},{b}": rat_str(v) for (a, b), v in sorted(values.items())},
                }
            )
        )
    elif args.format == "latex":
        header = " & ".join([r"\zeta(-a,-b)"] + [f"a={a}" for a in cols]) + r" \\ \hline"
        print(r"\begin{array}{" + "c|" * (len(cols) + 1) + "}")
        print(header)
        for b in cols:
            row = " & ".join([f"b={b}"] + [_latex_rat(values[(a, b)]) for a in cols])
            print(row + r" \\")
        print(r"\end{array}")
    else:
        print("b\\a," + ",".join(str(a) for a in cols))
        for b in cols:
            print(",".join([str(b)] + [rat_str(values[(a, b)]) for a in cols]))
    return 0


def cmd_hdim(args) -> int:
    a = _parse_args_list(args.args)
    _guard(args, a)
    if args.dim < 1 or args.dim > args.limit_dim:
        raise InputError(f"--dim must lie in 1..{args.limit_dim} (raise --limit-dim)")
    v = _parse_v(args.v)
    result = mzv.hdim_zeta(args.dim, a, v)
    payload = {
        "dim": args.dim,
        "args": [-x for x in a],
        "v": rat_str(v),
        "value": rat_str(result.value),
    }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(
            f"zeta_{args.dim}({', '.join(str(-x) for x in a)}; v={rat_str(v)}) = {rat_str(result.value)}"
        )
    return 0


def cmd_chen(args) -> int:
    try:
        word = tuple(int(x) for x in args.word.split(","))
    except ValueError as exc:
        raise InputError(f"--word must be comma-separated integers: {args.word!r}") from exc
    if not word or any(s < 1 for s in word):
        raise InputError("--word entries must be positive integers")
    if len(word) > args.limit_depth:
        raise InputError(f"depth {len(word)} exceeds limit {args.limit_depth}")
    order = args.laurent_order if args.laurent_order is not None else max(1, len(word))
    symbols = tuple(chenint.zeta_symbol(s) for s in word)
    exact = chenint.chen_character_exact(symbols)
    series = exact.laurent_expand(order)
    value = chenint.zeta_tilde_renorm(word)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "word": list(word),
                    "character": exact.to_str(),
                    "laurent": series.to_str(),
                    "laurent_order": order,
                    "renormalised": rat_str(value),
                }
            )
        )
    else:
        print(f"character(z)   = {exact.to_str()}")
        print(f"laurent window = {series.to_str()}")
        print(f"renormalised   = {rat_str(value)}")
    return 0


def cmd_verify(args) -> int:
    v = _parse_v(args.v)
    report = verify.run_suite(args.suite, max_weight=args.max_weight, v=v)
    payload = {
        "suite": report.suite,
        "cases": report.cases,
        "failures": report.failures,
    }
    print(json.dumps(payload))
    print(
        f"suite {report.suite}: {report.cases} cases, {len(report.failures)} failures, "
        f"{report.seconds:.2f}s",
        file=sys.stderr,
    )
    return 0 if report.ok else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="renzeta",
        description="Exact renormalised multiple (Hurwitz) zeta values at nonpositive integers.",
    )
    parser.add_argument("--limit-depth", type=int, default=DEFAULT_LIMIT_DEPTH)
    parser.add_argument("--limit-weight", type=int, default=DEFAULT_LIMIT_WEIGHT)
    parser.add_argument("--limit-dim", type=int, default=DEFAULT_LIMIT_DIM)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeta", help="one renormalised value")
    p.add_argument("-a", "--args", required=True, help="comma-separated a_i >= 0 for zeta(-a_1,...,-a_k)")
    p.add_argument("--v", default="0", help="Hurwitz shift as p/q (> -1)")
    p.add_argument("--variant", choices=("strict", "weak", "alt"), default="strict")
    p.add_argument("--poly-v", action="store_true", help="also emit the value as a polynomial in v")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(fn=cmd_zeta)

    p = sub.add_parser("table", help="the depth-2 value table zeta(-a,-b)")
    p.add_argument("--max", type=int, default=6)
    p.add_argument("--format", choices=("csv", "json", "latex"), default="csv")
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("hdim", help="higher-dimensional (sup-norm) values")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("-a", "--args", required=True)
    p.add_argument("--v", default="0")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(fn=cmd_hdim)

    p = sub.add_parser("chen", help="continuous-side character and renormalised value")
    p.add_argument("--word", required=True, help="comma-separated positive integers s_1,...,s_k")
    p.add_argument("--laurent-order", type=int, default=None)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(fn=cmd_chen)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument(
        "--suite",
        choices=("stuffle", "hurwitz", "table", "shuffle-cont", "engine", "all"),
        default="all",
    )
    p.add_argument("--max-weight", type=int, default=8)
    p.add_argument("--v", default="0")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RationalityLeak, HolomorphyViolation, StructuralViolation) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
