"""Command-line entry point.

Usage:
    tailsum coeffs --kind bernoulli-like --count 17 --format csv
    tailsum zeta 3 --split 10 --digits 30
    tailsum eta 1 --format plain
    tailsum sum --family inverse-power --exponent 3/2 --alternating
    tailsum verify

Exit status: 0 on success, 1 on a computation error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import app
from .coefficients import default_cache
from .errors import TailsumError
from .summation import DEFAULT_MAX_ORDER, TruncationPolicy

KINDS = {
    "bernoulli-like": default_cache.bernoulli_like,
    "tangent-like": default_cache.tangent_like,
    "em-weights": default_cache.em_weights,
    "boole-weights": default_cache.boole_weights,
}


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return v


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _add_run_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--split", type=_rational, default=Fraction(app.DEFAULT_SPLIT),
                   help="first index summed by the tail formula (default 10)")
    trunc = p.add_mutually_exclusive_group()
    trunc.add_argument("--max-order", type=_positive_int, default=DEFAULT_MAX_ORDER,
                       help="highest derivative order scanned by smallest-term truncation")
    trunc.add_argument("--fixed-order", type=_positive_int, default=None,
                       help="use every derivative up to this order instead")
    p.add_argument("--digits", type=_positive_int, default=app.DEFAULT_DIGITS,
                   help="significant digits in value_decimal (default 20)")
    p.add_argument("--format", choices=("json", "csv", "plain"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tailsum",
        description="Euler-Maclaurin and Boole tail summation with exact rational coefficients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="print a coefficient or weight table")
    p.add_argument("--kind", choices=sorted(KINDS), required=True)
    p.add_argument("--count", type=_positive_int, required=True)
    p.add_argument("--format", choices=("csv", "json", "plain"), default="csv")

    p = sub.add_parser("zeta", help="1 + 1/2^n + 1/3^n + ...")
    p.add_argument("n", type=_int)
    _add_run_options(p)

    p = sub.add_parser("eta", help="1 - 1/2^n + 1/3^n - ...")
    p.add_argument("n", type=_int)
    _add_run_options(p)

    p = sub.add_parser("sum", help="tail-accelerated sum of a built-in term family")
    p.add_argument("--family", choices=("inverse-power",), default="inverse-power")
    p.add_argument("--exponent", type=_rational, required=True)
    p.add_argument("--start", type=_rational, default=Fraction(1))
    p.add_argument("--alternating", action="store_true")
    p.add_argument("--precision", type=_positive_int, default=None,
                   help="significant digits for non-integer exponents (default 60)")
    _add_run_options(p)

    p = sub.add_parser("verify", help="run the self-check suite")
    p.add_argument("--order", type=_positive_int, default=40)
    return parser


def _policy(args) -> TruncationPolicy:
    if args.fixed_order is not None:
        return TruncationPolicy.fixed_order(args.fixed_order)
    return TruncationPolicy.smallest_term(args.max_order)


def _emit(record: app.OutputRecord, fmt: str, out) -> None:
    if fmt == "json":
        out.write(record.to_json() + "\n")
    elif fmt == "csv":
        out.write(record.to_csv())
    else:
        out.write(record.to_plain())


def _emit_table(values, fmt: str, out) -> None:
    if fmt == "csv":
        for i, v in enumerate(values):
            out.write(f"{i},{v.numerator},{v.denominator}\n")
    elif fmt == "json":
        rows = [{"index": i, "num": str(v.numerator), "den": str(v.denominator)}
                for i, v in enumerate(values)]
        out.write(json.dumps(rows) + "\n")
    else:
        for i, v in enumerate(values):
            out.write(f"{i}: {v}\n")


def _split_arg(args) -> int:
    if args.split.denominator != 1:
        raise TailsumError(f"split must be an integer for zeta/eta, got {args.split}")
    return int(args.split)


def run(args, out) -> int:
    if args.command == "coeffs":
        _emit_table(KINDS[args.kind](args.count).values, args.format, out)
    elif args.command == "zeta":
        _emit(app.zeta(args.n, _split_arg(args), _policy(args), args.digits), args.format, out)
    elif args.command == "eta":
        _emit(app.eta(args.n, _split_arg(args), _policy(args), args.digits), args.format, out)
    elif args.command == "sum":
        record = app.sum_inverse_power(
            args.exponent, start=args.start, split=args.split, policy=_policy(args),
            alternating=args.alternating, digits=args.digits, precision=args.precision,
        )
        _emit(record, args.format, out)
    elif args.command == "verify":
        status, _ = app.verify_suite(order=max(2, args.order), out=out)
        return status
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args, sys.stdout)
    except TailsumError as exc:
        print(f"tailsum: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
