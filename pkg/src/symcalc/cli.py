"""Command-line interface.

Exit codes: 0 success, 2 parse error, 3 evaluation error, 4 IO error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from fractions import Fraction

from . import __version__
from .apps import braid_poincare, endofunction_signature
from .cache import set_cache_dir
from .coeffs import TruncationError, format_coeff
from .expr import EvalError, ParseError, evaluate, parse
from .partitions import partition
from .render import render_charpoly, render_symexpr, render_value
from .stable import character_polynomial, reduced_kron
from .symfunc import SymExpr
from .tables import SECTIONS, render_table

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_EVAL = 3
EXIT_IO = 4


def _partition_arg(text: str):
    try:
        parts = tuple(int(x) for x in text.split(",") if x.strip())
        return partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="symcalc",
        description="Exact calculator for symmetric functions, inner "
                    "plethysm and stable characters.",
        epilog="Expression grammar: atoms s[2,1], h[3], e[2], p[2], m[1,1], "
               "A[2,1] (stable Schur character), P[2] (stable permutation "
               "character), ts/th/tx (tilde bases); operators + - * "
               "(outer product), # (internal/Kronecker product; '*' would "
               "collide with shell globbing), o (plethysm); functions "
               "ihat(g,f), D(f,g), sp(f,g), shift(f,+-1), eval_n(x,n), "
               "charpoly(s[lam]).")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("--cache", metavar="DIR",
                    help="cache directory (also env var SYMCALC_CACHE)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expression")
    p.add_argument("--basis", choices=("s", "h", "e", "m", "p"), default="s")
    p.add_argument("--cap", type=int, default=12,
                   help="truncation degree for infinite-alphabet steps")
    p.add_argument("--format", choices=("text", "json", "latex"),
                   default="text")

    p = sub.add_parser("tables", help="print a transition table")
    p.add_argument("--section", required=True, choices=SECTIONS)
    p.add_argument("--max-degree", type=int, required=True)

    p = sub.add_parser("braid", help="cohomology of the pure braid group")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "latex"),
                   default="text")

    p = sub.add_parser("reduced-kron", help="reduced Kronecker coefficients")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--format", choices=("text", "json", "latex"),
                   default="text")

    p = sub.add_parser("charpoly", help="character polynomial of a stable "
                                        "Schur character")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--format", choices=("text", "json", "latex"),
                   default="text")

    p = sub.add_parser("endofunctions",
                       help="cycle signature of the set of endofunctions")
    p.add_argument("--n", type=int, required=True)
    return ap


def _run(args) -> int:
    out = sys.stdout
    if args.command == "eval":
        try:
            ast = parse(args.expression)
        except ParseError as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        try:
            value = evaluate(ast)
        except (EvalError, TruncationError, ValueError,
                ZeroDivisionError) as exc:
            print(f"evaluation error: {exc}", file=sys.stderr)
            return EXIT_EVAL
        if isinstance(value, SymExpr):
            value = value.in_basis(args.basis)
            if args.cap >= 0:
                value = value.truncate(args.cap)
        out.write(render_value(value, args.format) + "\n")
        return EXIT_OK

    if args.command == "tables":
        try:
            out.write(render_table(args.section, args.max_degree))
        except ValueError as exc:
            print(f"evaluation error: {exc}", file=sys.stderr)
            return EXIT_EVAL
        return EXIT_OK

    if args.command == "braid":
        if args.n < 1:
            print("evaluation error: n must be positive", file=sys.stderr)
            return EXIT_EVAL
        for i, ch in enumerate(braid_poincare(args.n)):
            out.write(f"H^{i}: {render_symexpr(ch, args.format)}\n")
        return EXIT_OK

    if args.command == "reduced-kron":
        coeffs = reduced_kron(args.lam, args.mu)
        for nu in sorted(coeffs, key=lambda t: (sum(t), t)):
            if coeffs[nu]:
                out.write(f"{','.join(map(str, nu)) or '0'}: {coeffs[nu]}\n")
        return EXIT_OK

    if args.command == "charpoly":
        out.write(render_charpoly(character_polynomial(args.lam),
                                  args.format) + "\n")
        return EXIT_OK

    if args.command == "endofunctions":
        if args.n < 1:
            print("evaluation error: n must be positive", file=sys.stderr)
            return EXIT_EVAL
        sig = endofunction_signature(args.n)
        total = sum(sig.terms.values(), Fraction(0))
        out.write(f"{format_coeff(sig)}\n")
        out.write(f"total (all weights 1): {total}\n")
        return EXIT_OK

    raise AssertionError(args.command)


def main(argv=None) -> int:
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    cache_dir = args.cache or os.environ.get("SYMCALC_CACHE")
    if cache_dir:
        try:
            set_cache_dir(cache_dir)
        except OSError as exc:
            print(f"io error: {exc}", file=sys.stderr)
            return EXIT_IO
    try:
        return _run(args)
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
