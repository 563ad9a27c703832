"""Command-line entry point.

Exit codes: 0 success, 1 input error, 2 failed hypothesis, 3 internal assertion.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import report
from .formats import read_polytope
from .lattice import PolytopeError
from .markov import certify_distinct_tori
from .toric import HypothesisError

EXIT_OK, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_INTERNAL = 0, 1, 2, 3
DEFAULT_MAX_LIMIT = 10000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rationals(text: str):
    try:
        return [Fraction(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default=argparse.SUPPRESS,
                        help="output form (default: text)")
    parser = _Parser(prog="toricdisks", description="Toric degeneration and monotone torus invariants.",
                     parents=[common])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    for name, helptext in (("analyze", "full toric report"), ("dual", "dual polytope"),
                           ("disks", "disk polytope of the central monotone torus")):
        sp = sub.add_parser(name, help=helptext, parents=[common])
        sp.add_argument("file")

    sp = sub.add_parser("maslov", help="Maslov index of a boundary or facet class", parents=[common])
    sp.add_argument("file")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--boundary", type=_ints, help="a1,..,an (use --boundary=-1,0 for negatives)")
    group.add_argument("--class", dest="coefficients", type=_rationals, help="c1,..,cF facet coefficients")

    sp = sub.add_parser("equiv", help="lattice equivalence of two polytopes", parents=[common])
    sp.add_argument("file_a")
    sp.add_argument("file_b")
    sp.add_argument("--affine", action="store_true", help="allow integer translations")

    for name, helptext in (("markov", "enumerate Markov triples"),
                           ("certify-tori", "certify distinct tori from Markov degenerations")):
        sp = sub.add_parser(name, help=helptext, parents=[common])
        sp.add_argument("--max", dest="max_c", type=int, required=True)
        if name == "certify-tori":
            sp.add_argument("--limit", type=int, default=DEFAULT_MAX_LIMIT, help="cap on --max")

    sp = sub.add_parser("t-check", help="T-singularity check at a vertex of a polygon", parents=[common])
    sp.add_argument("file")
    sp.add_argument("--vertex", type=int, required=True, help="index into the sorted vertex list")
    return parser


def _run(args) -> dict:
    cmd = args.command
    if cmd in ("analyze", "dual", "disks"):
        p = read_polytope(args.file)
        return {"analyze": report.analyze_report, "dual": report.dual_report, "disks": report.disks_report}[cmd](p)
    if cmd == "maslov":
        p = read_polytope(args.file)
        return report.maslov_report(p, boundary=args.boundary, coefficients=args.coefficients)
    if cmd == "equiv":
        return report.equiv_report(read_polytope(args.file_a), read_polytope(args.file_b), args.affine)
    if cmd == "markov":
        if args.max_c < 1:
            raise PolytopeError("--max must be positive")
        return report.markov_report(args.max_c)
    if cmd == "certify-tori":
        if not 1 <= args.max_c <= args.limit:
            raise PolytopeError(f"--max must be in 1..{args.limit}")
        return report.tori_report(certify_distinct_tori(args.max_c), args.max_c)
    if cmd == "t-check":
        return report.tcheck_report(read_polytope(args.file), args.vertex)
    raise UsageError("missing subcommand")


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage() + "toricdisks: error: missing subcommand")
        doc = _run(args)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_INPUT
    except HypothesisError as exc:
        print(exc, file=stderr)
        return EXIT_HYPOTHESIS
    except (PolytopeError, ValueError, IndexError, OSError) as exc:
        print(f"input error: {exc}", file=stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal assertion failed: {exc}", file=stderr)
        return EXIT_INTERNAL
    fmt = getattr(args, "format", "text")
    stdout.write(report.to_json(doc) if fmt == "structured" else report.to_text(doc))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
