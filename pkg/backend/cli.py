"""
PolyBasis CLI
Command-line front end for change-of-basis matrices, polynomial conversion and verification suites

Basis descriptors: family[:asc|:desc][:alt][:sup][:neg][@N|@u,l]
  family  a family name or alias (see `list`)
  :asc    ascending basis (elements share the degree n), :desc is the default
  :alt    alternating basis of a parity-definite family
  :sup    superposed alternating basis; :neg subtracts the neighbour instead
  @N      truncated classical family drawn from F_N (N >= n)
  @u,l    truncation window [l..u] drawn from F_u; sets --n and --m

Exit status: 0 ok, 1 verification failure, 2 usage error.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from models.families import FAMILY_INFO, Orientation
from models.registry import cob, convert_parts
from models.suites import SUITE_INFO, SUITES, run_suite
from utils import config
from utils.descriptors import ALIASES, basis_pair, check_degree, conversion_basis
from utils.errors import ChangeOfBasisError
from utils.exact import Polynomial
from utils.serialize import (
    coords_to_strings,
    coords_to_text,
    format_decimal,
    matrix_to_csv,
    matrix_to_document,
    matrix_to_text,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="polybasis",
        description="Exact change-of-basis matrices between polynomial bases.",
        epilog=__doc__.split("\n\n", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--log-level", default="", help="overrides POLYBASIS_LOG_LEVEL")
    verbs = parser.add_subparsers(dest="verb", required=True)

    matrix = verbs.add_parser("matrix", help="matrix from one basis to another")
    matrix.add_argument("--from", dest="source", required=True, help="domain basis descriptor")
    matrix.add_argument("--to", dest="target", required=True, help="range basis descriptor")
    matrix.add_argument("--n", type=int, default=None, help="top of the monomial window, or taken from @u,l")
    matrix.add_argument("--m", type=int, default=None, help="bottom of the monomial window")
    matrix.add_argument("--format", choices=("text", "csv", "json"), default="text")
    matrix.add_argument("--decimal", type=int, default=None, metavar="K", help="also show entries rounded to K places")
    matrix.add_argument("--route", choices=("hub", "compose"), default="hub")

    convert = verbs.add_parser("convert", help="coordinates of a polynomial in a basis")
    convert.add_argument("polynomial", help='signed terms, e.g. "16x^7-12x^5+5x^4+3x^2"')
    convert.add_argument("--to", dest="target", required=True, help="basis descriptor")
    convert.add_argument("--n", type=int, default=None, help="window top, the polynomial's degree by default")
    convert.add_argument("--m", type=int, default=None, help="window bottom, its lowest degree by default")
    convert.add_argument("--no-split", dest="split", action="store_false", help="do not split into parity parts")
    convert.add_argument("--format", choices=("text", "json"), default="text")
    convert.add_argument("--decimal", type=int, default=None, metavar="K")

    verify = verbs.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=sorted(SUITES))
    verify.add_argument("--n", type=int, default=None, help="window top for the groupoid suite")
    verify.add_argument("--m", type=int, default=None, help="window bottom for the groupoid suite")
    verify.add_argument("--max-n", dest="max_n", type=int, default=None, help="largest degree swept")

    verbs.add_parser("list", help="families, orientations and suites")
    return parser.parse_args(argv)


def cmd_matrix(args: argparse.Namespace) -> int:
    source, target = basis_pair(args.source, args.target, args.n, args.m)
    matrix = cob(source, target, route=args.route)
    if args.format == "csv":
        sys.stdout.write(matrix_to_csv(matrix))
    elif args.format == "json":
        print(json.dumps(matrix_to_document(matrix, args.decimal), indent=2))
    else:
        print(f"# {source.describe()} -> {target.describe()}")
        print(matrix_to_text(matrix, args.decimal))
    return EXIT_OK


def cmd_convert(args: argparse.Namespace) -> int:
    p = Polynomial.parse(args.polynomial)
    basis = conversion_basis(args.target, p, args.n, args.m)
    vectors = convert_parts(p, basis, split_parity=args.split)
    if args.format == "json":
        parts = []
        for vector in vectors:
            part = {"basis": vector.basis.describe(), "coords": coords_to_strings(vector.coords)}
            if args.decimal is not None:
                part["decimal"] = [format_decimal(c, args.decimal) for c in vector.coords]
            parts.append(part)
        print(json.dumps({"polynomial": p.to_text(), "parts": parts}, indent=2))
    else:
        for vector in vectors:
            print(f"{vector.basis.describe()}: {coords_to_text(vector.coords, args.decimal)}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    for bound in (args.n, args.max_n):
        if bound is not None:
            check_degree(bound)
    report = run_suite(args.suite, n=args.n, m=args.m, max_n=args.max_n)
    status = "passed" if report.passed else "FAILED"
    print(f"{report.suite}: {status}, {report.checked - report.failed}/{report.checked} checks")
    for failure in report.failures:
        print(f"  {failure}")
    if report.failed > len(report.failures):
        print(f"  ... and {report.failed - len(report.failures)} more")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_list(args: argparse.Namespace) -> int:
    print("families:")
    for family, description in FAMILY_INFO.items():
        aliases = ", ".join(sorted(a for a, f in ALIASES.items() if f is family))
        parity = " (definite parity)" if family.definite_parity else ""
        print(f"  {family.value:<20} [{aliases}] {description}{parity}")
    print("orientations: " + ", ".join(o.value for o in Orientation))
    print("suites:")
    for name, description in SUITE_INFO.items():
        print(f"  {name:<13} {description}")
    return EXIT_OK


COMMANDS = {
    "matrix": cmd_matrix,
    "convert": cmd_convert,
    "verify": cmd_verify,
    "list": cmd_list,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = _parse_args(argv)
    config.configure_logging(args.log_level)
    try:
        return COMMANDS[args.verb](args)
    except ChangeOfBasisError as e:
        logger.debug("command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
