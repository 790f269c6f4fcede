"""
`lcc` command-line entry point.

Each subcommand lives in its own module with a `run(args) -> int`, so it can
be tested without going through argparse. Exceptions are turned into
friendly messages by `ErrorHandler`; exit codes are 2 for unreadable input,
1 for a semantic rejection or a failing suite, 0 otherwise.
"""

from __future__ import annotations

import argparse
import logging
import sys

from lcc import __version__
from lcc.cli import check as check_cmd
from lcc.cli import graph as graph_cmd
from lcc.cli import inspect as inspect_cmd
from lcc.cli import lab as lab_cmd
from lcc.cli import reduce as reduce_cmd
from lcc.cli import subtype as subtype_cmd
from lcc.cli.common import add_budget, add_file, add_rules
from lcc.errors import ErrorHandler
from lcc.reduction.engine import DEFAULT_FUEL

LOG_FORMAT = "%(asctime)s [%(name)s] %(levelname)s: %(message)s"


def _add_normalize_flags(parser: argparse.ArgumentParser) -> None:
    add_file(parser)
    add_rules(parser)
    parser.add_argument(
        "--strategy",
        default="lo",
        help="lo (leftmost-outermost) or random:SEED (default: lo)",
    )
    parser.add_argument(
        "--fuel",
        type=int,
        default=DEFAULT_FUEL,
        help=f"Maximum number of steps (default: {DEFAULT_FUEL})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcc",
        description="Lambda-calculus with constructors: reduction, typing and property checks",
    )
    parser.add_argument("--version", action="version", version=f"lcc {__version__}")
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress (-v) or debug detail (-vv) to stderr",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    reduce_p = sub.add_parser("reduce", help="Normalise a term and report how the run ended")
    _add_normalize_flags(reduce_p)
    reduce_p.add_argument("--trace", action="store_true", help="Print every step")
    reduce_p.set_defaults(func=reduce_cmd.run)

    nf_p = sub.add_parser("nf", help="Print the normal form of a term")
    _add_normalize_flags(nf_p)
    nf_p.set_defaults(func=reduce_cmd.run_nf)

    cnf_p = sub.add_parser("cnf", help="Print the case-commutation normal form")
    add_file(cnf_p)
    cnf_p.set_defaults(func=inspect_cmd.run_cnf)

    classify_p = sub.add_parser("classify", help="Classify a term (value, neutral, undefined...)")
    add_file(classify_p)
    classify_p.set_defaults(func=inspect_cmd.run_classify)

    measure_p = sub.add_parser("measure", help="Print the structural measure of a term")
    add_file(measure_p)
    measure_p.set_defaults(func=inspect_cmd.run_measure)

    graph_p = sub.add_parser("graph", help="Explore the reduction graph of a term")
    add_file(graph_p)
    add_rules(graph_p)
    add_budget(graph_p)
    graph_p.add_argument("--dot", default=None, help="Write the graph in DOT to this path")
    graph_p.set_defaults(func=graph_cmd.run)

    check_p = sub.add_parser("check", help="Validate a derivation script (.lcd)")
    check_p.add_argument("script", help="Derivation script")
    check_p.set_defaults(func=check_cmd.run)

    subtype_p = sub.add_parser("subtype", help="Search for a sub-typing derivation")
    subtype_p.add_argument("lhs", help="Left-hand type, e.g. '$X & $Y'")
    subtype_p.add_argument("rhs", help="Right-hand type")
    subtype_p.add_argument(
        "--depth", type=int, default=3, help="Maximum derivation height (default: 3)"
    )
    subtype_p.set_defaults(func=subtype_cmd.run)

    lab_p = sub.add_parser("lab", help="Run property suites over enumerated terms")
    lab_p.add_argument("suites", nargs="*", help="Suites to run (default: all)")
    lab_p.add_argument("--config", default=None, help="Lab configuration (YAML)")
    lab_p.add_argument("--size", type=int, default=None, help="Largest term size to enumerate")
    lab_p.add_argument("--workers", type=int, default=None, help="Worker processes")
    lab_p.add_argument("--corpus", default=None, help="Directory of positive scripts")
    lab_p.add_argument("--report", default=None, help="Write a JSON report to this path")
    lab_p.add_argument(
        "--replay", type=int, default=None, help="Re-run one instance of a single suite"
    )
    lab_p.add_argument("--list", action="store_true", help="List the suites and exit")
    lab_p.set_defaults(func=lab_cmd.run)

    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return int(args.func(args) or 0)
    except Exception as e:
        friendly = ErrorHandler().handle(e, context=args.command)
        print(friendly.render(), file=sys.stderr)
        return friendly.exit_code


if __name__ == "__main__":
    sys.exit(main())
