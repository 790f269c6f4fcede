"""Argument helpers shared by the subcommands."""

from __future__ import annotations

import argparse

from lcc.reduction import RuleSet
from lcc.reduction.graph import DEFAULT_MAX_DEPTH, DEFAULT_MAX_NODES

DEFAULT_RULES = "lcminus"


def add_file(parser: argparse.ArgumentParser, help: str = "Term file (.lct)") -> None:
    parser.add_argument("file", help=help)


def add_rules(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--rules",
        default=DEFAULT_RULES,
        help="Rule set: full, lcminus, lcom, lb, or tags such as AL,CO (default: lcminus)",
    )


def add_budget(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-nodes",
        type=int,
        default=DEFAULT_MAX_NODES,
        help=f"Graph node budget (default: {DEFAULT_MAX_NODES})",
    )
    parser.add_argument(
        "--max-depth",
        type=int,
        default=DEFAULT_MAX_DEPTH,
        help=f"Graph depth budget (default: {DEFAULT_MAX_DEPTH})",
    )


def rule_set(args: argparse.Namespace) -> RuleSet:
    return RuleSet.parse(args.rules)
