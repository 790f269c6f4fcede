"""
`lcc graph`: explore the reduction graph of a term.

Prints node and edge counts with the graph status and the normal forms
reached; `--dot` writes the graph in DOT, with the status as a leading
comment when it is not complete.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from lcc.cli.common import rule_set
from lcc.parsing import parse_term_file
from lcc.reduction import GraphBudget, reduction_graph, to_dot
from lcc.syntax import format_term


def run(args: argparse.Namespace) -> int:
    term = parse_term_file(args.file)
    rules = rule_set(args)
    g = reduction_graph(term, rules, GraphBudget(args.max_nodes, args.max_depth))
    if args.dot:
        Path(args.dot).write_text(to_dot(g).source, encoding="utf-8")
    print(f"{len(g)} nodes, {g.edge_count()} edges ({rules.label}): {g.status.value}")
    for sink in g.sinks():
        print(f"  normal form: {format_term(sink)}")
    return 0
