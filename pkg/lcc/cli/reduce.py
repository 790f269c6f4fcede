"""
`lcc reduce` and `lcc nf`: normalise a term file.

`reduce` reports how the run ended (normal form or fuel exhausted) and, with
`--trace`, every step. Under the `lo` strategy the output is deterministic.
"""

from __future__ import annotations

import argparse

from lcc.cli.common import rule_set
from lcc.parsing import parse_term_file
from lcc.reduction import FuelExhausted, Outcome, RuleSet, Strategy, normalize
from lcc.syntax import format_term


def format_trace(outcome: Outcome) -> list[str]:
    return [
        f"[{index}] {step.redex}: {format_term(step.term)}"
        for index, step in enumerate(outcome.trace, start=1)
    ]


def format_outcome(outcome: Outcome, rules: RuleSet) -> list[str]:
    if isinstance(outcome, FuelExhausted):
        return [
            f"fuel exhausted after {outcome.steps} steps ({rules.label}): "
            f"{format_term(outcome.term)}",
            "note: no normal form within the fuel budget; the term may diverge",
        ]
    return [f"normal form after {outcome.steps} steps ({rules.label}): {format_term(outcome.term)}"]


def run(args: argparse.Namespace) -> int:
    term = parse_term_file(args.file)
    rules = rule_set(args)
    outcome = normalize(term, rules, Strategy.parse(args.strategy), args.fuel)
    lines = format_trace(outcome) if args.trace else []
    lines.extend(format_outcome(outcome, rules))
    print("\n".join(lines))
    return 0


def run_nf(args: argparse.Namespace) -> int:
    term = parse_term_file(args.file)
    rules = rule_set(args)
    outcome = normalize(term, rules, Strategy.parse(args.strategy), args.fuel)
    if isinstance(outcome, FuelExhausted):
        print(format_outcome(outcome, rules)[0])
        return 0
    print(format_term(outcome.term))
    return 0
