"""`lcc cnf`, `lcc classify` and `lcc measure`: one-shot term queries."""

from __future__ import annotations

import argparse

from lcc.parsing import parse_term_file
from lcc.reduction import case_normal_form, classify
from lcc.syntax import format_term, structural_measure, term_size


def run_cnf(args: argparse.Namespace) -> int:
    print(format_term(case_normal_form(parse_term_file(args.file))))
    return 0


def run_classify(args: argparse.Namespace) -> int:
    print(classify(parse_term_file(args.file)))
    return 0


def run_measure(args: argparse.Namespace) -> int:
    term = parse_term_file(args.file)
    print(f"measure {structural_measure(term)} (size {term_size(term)})")
    return 0
