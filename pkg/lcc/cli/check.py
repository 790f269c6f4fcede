"""
`lcc check`: validate a derivation script.

Exit 0 when every node is a correct rule instance, 1 with the first
offending node path and reason otherwise. Warnings go to stderr.
"""

from __future__ import annotations

import argparse
import sys

from lcc.derivations import check_derivation, format_judgment
from lcc.errors import EXIT_OK, EXIT_REJECTED
from lcc.parsing import load_script


def run(args: argparse.Namespace) -> int:
    outcome = check_derivation(load_script(args.script))
    for warning in outcome.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if not outcome.accepted:
        print(outcome.rejection)
        return EXIT_REJECTED
    assert outcome.judgment is not None
    print(f"accepted: {format_judgment(outcome.judgment)}")
    return EXIT_OK
