"""`lcc subtype`: search for a sub-typing derivation and print it as a script."""

from __future__ import annotations

import argparse

from lcc.derivations import search_subtyping
from lcc.parsing import format_script, parse_type


def run(args: argparse.Namespace) -> int:
    found = search_subtyping(parse_type(args.lhs), parse_type(args.rhs), args.depth)
    if found is None:
        print("not found (inconclusive)")
        return 0
    print(format_script(found))
    return 0
