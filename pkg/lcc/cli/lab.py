"""
`lcc lab`: run the property suites.

Flags override the optional `--config` YAML file. Exit 1 when any suite
reports a failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any

from lcc.errors import EXIT_INPUT, EXIT_OK, EXIT_REJECTED
from lcc.lab import (
    SUITES,
    LabConfig,
    Verdict,
    load_lab_config,
    override,
    replay,
    reports_to_json,
    run_suites,
)


def load_config(args: argparse.Namespace) -> LabConfig:
    cfg = load_lab_config(args.config) if args.config else LabConfig()
    changes: dict[str, Any] = {
        key: value
        for key, value in (("size", args.size), ("workers", args.workers), ("corpus", args.corpus))
        if value is not None
    }
    return override(cfg, changes)


def run(args: argparse.Namespace) -> int:
    if args.list:
        for suite in SUITES.values():
            print(f"{suite.name:<24} {suite.description}")
        return EXIT_OK
    cfg = load_config(args)
    if args.replay is not None:
        if len(args.suites) != 1:
            print("--replay needs exactly one suite name", file=sys.stderr)
            return EXIT_INPUT
        subject, result = replay(args.suites[0], cfg, args.replay)
        print(f"#{args.replay} {subject}: {result.verdict.value} {result.reason}".rstrip())
        return EXIT_REJECTED if result.verdict is Verdict.FAILED else EXIT_OK
    reports = run_suites(args.suites, cfg)
    for report in reports:
        print(report.summary())
    if args.report:
        Path(args.report).write_text(reports_to_json(reports) + "\n", encoding="utf-8")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_REJECTED
