"""
Suite runner.

Runs suites over their instance streams, in-process or sharded across a
process pool (instance `i` goes to shard `i % workers`); shard reports merge
into the same report a single process would produce.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import islice
from pathlib import Path
from typing import Any, Optional, Union

from lcc.lab.config import LabConfig
from lcc.lab.models import InstanceResult, SuiteReport, Verdict
from lcc.lab.suites import SUITES, Suite, check_confluence
from lcc.reduction import RuleSet

logger = logging.getLogger(__name__)


class UnknownSuiteError(ValueError):
    pass


def get_suite(name: str) -> Suite:
    suite = SUITES.get(name)
    if suite is None:
        raise UnknownSuiteError(f"unknown suite {name!r}: expected one of {', '.join(SUITES)}")
    return suite


def _run_shard(name: str, cfg: LabConfig, shard: int, workers: int) -> SuiteReport:
    suite = get_suite(name)
    report = SuiteReport(name)
    for index, instance in enumerate(suite.instances(cfg)):
        if index % workers != shard:
            continue
        result = suite.check(instance, cfg)
        report.record(index, suite.show(instance), result)
        if result.verdict is Verdict.SKIPPED and result.reason:
            logger.debug(f"{name} #{index} skipped: {result.reason}")
    return report


def run_suite(name: str, cfg: Optional[LabConfig] = None) -> SuiteReport:
    cfg = cfg or LabConfig()
    get_suite(name)
    started = time.monotonic()
    if cfg.workers == 1:
        report = _run_shard(name, cfg, 0, 1)
    else:
        report = SuiteReport(name)
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            futures = [
                pool.submit(_run_shard, name, cfg, shard, cfg.workers)
                for shard in range(cfg.workers)
            ]
            for future in futures:
                report = report.merge(future.result())
    elapsed = time.monotonic() - started
    logger.info(
        f"{name}: {report.checked} checked, {len(report.failures)} failed, "
        f"{report.skipped} skipped in {elapsed:.1f}s"
    )
    return report


def run_suites(names: list[str], cfg: Optional[LabConfig] = None) -> list[SuiteReport]:
    return [run_suite(name, cfg) for name in (names or list(SUITES))]


def replay(name: str, cfg: LabConfig, index: int) -> tuple[str, InstanceResult]:
    """Re-run the check on instance `index` of a suite's stream."""
    suite = get_suite(name)
    instance: Any = next(islice(suite.instances(cfg), index, None), None)
    if instance is None:
        raise IndexError(f"{name} has no instance #{index}")
    return suite.show(instance), suite.check(instance, cfg)


# ---------------------------------------------------------------------------
# One entry point per suite
# ---------------------------------------------------------------------------


def suite_com_normalization(cfg: Optional[LabConfig] = None) -> SuiteReport:
    return run_suite("com-normalization", cfg)


def suite_normal_form_shape(cfg: Optional[LabConfig] = None) -> SuiteReport:
    return run_suite("normal-form-shape", cfg)


def suite_commutation_simulation(cfg: Optional[LabConfig] = None) -> SuiteReport:
    return run_suite("commutation-simulation", cfg)


def suite_confluence(
    cfg: Optional[LabConfig] = None, rules: Optional[RuleSet] = None
) -> SuiteReport:
    cfg = cfg or LabConfig()
    if rules is not None:
        cfg = cfg.model_copy(update={"confluence_rules": rules.label})
    return run_suite("confluence", cfg)


def suite_principal_reduct(cfg: Optional[LabConfig] = None) -> SuiteReport:
    return run_suite("principal-reduct", cfg)


def suite_typed_soundness(
    cfg: Optional[LabConfig] = None, corpus: Optional[Union[str, Path]] = None
) -> SuiteReport:
    cfg = cfg or LabConfig()
    if corpus is not None:
        cfg = cfg.model_copy(update={"corpus": str(corpus)})
    return run_suite("typed-soundness", cfg)


def suite_substitution_pn(cfg: Optional[LabConfig] = None) -> SuiteReport:
    return run_suite("substitution-pn", cfg)


def suite_round_trip(cfg: Optional[LabConfig] = None) -> SuiteReport:
    return run_suite("round-trip", cfg)


__all__ = [
    "UnknownSuiteError",
    "check_confluence",
    "get_suite",
    "replay",
    "run_suite",
    "run_suites",
    "suite_com_normalization",
    "suite_commutation_simulation",
    "suite_confluence",
    "suite_normal_form_shape",
    "suite_principal_reduct",
    "suite_round_trip",
    "suite_substitution_pn",
    "suite_typed_soundness",
]
