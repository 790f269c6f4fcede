"""
Suite result models.

Per-instance checks return an `InstanceResult`; the runner folds them into a
`SuiteReport`. A failure records the offending term (printed in concrete
syntax), the violated property and the instance index, which is enough for
`replay` to reproduce it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class Verdict(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"  # budget hit, no conclusion
    EXCLUDED = "excluded"  # outside the suite's domain, not counted


@dataclass(frozen=True)
class InstanceResult:
    verdict: Verdict
    reason: str = ""

    @classmethod
    def passed(cls) -> InstanceResult:
        return cls(Verdict.PASSED)

    @classmethod
    def failed(cls, reason: str) -> InstanceResult:
        return cls(Verdict.FAILED, reason)

    @classmethod
    def skipped(cls, reason: str = "") -> InstanceResult:
        return cls(Verdict.SKIPPED, reason)

    @classmethod
    def excluded(cls) -> InstanceResult:
        return cls(Verdict.EXCLUDED)


@dataclass(frozen=True)
class Failure:
    index: int  # replay key: position in the suite's instance stream
    subject: str
    violated: str

    def to_dict(self) -> dict[str, Any]:
        return {"index": self.index, "subject": self.subject, "violated": self.violated}


@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    skipped: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, index: int, subject: str, result: InstanceResult) -> None:
        if result.verdict is Verdict.EXCLUDED:
            return
        if result.verdict is Verdict.SKIPPED:
            self.skipped += 1
            return
        self.checked += 1
        if result.verdict is Verdict.FAILED:
            self.failures.append(Failure(index, subject, result.reason))

    def merge(self, other: SuiteReport) -> SuiteReport:
        failures = sorted([*self.failures, *other.failures], key=lambda f: f.index)
        return SuiteReport(
            self.suite, self.checked + other.checked, self.skipped + other.skipped, failures
        )

    def summary(self) -> str:
        status = "ok" if self.ok else "FAILED"
        line = (
            f"{self.suite}: {status} ({self.checked} checked, "
            f"{len(self.failures)} failed, {self.skipped} skipped)"
        )
        details = [f"  #{f.index} {f.subject}: {f.violated}" for f in self.failures]
        return "\n".join([line, *details])

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "skipped": self.skipped,
            "failed": len(self.failures),
            "failures": [f.to_dict() for f in self.failures],
        }


def reports_to_json(reports: list[SuiteReport]) -> str:
    return json.dumps({"suites": [r.to_dict() for r in reports]}, indent=2)
