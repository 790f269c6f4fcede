"""
Friendly error models.

Every error the CLI reports is a FriendlyError: what went wrong, what to do
about it, and the exit code it maps to.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any


class ErrorSeverity(str, Enum):
    """Who can fix the error."""

    INPUT = "input"  # unreadable or malformed input: fix the file or the flags
    REJECTED = "rejected"  # well-formed input that fails a semantic check
    CRITICAL = "critical"  # a bug in lcc itself


EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_INPUT = 2


@dataclass
class FriendlyError:
    """A user-facing error with guidance and an exit code."""

    message: str
    severity: ErrorSeverity
    error_code: str = ""  # machine-readable, e.g. TERM_SYNTAX
    action: str = ""
    exit_code: int = EXIT_INPUT
    original_error: str = ""  # the raw exception text, shown indented under the message

    def render(self) -> str:
        lines = [f"error: {self.message}"]
        if self.original_error:
            lines.extend(f"  {line}" for line in self.original_error.splitlines())
        if self.action:
            lines.append(f"hint: {self.action}")
        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        return {
            "type": "error",
            "severity": self.severity.value,
            "message": self.message,
            "action": self.action,
            "error_code": self.error_code,
            "exit_code": self.exit_code,
        }
