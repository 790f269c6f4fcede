"""
Error catalog.

Exceptions are matched by type first (most specific first), then the raw
message is matched against regex patterns. First match wins. When a new
failure mode shows up, add an entry here and a test in
tests/test_error_handler.py.
"""

import re

from lcc.derivations.base import RuleViolation
from lcc.errors.models import EXIT_INPUT, EXIT_REJECTED, ErrorSeverity, FriendlyError
from lcc.lab.config import LabConfigError
from lcc.lab.runner import UnknownSuiteError
from lcc.parsing import ScriptError, TermSyntaxError
from lcc.reduction import InvalidRedex, MeasureNotDecreasing, UnknownRuleSetError
from lcc.reduction.engine import UnknownStrategyError
from lcc.syntax import DuplicateBranchError
from lcc.types import DataSubstitutionViolation, IllFormedTypeError

ERROR_TYPES: list[tuple[type[BaseException], FriendlyError]] = [
    # ── Input: exit 2 ──────────────────────────────────────────────────────
    (
        TermSyntaxError,
        FriendlyError(
            message="The input could not be parsed.",
            severity=ErrorSeverity.INPUT,
            error_code="SYNTAX",
            action="Check the reported line and column against the expected tokens",
        ),
    ),
    (
        ScriptError,
        FriendlyError(
            message="The derivation script is malformed.",
            severity=ErrorSeverity.INPUT,
            error_code="SCRIPT",
            action='Nodes are written (Rule "judgment" key="value" premise...)',
        ),
    ),
    (
        DuplicateBranchError,
        FriendlyError(
            message="A case binding names the same constructor twice.",
            severity=ErrorSeverity.INPUT,
            error_code="DUPLICATE_BRANCH",
            action="Keep one branch per constructor",
        ),
    ),
    (
        IllFormedTypeError,
        FriendlyError(
            message="The type is not well formed.",
            severity=ErrorSeverity.INPUT,
            error_code="ILL_FORMED_TYPE",
            action="Type application heads must be constants, data variables or applications",
        ),
    ),
    (
        LabConfigError,
        FriendlyError(
            message="The lab configuration is invalid.",
            severity=ErrorSeverity.INPUT,
            error_code="LAB_CONFIG",
            action="Fix the listed fields in the configuration file",
        ),
    ),
    (
        UnknownRuleSetError,
        FriendlyError(
            message="Unknown rule set.",
            severity=ErrorSeverity.INPUT,
            error_code="RULE_SET",
            action="Use full, lcminus, lcom, lb or a comma list such as AL,CO",
        ),
    ),
    (
        UnknownStrategyError,
        FriendlyError(
            message="Unknown reduction strategy.",
            severity=ErrorSeverity.INPUT,
            error_code="STRATEGY",
            action="Use lo or random:SEED",
        ),
    ),
    (
        UnknownSuiteError,
        FriendlyError(
            message="Unknown lab suite.",
            severity=ErrorSeverity.INPUT,
            error_code="SUITE",
            action="Run `lcc lab --list` to see the available suites",
        ),
    ),
    (
        UnicodeDecodeError,
        FriendlyError(
            message="The file is not valid UTF-8.",
            severity=ErrorSeverity.INPUT,
            error_code="ENCODING",
            action="Save the file as UTF-8",
        ),
    ),
    (
        OSError,
        FriendlyError(
            message="A file could not be read or written.",
            severity=ErrorSeverity.INPUT,
            error_code="IO",
            action="Check the path and its permissions",
        ),
    ),
    # ── Semantic: exit 1 ───────────────────────────────────────────────────
    (
        InvalidRedex,
        FriendlyError(
            message="The requested redex does not match the term.",
            severity=ErrorSeverity.REJECTED,
            error_code="INVALID_REDEX",
            exit_code=EXIT_REJECTED,
        ),
    ),
    (
        DataSubstitutionViolation,
        FriendlyError(
            message="A non-data type was substituted for a data variable.",
            severity=ErrorSeverity.REJECTED,
            error_code="DATA_SUBSTITUTION",
            exit_code=EXIT_REJECTED,
        ),
    ),
    (
        RuleViolation,
        FriendlyError(
            message="A derivation rule was misapplied.",
            severity=ErrorSeverity.REJECTED,
            error_code="RULE_VIOLATION",
            exit_code=EXIT_REJECTED,
        ),
    ),
    (
        MeasureNotDecreasing,
        FriendlyError(
            message="Case commutation failed to decrease the structural measure.",
            severity=ErrorSeverity.CRITICAL,
            error_code="MEASURE",
            action="Please report the term; this is a bug in the commutation rules",
            exit_code=EXIT_REJECTED,
        ),
    ),
]

ERROR_PATTERNS: list[tuple[re.Pattern[str], FriendlyError]] = [
    (
        re.compile(r"has no instance #\d+"),
        FriendlyError(
            message="The suite has no instance at that index.",
            severity=ErrorSeverity.INPUT,
            error_code="REPLAY_INDEX",
            action="Use an index reported by a failing run with the same configuration",
        ),
    ),
    (
        re.compile(r"maximum recursion depth exceeded", re.IGNORECASE),
        FriendlyError(
            message="The term is too deeply nested to process.",
            severity=ErrorSeverity.INPUT,
            error_code="TOO_DEEP",
            action="Split the term or lower --fuel / --max-nodes",
        ),
    ),
]


GENERIC_ERROR = FriendlyError(
    message="Something unexpected went wrong.",
    severity=ErrorSeverity.CRITICAL,
    error_code="UNKNOWN",
    action="Re-run with -vv for details and report the input that triggered it",
    exit_code=EXIT_REJECTED,
)
