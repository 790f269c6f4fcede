"""
Reduction data models: rule tags, rule sets, redexes, traces and outcomes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import ClassVar, Iterable, Optional, Union

from lcc.syntax import Position, Term, format_position


class RuleName(str, Enum):
    """The nine rewrite rules, in leftmost-outermost priority order."""

    AL = "AL"  # (\x. t) u -> t{x := u}
    AD = "AD"  # ! u -> !
    LA = "LA"  # \x. t x -> t, x not free in t
    LD = "LD"  # \x. ! -> !
    CO = "CO"  # {| c -> u ; ... |}. c -> u
    CD = "CD"  # {| ... |}. ! -> !
    CA = "CA"  # {|b|}. (t u) -> ({|b|}. t) u
    CL = "CL"  # {|b|}. \x. t -> \x. {|b|}. t
    CC = "CC"  # {|b|}. {|c|}. t -> {|b o c|}. t

    @property
    def long_name(self) -> str:
        return _LONG_NAMES[self]

    @property
    def priority(self) -> int:
        return _PRIORITY[self]


_LONG_NAMES = {
    RuleName.AL: "AppLam",
    RuleName.AD: "AppDai",
    RuleName.LA: "LamApp",
    RuleName.LD: "LamDai",
    RuleName.CO: "CaseCons",
    RuleName.CD: "CaseDai",
    RuleName.CA: "CaseApp",
    RuleName.CL: "CaseLam",
    RuleName.CC: "CaseCase",
}

_PRIORITY = {rule: index for index, rule in enumerate(RuleName)}


class UnknownRuleSetError(ValueError):
    """Raised when a `--rules` value names neither a preset nor rule tags."""


@dataclass(frozen=True)
class RuleSet:
    """A subset of the nine rules, optionally carrying a preset name."""

    enabled: frozenset[RuleName]
    name: str = field(default="", compare=False)

    PRESET_NAMES: ClassVar[tuple[str, ...]] = ("full", "lcminus", "lcom", "lb")

    @classmethod
    def of(cls, rules: Iterable[Union[RuleName, str]], name: str = "") -> RuleSet:
        return cls(frozenset(RuleName(r) for r in rules), name)

    @classmethod
    def parse(cls, text: str) -> RuleSet:
        """Accept a preset name (`lcminus`) or a comma list of rule tags (`AL,CO`)."""
        key = text.strip().lower().replace("_", "").replace("-", "")
        if key in PRESETS:
            return PRESETS[key]
        tags = [part.strip().upper() for part in text.split(",") if part.strip()]
        unknown = [tag for tag in tags if tag not in RuleName.__members__]
        if not tags or unknown:
            raise UnknownRuleSetError(
                f"unknown rule set {text!r}: expected one of "
                f"{', '.join(cls.PRESET_NAMES)} or a comma list of "
                f"{', '.join(r.value for r in RuleName)}"
            )
        return cls.of(tags)

    def __contains__(self, rule: object) -> bool:
        return rule in self.enabled

    def ordered(self) -> list[RuleName]:
        return sorted(self.enabled, key=lambda r: r.priority)

    def union(self, other: RuleSet) -> RuleSet:
        return RuleSet(self.enabled | other.enabled)

    @property
    def label(self) -> str:
        return self.name or ",".join(r.value for r in self.ordered())


FULL = RuleSet(frozenset(RuleName), "full")
LC_MINUS = RuleSet(frozenset(RuleName) - {RuleName.CC}, "lcminus")
LCOM = RuleSet(frozenset({RuleName.CA, RuleName.CL}), "lcom")
LB = RuleSet(
    frozenset(
        {RuleName.AL, RuleName.AD, RuleName.LA, RuleName.LD, RuleName.CO, RuleName.CD}
    ),
    "lb",
)

PRESETS: dict[str, RuleSet] = {"full": FULL, "lcminus": LC_MINUS, "lcom": LCOM, "lb": LB}


# ---------------------------------------------------------------------------
# Redexes and traces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Redex:
    position: Position
    rule: RuleName

    def sort_key(self) -> tuple[Position, int]:
        """Leftmost-outermost order: pre-order on positions, then rule priority."""
        return self.position, self.rule.priority

    def __str__(self) -> str:
        return f"{self.rule.value}@{format_position(self.position)}"


@dataclass(frozen=True)
class Step:
    redex: Redex
    term: Term  # the reduct


@dataclass(frozen=True)
class NormalForm:
    term: Term
    trace: tuple[Step, ...] = ()

    @property
    def steps(self) -> int:
        return len(self.trace)


@dataclass(frozen=True)
class FuelExhausted:
    term: Term  # last term reached
    trace: tuple[Step, ...] = ()

    @property
    def steps(self) -> int:
        return len(self.trace)


Outcome = Union[NormalForm, FuelExhausted]


class InvalidRedex(ValueError):
    """Raised when a redex's rule does not match the subterm at its position."""


class MeasureNotDecreasing(RuntimeError):
    """Internal fault: a case-normal-form recursion failed to decrease the structural measure."""


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


class ClassificationKind(str, Enum):
    UNDEFINED = "undefined"
    OPEN = "open"
    VALUE_DATA = "value-data"
    VALUE_ABSTRACTION = "value-abstraction"
    NEUTRAL = "neutral"


@dataclass(frozen=True)
class Classification:
    kind: ClassificationKind
    free_vars: frozenset[str] = field(default_factory=frozenset)
    witness: Optional[Position] = None  # leftmost match failure, for UNDEFINED

    @property
    def is_value(self) -> bool:
        return self.kind in (ClassificationKind.VALUE_DATA, ClassificationKind.VALUE_ABSTRACTION)

    def __str__(self) -> str:
        if self.kind is ClassificationKind.UNDEFINED and self.witness is not None:
            return f"undefined (match failure at {format_position(self.witness)})"
        if self.kind is ClassificationKind.OPEN:
            return f"open (free: {', '.join(sorted(self.free_vars))})"
        return self.kind.value


class GraphStatus(str, Enum):
    COMPLETE = "complete"  # fully explored, acyclic
    CYCLIC = "cyclic"  # fully explored, contains a cycle
    TRUNCATED = "truncated"  # node or depth budget hit
