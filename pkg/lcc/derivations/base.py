"""
Shared helpers for local rule checks.

A rule check looks only at one node: its conclusion, the conclusions of its
premises and its witnesses. It raises `RuleViolation` with a reason; the
walker in `checker.py` turns that into a `Rejection` carrying the node path.
"""

from __future__ import annotations

from typing import Callable, Optional

from lcc.derivations.models import (
    BindingTyping,
    Derivation,
    Subtype,
    TermTyping,
    Typing,
)
from lcc.syntax import CaseBinding, Term, alpha_eq, format_binding, format_term
from lcc.types import TypeExpr, TypeVar, format_type, type_alpha_eq, type_free_vars

Warn = Callable[[str], None]


class RuleViolation(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def require(condition: bool, reason: str) -> None:
    if not condition:
        raise RuleViolation(reason)


def premise_count(d: Derivation, expected: int) -> None:
    found = len(d.premises)
    require(found == expected, f"expects {expected} premise(s), found {found}")


def same_type(actual: TypeExpr, expected: TypeExpr, what: str) -> None:
    require(
        type_alpha_eq(actual, expected),
        f"{what}: expected {format_type(expected)}, found {format_type(actual)}",
    )


def fresh_for(var: TypeVar, t: TypeExpr, condition: str) -> None:
    require(var not in type_free_vars(t), f"side condition {condition} violated: {var} is free")


def subtype_of(d: Derivation, what: str = "conclusion") -> Subtype:
    judgment = d.conclusion
    require(isinstance(judgment, Subtype), f"{what} must be a sub-typing judgment")
    assert isinstance(judgment, Subtype)
    return judgment


def typing_of(d: Derivation, what: str = "conclusion") -> Typing:
    judgment = d.conclusion
    require(
        isinstance(judgment, (TermTyping, BindingTyping)), f"{what} must be a typing judgment"
    )
    assert isinstance(judgment, (TermTyping, BindingTyping))
    return judgment


def term_typing_of(d: Derivation, what: str = "conclusion") -> TermTyping:
    judgment = d.conclusion
    require(isinstance(judgment, TermTyping), f"{what} must type a term")
    assert isinstance(judgment, TermTyping)
    return judgment


def binding_typing_of(d: Derivation, what: str = "conclusion") -> BindingTyping:
    judgment = d.conclusion
    require(isinstance(judgment, BindingTyping), f"{what} must type a case binding")
    assert isinstance(judgment, BindingTyping)
    return judgment


def same_bindings(a: CaseBinding, b: CaseBinding) -> bool:
    if a.domain != b.domain:
        return False
    return all(alpha_eq(u, b.get(c)) for c, u in a)  # type: ignore[arg-type]


def same_subject(
    a: Term | CaseBinding, b: Term | CaseBinding, what: str = "premise subject"
) -> None:
    if isinstance(a, CaseBinding) or isinstance(b, CaseBinding):
        ok = isinstance(a, CaseBinding) and isinstance(b, CaseBinding) and same_bindings(a, b)
    else:
        ok = alpha_eq(a, b)
    require(ok, f"{what}: expected {_show(b)}, found {_show(a)}")


def _show(subject: Optional[Term | CaseBinding]) -> str:
    if subject is None:
        return "nothing"
    if isinstance(subject, CaseBinding):
        return format_binding(subject)
    return format_term(subject)
