"""Typing and sub-typing derivations: models, the checker and a bounded search."""

from lcc.derivations.checker import check_derivation, check_subtyping, check_typing
from lcc.derivations.models import (
    EMPTY_CONTEXT,
    NO_WITNESSES,
    BindingTyping,
    CheckOutcome,
    Context,
    Derivation,
    DerivationPath,
    Judgment,
    Rejection,
    Subtype,
    SubtypingRule,
    TermTyping,
    Typing,
    TypingRule,
    Witnesses,
    format_context,
    format_judgment,
    format_path,
)
from lcc.derivations.search import match_instance, search_subtyping

__all__ = [
    "BindingTyping",
    "CheckOutcome",
    "Context",
    "Derivation",
    "DerivationPath",
    "EMPTY_CONTEXT",
    "Judgment",
    "NO_WITNESSES",
    "Rejection",
    "Subtype",
    "SubtypingRule",
    "TermTyping",
    "Typing",
    "TypingRule",
    "Witnesses",
    "check_derivation",
    "check_subtyping",
    "check_typing",
    "format_context",
    "format_judgment",
    "format_path",
    "match_instance",
    "search_subtyping",
]
