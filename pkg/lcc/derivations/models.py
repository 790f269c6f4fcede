"""
Derivation data models: contexts, judgments, rule tags, witnesses and
check outcomes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Mapping, Optional, Union

from lcc.syntax import CaseBinding, Term, format_binding, format_term
from lcc.types import (
    TypeExpr,
    TypeVar,
    TypeVector,
    format_type,
    free_vars_of_all,
    type_alpha_key,
)


@dataclass(frozen=True, eq=False)
class Context:
    """A finite mapping from term variables to types; insertion order kept for printing."""

    bindings: tuple[tuple[str, TypeExpr], ...] = ()

    @classmethod
    def of(cls, mapping: Mapping[str, TypeExpr]) -> Context:
        return cls(tuple(mapping.items()))

    def get(self, name: str) -> Optional[TypeExpr]:
        for x, ty in self.bindings:
            if x == name:
                return ty
        return None

    def __contains__(self, name: object) -> bool:
        return any(x == name for x, _ in self.bindings)

    def __iter__(self) -> Iterator[tuple[str, TypeExpr]]:
        return iter(self.bindings)

    def __len__(self) -> int:
        return len(self.bindings)

    def extend(self, name: str, ty: TypeExpr) -> Context:
        """`Γ, x:T`; an existing binding of `x` is shadowed (replaced in place)."""
        if name in self:
            return Context(tuple((x, ty if x == name else u) for x, u in self.bindings))
        return Context(self.bindings + ((name, ty),))

    def without(self, name: str) -> Context:
        return Context(tuple((x, u) for x, u in self.bindings if x != name))

    def type_vars(self) -> frozenset[TypeVar]:
        return free_vars_of_all(ty for _, ty in self.bindings)

    def _key(self) -> frozenset[tuple[str, object]]:
        return frozenset((x, type_alpha_key(ty)) for x, ty in self.bindings)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Context):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())


EMPTY_CONTEXT = Context()


@dataclass(frozen=True)
class Subtype:
    lhs: TypeExpr
    rhs: TypeExpr


@dataclass(frozen=True)
class TermTyping:
    ctx: Context
    subject: Term
    ty: TypeExpr


@dataclass(frozen=True)
class BindingTyping:
    ctx: Context
    subject: CaseBinding
    ty: TypeExpr


Typing = Union[TermTyping, BindingTyping]
Judgment = Union[Subtype, TermTyping, BindingTyping]


# ---------------------------------------------------------------------------
# Rule tags (the names used in scripts)
# ---------------------------------------------------------------------------


class TypingRule(str, Enum):
    CB = "Cb"
    CB_BOT = "CbBot"
    INIT = "Init"
    FALSE = "False"
    CONSTR = "Constr"
    ARROW_INTRO = "ArrowIntro"
    ARROW_ELIM = "ArrowElim"
    CASE = "Case"
    UNIV = "Univ"
    INTER = "Inter"
    EXIST = "Exist"
    UNION = "Union"
    SUBS = "Subs"


class SubtypingRule(str, Enum):
    REFL = "Refl"
    TRANS = "Trans"
    ARROW = "Arrow"
    APP = "App"
    UNION_INTRO_L = "UnionIntroL"
    UNION_INTRO_R = "UnionIntroR"
    UNION_ELIM = "UnionElim"
    INTER_INTRO = "InterIntro"
    INTER_ELIM_L = "InterElimL"
    INTER_ELIM_R = "InterElimR"
    FORALL_INTRO = "ForallIntro"
    FORALL_ELIM = "ForallElim"
    FORALL_ELIM_D = "ForallElimD"
    EXISTS_INTRO = "ExistsIntro"
    EXISTS_INTRO_D = "ExistsIntroD"
    EXISTS_ELIM = "ExistsElim"
    DATA = "Data"
    CONSTR = "Constr"
    # distributivity axioms (binary instances)
    APP_INTER = "App/Inter"
    APP_FORALL = "App/Forall"
    ARROW_INTER = "Arrow/Inter"
    ARROW_FORALL = "Arrow/Forall"
    ARROW_UNION = "Arrow/Union"
    ARROW_EXISTS = "Arrow/Exists"
    UNION_APP_R = "Union/AppR"
    UNION_APP_L = "Union/AppL"
    EXISTS_APP_R = "Exists/AppR"
    EXISTS_APP_L = "Exists/AppL"
    UNION_FORALL = "Union/Forall"
    EXISTS_INTER = "Exists/Inter"


# ---------------------------------------------------------------------------
# Derivations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Witnesses:
    """Rule-specific data that keeps checking local."""

    instance: Optional[TypeExpr] = None  # `with`: ForallElim(D), ExistsIntro(D)
    index: Optional[int] = None  # Cb: 1-based index of the selected branch
    splits: tuple[tuple[TypeVector, TypeExpr], ...] = ()  # Cb: per-branch (U; T)
    vector: Optional[TypeVector] = None  # Case
    var: Optional[TypeVar] = None  # Univ, Exist
    on: Optional[str] = None  # Exist, Union: the context variable rewritten


NO_WITNESSES = Witnesses()


@dataclass(frozen=True)
class Derivation:
    rule: str
    conclusion: Judgment
    premises: tuple[Derivation, ...] = ()
    witnesses: Witnesses = NO_WITNESSES

    def size(self) -> int:
        return 1 + sum(p.size() for p in self.premises)


DerivationPath = tuple[int, ...]


def format_path(path: DerivationPath) -> str:
    return "/".join(["root", *(str(i) for i in path)])


@dataclass(frozen=True)
class Rejection:
    path: DerivationPath
    rule: str
    reason: str

    def __str__(self) -> str:
        return f"rejected at {format_path(self.path)} ({self.rule}): {self.reason}"


@dataclass(frozen=True)
class CheckOutcome:
    accepted: bool
    judgment: Optional[Judgment] = None
    rejection: Optional[Rejection] = None
    warnings: tuple[str, ...] = field(default_factory=tuple)

    @classmethod
    def accept(cls, judgment: Judgment, warnings: tuple[str, ...] = ()) -> CheckOutcome:
        return cls(True, judgment, None, warnings)

    @classmethod
    def reject(cls, rejection: Rejection, warnings: tuple[str, ...] = ()) -> CheckOutcome:
        return cls(False, None, rejection, warnings)


# ---------------------------------------------------------------------------
# Printing (the judgment syntax of derivation scripts)
# ---------------------------------------------------------------------------


def format_context(ctx: Context) -> str:
    return ", ".join(f"{x} : {format_type(ty)}" for x, ty in ctx)


def format_judgment(j: Judgment) -> str:
    if isinstance(j, Subtype):
        return f"{format_type(j.lhs)} <= {format_type(j.rhs)}"
    subject = format_binding(j.subject) if isinstance(j, BindingTyping) else format_term(j.subject)
    hyps = format_context(j.ctx)
    prefix = f"{hyps} |- " if hyps else "|- "
    return f"{prefix}{subject} : {format_type(j.ty)}"
