"""
Local checks for the typing rules (terms and case bindings).

Two-premise rules require their premises to share the conclusion's context
exactly. Exist and Union rewrite the single context variable named by their
`on` witness.
"""

from __future__ import annotations

from typing import Callable

from lcc.derivations.base import (
    RuleViolation,
    Warn,
    binding_typing_of,
    fresh_for,
    premise_count,
    require,
    same_subject,
    same_type,
    subtype_of,
    term_typing_of,
    typing_of,
)
from lcc.derivations.models import (
    BindingTyping,
    Context,
    Derivation,
    TermTyping,
    Typing,
    TypingRule,
)
from lcc.syntax import App, Case, Constr, Daimon, Lam, Var
from lcc.types import (
    DATA_BOTTOM,
    ORD_BOTTOM,
    Arrow,
    Exists,
    Forall,
    TConstr,
    TInter,
    TUnion,
    TypeExpr,
    arrow_chain,
    format_type,
    type_application,
)

TypingCheck = Callable[[Derivation, Typing, Warn], None]


def _same_context(premise: Typing, expected: Context, what: str) -> None:
    require(premise.ctx == expected, f"{what} context differs from the expected context")


# ---------------------------------------------------------------------------
# Case bindings
# ---------------------------------------------------------------------------


def _cb(d: Derivation, j: Typing, warn: Warn) -> None:
    require(isinstance(j, BindingTyping), "Cb types a case binding")
    assert isinstance(j, BindingTyping)
    branches = list(j.subject)
    n = len(branches)
    premise_count(d, n)
    index = d.witnesses.index
    require(index is not None, "missing `index` witness (the selected branch, 1-based)")
    assert index is not None
    require(1 <= index <= n, f"index {index} is out of range 1..{n}")
    splits = d.witnesses.splits
    require(
        not splits or len(splits) == n,
        f"expects one `split` witness per branch ({n}), found {len(splits)}",
    )
    resolved: list[tuple[tuple[TypeExpr, ...], TypeExpr]] = []
    for i, ((constructor, body), premise) in enumerate(zip(branches, d.premises), start=1):
        p = term_typing_of(premise, f"premise {i}")
        _same_context(p, j.ctx, f"premise {i}")
        same_subject(p.subject, body, f"premise {i} subject (branch {constructor})")
        vector, result = splits[i - 1] if splits else ((), p.ty)
        same_type(
            p.ty, arrow_chain(vector, result), f"premise {i} type (split of branch {constructor})"
        )
        resolved.append((vector, result))
    constructor = branches[index - 1][0]
    vector, result = resolved[index - 1]
    expected = Arrow(type_application(TConstr(constructor), vector), result)
    same_type(j.ty, expected, "conclusion type")


def _cb_bot(d: Derivation, j: Typing, warn: Warn) -> None:
    require(isinstance(j, BindingTyping), "CbBot types a case binding")
    assert isinstance(j, BindingTyping)
    branches = list(j.subject)
    premise_count(d, len(branches))
    for i, ((constructor, body), premise) in enumerate(zip(branches, d.premises), start=1):
        p = term_typing_of(premise, f"premise {i}")
        _same_context(p, j.ctx, f"premise {i}")
        same_subject(p.subject, body, f"premise {i} subject (branch {constructor})")
    same_type(j.ty, Arrow(DATA_BOTTOM, ORD_BOTTOM), "conclusion type")


# ---------------------------------------------------------------------------
# Terms
# ---------------------------------------------------------------------------


def _init(d: Derivation, j: Typing, warn: Warn) -> None:
    premise_count(d, 0)
    require(isinstance(j.subject, Var), "Init types a variable")
    assert isinstance(j.subject, Var)
    name = j.subject.name
    declared = j.ctx.get(name)
    require(declared is not None, f"side condition violated: {name} is not in the context")
    assert declared is not None
    same_type(j.ty, declared, f"type of {name}")


def _false(d: Derivation, j: Typing, warn: Warn) -> None:
    premise_count(d, 0)
    require(isinstance(j.subject, Daimon), "False types the daimon")


def _constr(d: Derivation, j: Typing, warn: Warn) -> None:
    premise_count(d, 0)
    require(isinstance(j.subject, Constr), "Constr types a constructor")
    assert isinstance(j.subject, Constr)
    same_type(j.ty, TConstr(j.subject.name), "conclusion type")


def _arrow_intro(d: Derivation, j: Typing, warn: Warn) -> None:
    premise_count(d, 1)
    require(isinstance(j.subject, Lam), "ArrowIntro types an abstraction")
    require(
        isinstance(j.ty, Arrow), f"conclusion type must be an arrow, found {format_type(j.ty)}"
    )
    assert isinstance(j.subject, Lam) and isinstance(j.ty, Arrow)
    p = term_typing_of(d.premises[0], "premise")
    _same_context(p, j.ctx.extend(j.subject.bound, j.ty.dom), "premise")
    same_subject(p.subject, j.subject.body, "premise subject")
    same_type(p.ty, j.ty.cod, "premise type")


def _arrow_elim(d: Derivation, j: Typing, warn: Warn) -> None:
    premise_count(d, 2)
    require(isinstance(j.subject, App), "ArrowElim types an application")
    assert isinstance(j.subject, App)
    fun = term_typing_of(d.premises[0], "first premise")
    arg = term_typing_of(d.premises[1], "second premise")
    _same_context(fun, j.ctx, "first premise")
    _same_context(arg, j.ctx, "second premise")
    same_subject(fun.subject, j.subject.fun, "first premise subject")
    same_subject(arg.subject, j.subject.arg, "second premise subject")
    require(
        isinstance(fun.ty, Arrow),
        f"first premise type must be an arrow, found {format_type(fun.ty)}",
    )
    assert isinstance(fun.ty, Arrow)
    same_type(arg.ty, fun.ty.dom, "second premise type")
    same_type(j.ty, fun.ty.cod, "conclusion type")


def _case(d: Derivation, j: Typing, warn: Warn) -> None:
    premise_count(d, 2)
    require(isinstance(j.subject, Case), "Case types a case construct")
    assert isinstance(j.subject, Case)
    vector = d.witnesses.vector if d.witnesses.vector is not None else ()
    scrutinee = term_typing_of(d.premises[0], "first premise")
    binding = binding_typing_of(d.premises[1], "second premise")
    _same_context(scrutinee, j.ctx, "first premise")
    _same_context(binding, j.ctx, "second premise")
    same_subject(scrutinee.subject, j.subject.scrutinee, "first premise subject")
    same_subject(binding.subject, j.subject.binding, "second premise subject")
    require(
        isinstance(binding.ty, Arrow),
        f"second premise type must be an arrow, found {format_type(binding.ty)}",
    )
    assert isinstance(binding.ty, Arrow)
    same_type(scrutinee.ty, arrow_chain(vector, binding.ty.dom), "first premise type")
    same_type(j.ty, arrow_chain(vector, binding.ty.cod), "conclusion type")


# ---------------------------------------------------------------------------
# Shared rules (terms and bindings)
# ---------------------------------------------------------------------------


def _same_kind(p: Typing, j: Typing, what: str) -> None:
    require(type(p) is type(j), f"{what} types a different kind of subject")


def _univ(d: Derivation, j: Typing, warn: Warn) -> None:
    premise_count(d, 1)
    require(
        isinstance(j.ty, Forall), f"conclusion type must be universal, found {format_type(j.ty)}"
    )
    assert isinstance(j.ty, Forall)
    var = d.witnesses.var
    require(
        var is None or var == j.ty.var,
        f"witness variable {var} is not the quantified {j.ty.var}",
    )
    p = typing_of(d.premises[0], "premise")
    _same_kind(p, j, "premise")
    _same_context(p, j.ctx, "premise")
    same_subject(p.subject, j.subject)
    same_type(p.ty, j.ty.body, "premise type")
    require(
        j.ty.var not in j.ctx.type_vars(),
        f"side condition {j.ty.var} not in tv(context) violated",
    )


def _inter(d: Derivation, j: Typing, warn: Warn) -> None:
    premise_count(d, 2)
    require(
        isinstance(j.ty, TInter),
        f"conclusion type must be an intersection, found {format_type(j.ty)}",
    )
    assert isinstance(j.ty, TInter)
    for index, part in enumerate((j.ty.left, j.ty.right)):
        p = typing_of(d.premises[index], f"premise {index + 1}")
        _same_kind(p, j, f"premise {index + 1}")
        _same_context(p, j.ctx, f"premise {index + 1}")
        same_subject(p.subject, j.subject, f"premise {index + 1} subject")
        same_type(p.ty, part, f"premise {index + 1} type")


def _on(d: Derivation, j: Typing) -> tuple[str, TypeExpr]:
    name = d.witnesses.on
    require(name is not None, "missing `on` witness (the rewritten context variable)")
    assert name is not None
    declared = j.ctx.get(name)
    require(declared is not None, f"{name} is not in the conclusion context")
    assert declared is not None
    return name, declared


def _exist(d: Derivation, j: Typing, warn: Warn) -> None:
    premise_count(d, 1)
    name, declared = _on(d, j)
    require(
        isinstance(declared, Exists),
        f"{name} must have an existential type, found {format_type(declared)}",
    )
    assert isinstance(declared, Exists)
    var = d.witnesses.var
    require(
        var is None or var == declared.var,
        f"witness variable {var} is not the quantified {declared.var}",
    )
    p = typing_of(d.premises[0], "premise")
    _same_kind(p, j, "premise")
    _same_context(p, j.ctx.extend(name, declared.body), "premise")
    same_subject(p.subject, j.subject)
    same_type(p.ty, j.ty, "premise type")
    fresh_for(declared.var, j.ty, f"{declared.var} not in tv(conclusion type)")
    if declared.var in j.ctx.without(name).type_vars():
        warn(f"{declared.var} occurs free in the rest of the context")


def _union(d: Derivation, j: Typing, warn: Warn) -> None:
    premise_count(d, 2)
    name, declared = _on(d, j)
    require(
        isinstance(declared, TUnion),
        f"{name} must have a union type, found {format_type(declared)}",
    )
    assert isinstance(declared, TUnion)
    for index, part in enumerate((declared.left, declared.right)):
        p = typing_of(d.premises[index], f"premise {index + 1}")
        _same_kind(p, j, f"premise {index + 1}")
        _same_context(p, j.ctx.extend(name, part), f"premise {index + 1}")
        same_subject(p.subject, j.subject, f"premise {index + 1} subject")
        same_type(p.ty, j.ty, f"premise {index + 1} type")


def _subs(d: Derivation, j: Typing, warn: Warn) -> None:
    premise_count(d, 2)
    p = typing_of(d.premises[0], "first premise")
    s = subtype_of(d.premises[1], "second premise")
    _same_kind(p, j, "first premise")
    _same_context(p, j.ctx, "first premise")
    same_subject(p.subject, j.subject, "first premise subject")
    same_type(s.lhs, p.ty, "second premise left-hand side")
    same_type(j.ty, s.rhs, "conclusion type")


TYPING_CHECKS: dict[TypingRule, TypingCheck] = {
    TypingRule.CB: _cb,
    TypingRule.CB_BOT: _cb_bot,
    TypingRule.INIT: _init,
    TypingRule.FALSE: _false,
    TypingRule.CONSTR: _constr,
    TypingRule.ARROW_INTRO: _arrow_intro,
    TypingRule.ARROW_ELIM: _arrow_elim,
    TypingRule.CASE: _case,
    TypingRule.UNIV: _univ,
    TypingRule.INTER: _inter,
    TypingRule.EXIST: _exist,
    TypingRule.UNION: _union,
    TypingRule.SUBS: _subs,
}

_TERM_ONLY = {
    TypingRule.INIT,
    TypingRule.FALSE,
    TypingRule.CONSTR,
    TypingRule.ARROW_INTRO,
    TypingRule.ARROW_ELIM,
    TypingRule.CASE,
}


def check_typing_node(d: Derivation, warn: Warn) -> None:
    """Validate one node against its schema; raises `RuleViolation`."""
    judgment = typing_of(d)
    try:
        rule = TypingRule(d.rule)
    except ValueError:
        raise RuleViolation(f"unknown typing rule {d.rule!r}") from None
    if rule in _TERM_ONLY:
        require(isinstance(judgment, TermTyping), f"{rule.value} types a term, not a case binding")
    TYPING_CHECKS[rule](d, judgment, warn)
