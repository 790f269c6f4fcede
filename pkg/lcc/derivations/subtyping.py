"""
Local checks for the sub-typing rules.

Each check receives a node whose conclusion is `lhs <= rhs`. Structural
rules compare premise conclusions with the pieces of the conclusion; axioms
rebuild the side the schema determines and compare up to alpha-renaming of
quantified variables. The indexed distributivity families are checked at
arity two.
"""

from __future__ import annotations

from typing import Callable, TypeVar

from lcc.derivations.base import (
    RuleViolation,
    fresh_for,
    premise_count,
    require,
    same_type,
    subtype_of,
)
from lcc.derivations.models import Derivation, Subtype, SubtypingRule
from lcc.types import (
    DATA_BOTTOM,
    Arrow,
    DataVar,
    Exists,
    Forall,
    OrdVar,
    TApp,
    TInter,
    TUnion,
    TypeExpr,
    constructor_spine,
    format_type,
    is_data_type,
    type_substitute,
)

SubtypingCheck = Callable[[Derivation, Subtype], None]

_S = TypeVar("_S")


def _shape(t: TypeExpr, cls: type[_S], side: str, form: str) -> _S:
    require(isinstance(t, cls), f"{side} must be {form}, found {format_type(t)}")
    assert isinstance(t, cls)
    return t


# ---------------------------------------------------------------------------
# Structural rules
# ---------------------------------------------------------------------------


def _refl(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    same_type(j.rhs, j.lhs, "right-hand side")


def _trans(d: Derivation, j: Subtype) -> None:
    premise_count(d, 2)
    left = subtype_of(d.premises[0], "first premise")
    right = subtype_of(d.premises[1], "second premise")
    same_type(left.lhs, j.lhs, "first premise left-hand side")
    same_type(right.lhs, left.rhs, "second premise left-hand side")
    same_type(right.rhs, j.rhs, "second premise right-hand side")


def _arrow(d: Derivation, j: Subtype) -> None:
    premise_count(d, 2)
    lhs = _shape(j.lhs, Arrow, "left-hand side", "an arrow")
    rhs = _shape(j.rhs, Arrow, "right-hand side", "an arrow")
    dom = subtype_of(d.premises[0], "first premise")
    cod = subtype_of(d.premises[1], "second premise")
    same_type(dom.lhs, rhs.dom, "first premise (contravariant domain) left-hand side")
    same_type(dom.rhs, lhs.dom, "first premise (contravariant domain) right-hand side")
    same_type(cod.lhs, lhs.cod, "second premise left-hand side")
    same_type(cod.rhs, rhs.cod, "second premise right-hand side")


def _app(d: Derivation, j: Subtype) -> None:
    premise_count(d, 2)
    lhs = _shape(j.lhs, TApp, "left-hand side", "a type application")
    rhs = _shape(j.rhs, TApp, "right-hand side", "a type application")
    heads = subtype_of(d.premises[0], "first premise")
    args = subtype_of(d.premises[1], "second premise")
    same_type(heads.lhs, lhs.head, "first premise left-hand side")
    same_type(heads.rhs, rhs.head, "first premise right-hand side")
    same_type(args.lhs, lhs.arg, "second premise left-hand side")
    same_type(args.rhs, rhs.arg, "second premise right-hand side")


def _union_intro_l(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    rhs = _shape(j.rhs, TUnion, "right-hand side", "a union")
    same_type(j.lhs, rhs.left, "left-hand side")


def _union_intro_r(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    rhs = _shape(j.rhs, TUnion, "right-hand side", "a union")
    same_type(j.lhs, rhs.right, "left-hand side")


def _union_elim(d: Derivation, j: Subtype) -> None:
    premise_count(d, 2)
    lhs = _shape(j.lhs, TUnion, "left-hand side", "a union")
    for index, part in enumerate((lhs.left, lhs.right)):
        p = subtype_of(d.premises[index], f"premise {index + 1}")
        same_type(p.lhs, part, f"premise {index + 1} left-hand side")
        same_type(p.rhs, j.rhs, f"premise {index + 1} right-hand side")


def _inter_intro(d: Derivation, j: Subtype) -> None:
    premise_count(d, 2)
    rhs = _shape(j.rhs, TInter, "right-hand side", "an intersection")
    for index, part in enumerate((rhs.left, rhs.right)):
        p = subtype_of(d.premises[index], f"premise {index + 1}")
        same_type(p.lhs, j.lhs, f"premise {index + 1} left-hand side")
        same_type(p.rhs, part, f"premise {index + 1} right-hand side")


def _inter_elim_l(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    lhs = _shape(j.lhs, TInter, "left-hand side", "an intersection")
    same_type(j.rhs, lhs.left, "right-hand side")


def _inter_elim_r(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    lhs = _shape(j.lhs, TInter, "left-hand side", "an intersection")
    same_type(j.rhs, lhs.right, "right-hand side")


# ---------------------------------------------------------------------------
# Quantifiers
# ---------------------------------------------------------------------------


def _forall_intro(d: Derivation, j: Subtype) -> None:
    premise_count(d, 1)
    rhs = _shape(j.rhs, Forall, "right-hand side", "a universal type")
    p = subtype_of(d.premises[0], "premise")
    same_type(p.lhs, j.lhs, "premise left-hand side")
    same_type(p.rhs, rhs.body, "premise right-hand side")
    fresh_for(rhs.var, j.lhs, f"{rhs.var} not in tv(left-hand side)")


def _instance(d: Derivation) -> TypeExpr:
    instance = d.witnesses.instance
    require(instance is not None, "missing `with` witness (the instantiating type)")
    assert instance is not None
    return instance


def _forall_elim(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    lhs = _shape(j.lhs, Forall, "left-hand side", "a universal type")
    require(isinstance(lhs.var, OrdVar), f"{lhs.var} is a data variable: use ForallElimD")
    same_type(j.rhs, type_substitute(lhs.body, lhs.var, _instance(d)), "right-hand side")


def _forall_elim_d(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    lhs = _shape(j.lhs, Forall, "left-hand side", "a universal type")
    require(isinstance(lhs.var, DataVar), f"{lhs.var} is an ordinary variable: use ForallElim")
    instance = _instance(d)
    require(is_data_type(instance), f"witness {format_type(instance)} is not a data type")
    same_type(j.rhs, type_substitute(lhs.body, lhs.var, instance), "right-hand side")


def _exists_intro(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    rhs = _shape(j.rhs, Exists, "right-hand side", "an existential type")
    require(isinstance(rhs.var, OrdVar), f"{rhs.var} is a data variable: use ExistsIntroD")
    same_type(j.lhs, type_substitute(rhs.body, rhs.var, _instance(d)), "left-hand side")


def _exists_intro_d(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    rhs = _shape(j.rhs, Exists, "right-hand side", "an existential type")
    require(isinstance(rhs.var, DataVar), f"{rhs.var} is an ordinary variable: use ExistsIntro")
    instance = _instance(d)
    require(is_data_type(instance), f"witness {format_type(instance)} is not a data type")
    same_type(j.lhs, type_substitute(rhs.body, rhs.var, instance), "left-hand side")


def _exists_elim(d: Derivation, j: Subtype) -> None:
    premise_count(d, 1)
    lhs = _shape(j.lhs, Exists, "left-hand side", "an existential type")
    p = subtype_of(d.premises[0], "premise")
    same_type(p.lhs, lhs.body, "premise left-hand side")
    same_type(p.rhs, j.rhs, "premise right-hand side")
    fresh_for(lhs.var, j.rhs, f"{lhs.var} not in tv(right-hand side)")


# ---------------------------------------------------------------------------
# Data and constructors
# ---------------------------------------------------------------------------


def _data(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    require(is_data_type(j.lhs), f"{format_type(j.lhs)} is not a data type")
    rhs = _shape(j.rhs, Arrow, "right-hand side", "an arrow")
    same_type(j.rhs, Arrow(rhs.dom, TApp(j.lhs, rhs.dom)), "right-hand side")


def _constr(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    lhs = _shape(j.lhs, TInter, "left-hand side", "an intersection of two data structures")
    left = constructor_spine(lhs.left)
    right = constructor_spine(lhs.right)
    require(
        left is not None and right is not None,
        "both sides of the intersection must be constructor types applied to arguments",
    )
    assert left is not None and right is not None
    require(
        left[0] != right[0],
        f"side condition c1 != c2 violated: both constructors are {left[0]}",
    )
    same_type(j.rhs, DATA_BOTTOM, "right-hand side")


# ---------------------------------------------------------------------------
# Distributivity axioms
# ---------------------------------------------------------------------------


def _app_inter(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    lhs = _shape(j.lhs, TInter, "left-hand side", "an intersection")
    a = _shape(lhs.left, TApp, "left operand", "a type application")
    b = _shape(lhs.right, TApp, "right operand", "a type application")
    same_type(j.rhs, TApp(TInter(a.head, b.head), TInter(a.arg, b.arg)), "right-hand side")


def _app_forall(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    lhs = _shape(j.lhs, Forall, "left-hand side", "a universal type")
    body = _shape(lhs.body, TApp, "quantified body", "a type application")
    v = lhs.var
    same_type(j.rhs, TApp(Forall(v, body.head), Forall(v, body.arg)), "right-hand side")


def _arrow_inter(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    lhs = _shape(j.lhs, TInter, "left-hand side", "an intersection")
    a = _shape(lhs.left, Arrow, "left operand", "an arrow")
    b = _shape(lhs.right, Arrow, "right operand", "an arrow")
    same_type(j.rhs, Arrow(TInter(a.dom, b.dom), TInter(a.cod, b.cod)), "right-hand side")


def _arrow_forall(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    lhs = _shape(j.lhs, Forall, "left-hand side", "a universal type")
    body = _shape(lhs.body, Arrow, "quantified body", "an arrow")
    v = lhs.var
    same_type(j.rhs, Arrow(Forall(v, body.dom), Forall(v, body.cod)), "right-hand side")


def _arrow_union(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    lhs = _shape(j.lhs, TInter, "left-hand side", "an intersection")
    a = _shape(lhs.left, Arrow, "left operand", "an arrow")
    b = _shape(lhs.right, Arrow, "right operand", "an arrow")
    same_type(j.rhs, Arrow(TUnion(a.dom, b.dom), TUnion(a.cod, b.cod)), "right-hand side")


def _arrow_exists(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    lhs = _shape(j.lhs, Forall, "left-hand side", "a universal type")
    body = _shape(lhs.body, Arrow, "quantified body", "an arrow")
    v = lhs.var
    same_type(j.rhs, Arrow(Exists(v, body.dom), Exists(v, body.cod)), "right-hand side")


def _union_app_r(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    lhs = _shape(j.lhs, TApp, "left-hand side", "a type application")
    arg = _shape(lhs.arg, TUnion, "argument", "a union")
    same_type(j.rhs, TUnion(TApp(lhs.head, arg.left), TApp(lhs.head, arg.right)), "right-hand side")


def _union_app_l(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    lhs = _shape(j.lhs, TApp, "left-hand side", "a type application")
    head = _shape(lhs.head, TUnion, "head", "a union")
    same_type(j.rhs, TUnion(TApp(head.left, lhs.arg), TApp(head.right, lhs.arg)), "right-hand side")


def _exists_app_r(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    lhs = _shape(j.lhs, TApp, "left-hand side", "a type application")
    arg = _shape(lhs.arg, Exists, "argument", "an existential type")
    fresh_for(arg.var, lhs.head, f"{arg.var} not in tv(head)")
    same_type(j.rhs, Exists(arg.var, TApp(lhs.head, arg.body)), "right-hand side")


def _exists_app_l(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    lhs = _shape(j.lhs, TApp, "left-hand side", "a type application")
    head = _shape(lhs.head, Exists, "head", "an existential type")
    fresh_for(head.var, lhs.arg, f"{head.var} not in tv(argument)")
    same_type(j.rhs, Exists(head.var, TApp(head.body, lhs.arg)), "right-hand side")


def _union_forall(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    lhs = _shape(j.lhs, Forall, "left-hand side", "a universal type")
    body = _shape(lhs.body, TUnion, "quantified body", "a union")
    fresh_for(lhs.var, body.right, f"{lhs.var} not in tv(right operand)")
    same_type(j.rhs, TUnion(Forall(lhs.var, body.left), body.right), "right-hand side")


def _exists_inter(d: Derivation, j: Subtype) -> None:
    premise_count(d, 0)
    lhs = _shape(j.lhs, TInter, "left-hand side", "an intersection")
    left = _shape(lhs.left, Exists, "left operand", "an existential type")
    fresh_for(left.var, lhs.right, f"{left.var} not in tv(right operand)")
    same_type(j.rhs, Exists(left.var, TInter(left.body, lhs.right)), "right-hand side")


SUBTYPING_CHECKS: dict[SubtypingRule, SubtypingCheck] = {
    SubtypingRule.REFL: _refl,
    SubtypingRule.TRANS: _trans,
    SubtypingRule.ARROW: _arrow,
    SubtypingRule.APP: _app,
    SubtypingRule.UNION_INTRO_L: _union_intro_l,
    SubtypingRule.UNION_INTRO_R: _union_intro_r,
    SubtypingRule.UNION_ELIM: _union_elim,
    SubtypingRule.INTER_INTRO: _inter_intro,
    SubtypingRule.INTER_ELIM_L: _inter_elim_l,
    SubtypingRule.INTER_ELIM_R: _inter_elim_r,
    SubtypingRule.FORALL_INTRO: _forall_intro,
    SubtypingRule.FORALL_ELIM: _forall_elim,
    SubtypingRule.FORALL_ELIM_D: _forall_elim_d,
    SubtypingRule.EXISTS_INTRO: _exists_intro,
    SubtypingRule.EXISTS_INTRO_D: _exists_intro_d,
    SubtypingRule.EXISTS_ELIM: _exists_elim,
    SubtypingRule.DATA: _data,
    SubtypingRule.CONSTR: _constr,
    SubtypingRule.APP_INTER: _app_inter,
    SubtypingRule.APP_FORALL: _app_forall,
    SubtypingRule.ARROW_INTER: _arrow_inter,
    SubtypingRule.ARROW_FORALL: _arrow_forall,
    SubtypingRule.ARROW_UNION: _arrow_union,
    SubtypingRule.ARROW_EXISTS: _arrow_exists,
    SubtypingRule.UNION_APP_R: _union_app_r,
    SubtypingRule.UNION_APP_L: _union_app_l,
    SubtypingRule.EXISTS_APP_R: _exists_app_r,
    SubtypingRule.EXISTS_APP_L: _exists_app_l,
    SubtypingRule.UNION_FORALL: _union_forall,
    SubtypingRule.EXISTS_INTER: _exists_inter,
}


def check_subtyping_node(d: Derivation) -> None:
    """Validate one node against its schema; raises `RuleViolation`."""
    judgment = subtype_of(d)
    rule = _rule(d.rule)
    SUBTYPING_CHECKS[rule](d, judgment)


def _rule(name: str) -> SubtypingRule:
    try:
        return SubtypingRule(name)
    except ValueError:
        raise RuleViolation(f"unknown sub-typing rule {name!r}") from None
