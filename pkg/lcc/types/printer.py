"""
Pretty printer for types.

Precedence, loosest first: quantifiers, `->` (right-assoc), `|`, `&`
(both left-assoc), application (left-assoc), atoms. A quantifier may stand
unparenthesised on the right of an arrow since its body extends to the end.
"""

from __future__ import annotations

from typing import Sequence

from lcc.types.syntax import (
    Arrow,
    DataVar,
    Exists,
    Forall,
    OrdVar,
    TApp,
    TConstr,
    TInter,
    TUnion,
    TypeExpr,
)

_QUANT = 0
_ARROW = 1
_UNION = 2
_INTER = 3
_APP = 4
_ATOM = 5


def format_type(t: TypeExpr) -> str:
    return _fmt(t, _QUANT)


def format_vector(types: Sequence[TypeExpr]) -> str:
    return "; ".join(format_type(t) for t in types)


def _level(t: TypeExpr) -> int:
    match t:
        case Forall() | Exists():
            return _QUANT
        case Arrow():
            return _ARROW
        case TUnion():
            return _UNION
        case TInter():
            return _INTER
        case TApp():
            return _APP
    return _ATOM


def _fmt(t: TypeExpr, ctx: int) -> str:
    text = _bare(t)
    return f"({text})" if _level(t) < ctx else text


def _bare(t: TypeExpr) -> str:
    match t:
        case OrdVar() | DataVar():
            return str(t)
        case TConstr(name):
            return name
        case TApp(head, arg):
            return f"{_fmt(head, _APP)} {_fmt(arg, _ATOM)}"
        case Arrow(dom, cod):
            return f"{_fmt(dom, _UNION)} -> {_fmt(cod, _QUANT)}"
        case TUnion(left, right):
            return f"{_fmt(left, _UNION)} | {_fmt(right, _INTER)}"
        case TInter(left, right):
            return f"{_fmt(left, _INTER)} & {_fmt(right, _APP)}"
        case Forall(var, body):
            return f"forall {var}. {_fmt(body, _QUANT)}"
        case Exists(var, body):
            return f"exists {var}. {_fmt(body, _QUANT)}"
    raise TypeError(f"not a type: {t!r}")
