"""
Operations on types: the data-type discipline, free type variables,
capture-avoiding substitution, alpha-equivalence and vector notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Optional, Sequence

from lcc.syntax import fresh_name
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
    TypeVar,
)

TypePosition = tuple[int, ...]


class IllFormedTypeError(ValueError):
    """A type application whose head is not a data type."""

    def __init__(self, message: str, position: TypePosition = (), line: int = 0, column: int = 0):
        super().__init__(message)
        self.position = position
        self.line = line
        self.column = column


class DataSubstitutionViolation(ValueError):
    """A non-data type substituted for a data type variable."""


# ---------------------------------------------------------------------------
# Data types and well-formedness
# ---------------------------------------------------------------------------


def is_data_type(t: TypeExpr) -> bool:
    match t:
        case DataVar() | TConstr():
            return True
        case TApp(head, _):
            return is_data_type(head)
        case TUnion(left, right) | TInter(left, right):
            return is_data_type(left) and is_data_type(right)
        case Forall(_, body) | Exists(_, body):
            return is_data_type(body)
    return False


def constructor_spine(t: TypeExpr) -> Optional[tuple[str, list[TypeExpr]]]:
    """Split `C T1 ... Tk` into ("C", [T1, ..., Tk]); None for any other shape."""
    args: list[TypeExpr] = []
    while isinstance(t, TApp):
        args.append(t.arg)
        t = t.head
    if not isinstance(t, TConstr):
        return None
    args.reverse()
    return t.name, args


def is_pure_data_type(t: TypeExpr) -> bool:
    """Built only from type constants and application."""
    spine = constructor_spine(t)
    return spine is not None and all(is_pure_data_type(a) for a in spine[1])


@dataclass(frozen=True)
class WellFormednessViolation:
    position: TypePosition
    head: TypeExpr

    def __str__(self) -> str:
        where = ".".join(str(i) for i in self.position) or "root"
        return f"type application at {where} has a non-data head"


def _type_children(t: TypeExpr) -> list[TypeExpr]:
    match t:
        case TApp(a, b) | Arrow(a, b) | TUnion(a, b) | TInter(a, b):
            return [a, b]
        case Forall(_, body) | Exists(_, body):
            return [body]
    return []


def check_wellformed(t: TypeExpr, prefix: TypePosition = ()) -> Optional[WellFormednessViolation]:
    """First (pre-order) type application with a non-data head, or None."""
    if isinstance(t, TApp) and not is_data_type(t.head):
        return WellFormednessViolation(prefix, t.head)
    for index, child in enumerate(_type_children(t)):
        violation = check_wellformed(child, prefix + (index,))
        if violation is not None:
            return violation
    return None


def is_wellformed(t: TypeExpr) -> bool:
    return check_wellformed(t) is None


# ---------------------------------------------------------------------------
# Free variables and substitution
# ---------------------------------------------------------------------------


def type_free_vars(t: TypeExpr) -> frozenset[TypeVar]:
    match t:
        case OrdVar() | DataVar():
            return frozenset({t})
        case TConstr():
            return frozenset()
        case TApp(a, b) | Arrow(a, b) | TUnion(a, b) | TInter(a, b):
            return type_free_vars(a) | type_free_vars(b)
        case Forall(var, body) | Exists(var, body):
            return type_free_vars(body) - {var}
    raise TypeError(f"not a type: {t!r}")


def free_vars_of_all(types: Iterable[TypeExpr]) -> frozenset[TypeVar]:
    return frozenset().union(*(type_free_vars(t) for t in types))


def fresh_type_var(var: TypeVar, avoid: Iterable[TypeVar]) -> TypeVar:
    names = {v.name for v in avoid}
    name = fresh_name(var.name, names)
    return DataVar(name) if isinstance(var, DataVar) else OrdVar(name)


def type_substitute(t: TypeExpr, var: TypeVar, replacement: TypeExpr) -> TypeExpr:
    """`t{var <- replacement}`, capture-avoiding."""
    if isinstance(var, DataVar) and not is_data_type(replacement):
        raise DataSubstitutionViolation(
            f"cannot substitute a non-data type for data variable {var}"
        )
    return _tsubst(t, var, replacement, type_free_vars(replacement))


def _tsubst(t: TypeExpr, v: TypeVar, r: TypeExpr, fv_r: frozenset[TypeVar]) -> TypeExpr:
    match t:
        case OrdVar() | DataVar():
            return r if t == v else t
        case TConstr():
            return t
        case TApp(a, b):
            return TApp(_tsubst(a, v, r, fv_r), _tsubst(b, v, r, fv_r))
        case Arrow(a, b):
            return Arrow(_tsubst(a, v, r, fv_r), _tsubst(b, v, r, fv_r))
        case TUnion(a, b):
            return TUnion(_tsubst(a, v, r, fv_r), _tsubst(b, v, r, fv_r))
        case TInter(a, b):
            return TInter(_tsubst(a, v, r, fv_r), _tsubst(b, v, r, fv_r))
        case Forall(bound, body) | Exists(bound, body):
            if bound == v or v not in type_free_vars(body):
                return t
            if bound in fv_r:
                renamed = fresh_type_var(bound, fv_r | type_free_vars(body) | {v})
                body = _tsubst(body, bound, renamed, frozenset({renamed}))
                bound = renamed
            rebuilt = _tsubst(body, v, r, fv_r)
            return Forall(bound, rebuilt) if isinstance(t, Forall) else Exists(bound, rebuilt)
    raise TypeError(f"not a type: {t!r}")


# ---------------------------------------------------------------------------
# Alpha-equivalence
# ---------------------------------------------------------------------------


def type_alpha_key(t: TypeExpr) -> Hashable:
    return _tkey(t, ())


def _tkey(t: TypeExpr, env: tuple[TypeVar, ...]) -> Hashable:
    match t:
        case OrdVar() | DataVar():
            for depth, bound in enumerate(reversed(env)):
                if bound == t:
                    return ("b", depth)
            return ("f", type(t).__name__, t.name)
        case TConstr(name):
            return ("c", name)
        case TApp(a, b):
            return ("app", _tkey(a, env), _tkey(b, env))
        case Arrow(a, b):
            return ("arrow", _tkey(a, env), _tkey(b, env))
        case TUnion(a, b):
            return ("union", _tkey(a, env), _tkey(b, env))
        case TInter(a, b):
            return ("inter", _tkey(a, env), _tkey(b, env))
        case Forall(var, body):
            return ("forall", type(var).__name__, _tkey(body, env + (var,)))
        case Exists(var, body):
            return ("exists", type(var).__name__, _tkey(body, env + (var,)))
    raise TypeError(f"not a type: {t!r}")


def type_alpha_eq(a: TypeExpr, b: TypeExpr) -> bool:
    return type_alpha_key(a) == type_alpha_key(b)


# ---------------------------------------------------------------------------
# Vector notation
# ---------------------------------------------------------------------------


def type_application(head: TypeExpr, args: Sequence[TypeExpr]) -> TypeExpr:
    """`head T1 ... Tk`, left-nested; the empty vector returns `head`."""
    result = head
    for a in args:
        result = TApp(result, a)
    return result


def arrow_chain(args: Sequence[TypeExpr], result: TypeExpr) -> TypeExpr:
    """`T1 -> ... -> Tk -> result`; the empty vector returns `result`."""
    for a in reversed(args):
        result = Arrow(a, result)
    return result


def expand_vectors(
    head: TypeExpr, args: Sequence[TypeExpr], result: Optional[TypeExpr] = None
) -> TypeExpr:
    """
    With no `result`, the application `head args`; otherwise the arrow chain
    `args -> result` (`head` is then ignored).
    """
    if result is None:
        expanded = type_application(head, args)
        violation = check_wellformed(expanded)
        if violation is not None:
            raise IllFormedTypeError(str(violation), violation.position)
        return expanded
    return arrow_chain(args, result)
