"""
Type expressions.

Ordinary type variables (`$X`) and data type variables (`@a`) are distinct
kinds; quantifiers bind either kind, so the four quantified forms
(forall/exists over an ordinary or a data variable) are two constructors
with a tagged variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class OrdVar:
    name: str

    def __str__(self) -> str:
        return f"${self.name}"


@dataclass(frozen=True)
class DataVar:
    name: str

    def __str__(self) -> str:
        return f"@{self.name}"


@dataclass(frozen=True)
class TConstr:
    """Type constant of a constructor: the type of `C` is `TConstr("C")`."""

    name: str


@dataclass(frozen=True)
class TApp:
    head: TypeExpr
    arg: TypeExpr


@dataclass(frozen=True)
class Arrow:
    dom: TypeExpr
    cod: TypeExpr


@dataclass(frozen=True)
class TUnion:
    left: TypeExpr
    right: TypeExpr


@dataclass(frozen=True)
class TInter:
    left: TypeExpr
    right: TypeExpr


@dataclass(frozen=True)
class Forall:
    var: TypeVar
    body: TypeExpr


@dataclass(frozen=True)
class Exists:
    var: TypeVar
    body: TypeExpr


TypeVar = Union[OrdVar, DataVar]
TypeExpr = Union[OrdVar, DataVar, TConstr, TApp, Arrow, TUnion, TInter, Forall, Exists]
Quantifier = Union[Forall, Exists]
TypeVector = tuple[TypeExpr, ...]

DATA_BOTTOM = Forall(DataVar("a"), DataVar("a"))  # forall @a. @a
ORD_BOTTOM = Forall(OrdVar("X"), OrdVar("X"))  # forall $X. $X
