"""
Bounded sub-typing search.

A best-effort prover for `lhs <= rhs`: it tries reflexivity, the axioms
(instantiating quantifiers by one-sided matching), the structural rules, and
Trans through a small set of intermediate types drawn from both sides. Every
returned derivation has been accepted by the checker; `None` means nothing
was found within the depth bound, not that the judgment is false.
"""

from __future__ import annotations

import logging
from typing import Iterator, Optional

from lcc.derivations.base import RuleViolation
from lcc.derivations.checker import check_subtyping
from lcc.derivations.models import Derivation, Subtype, SubtypingRule, Witnesses
from lcc.derivations.subtyping import SUBTYPING_CHECKS
from lcc.types import (
    Arrow,
    DataSubstitutionViolation,
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
    format_type,
    type_alpha_eq,
    type_alpha_key,
    type_free_vars,
)

logger = logging.getLogger(__name__)

_AXIOMS = (
    SubtypingRule.UNION_INTRO_L,
    SubtypingRule.UNION_INTRO_R,
    SubtypingRule.INTER_ELIM_L,
    SubtypingRule.INTER_ELIM_R,
    SubtypingRule.DATA,
    SubtypingRule.CONSTR,
    SubtypingRule.APP_INTER,
    SubtypingRule.APP_FORALL,
    SubtypingRule.ARROW_INTER,
    SubtypingRule.ARROW_FORALL,
    SubtypingRule.ARROW_UNION,
    SubtypingRule.ARROW_EXISTS,
    SubtypingRule.UNION_APP_R,
    SubtypingRule.UNION_APP_L,
    SubtypingRule.EXISTS_APP_R,
    SubtypingRule.EXISTS_APP_L,
    SubtypingRule.UNION_FORALL,
    SubtypingRule.EXISTS_INTER,
)


# ---------------------------------------------------------------------------
# One-sided matching
# ---------------------------------------------------------------------------


def match_instance(pattern: TypeExpr, var: TypeVar, target: TypeExpr) -> Optional[TypeExpr]:
    """
    A type `T` with `pattern{var <- T}` alpha-equal to `target`, or None.

    When `var` does not occur in `pattern` any instance works and `var`
    itself is returned.
    """
    found: dict[str, TypeExpr] = {}
    if not _match(pattern, target, var, (), found):
        return None
    return found.get("instance", var)


def _match(
    p: TypeExpr,
    t: TypeExpr,
    var: Optional[TypeVar],
    env: tuple[tuple[TypeVar, TypeVar], ...],
    found: dict[str, TypeExpr],
) -> bool:
    if isinstance(p, (OrdVar, DataVar)):
        for pv, tv in reversed(env):
            if pv == p:
                return t == tv
        if p == var:
            if type_free_vars(t) & {tv for _, tv in env}:
                return False
            if "instance" in found:
                return type_alpha_eq(found["instance"], t)
            found["instance"] = t
            return True
        return t == p and all(tv != t for _, tv in env)
    if isinstance(p, TConstr):
        return t == p
    if isinstance(p, (Forall, Exists)):
        if type(t) is not type(p) or type(p.var) is not type(t.var):  # type: ignore[union-attr]
            return False
        assert isinstance(t, (Forall, Exists))
        inner = None if p.var == var else var
        return _match(p.body, t.body, inner, env + ((p.var, t.var),), found)
    if type(t) is not type(p):
        return False
    left_p, right_p = _parts(p)
    left_t, right_t = _parts(t)
    return _match(left_p, left_t, var, env, found) and _match(right_p, right_t, var, env, found)


def _parts(t: TypeExpr) -> tuple[TypeExpr, TypeExpr]:
    match t:
        case TApp(a, b) | Arrow(a, b) | TUnion(a, b) | TInter(a, b):
            return a, b
    raise TypeError(f"not a binary type: {t!r}")


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------


def _subterms(t: TypeExpr) -> Iterator[TypeExpr]:
    yield t
    match t:
        case TApp(a, b) | Arrow(a, b) | TUnion(a, b) | TInter(a, b):
            yield from _subterms(a)
            yield from _subterms(b)
        case Forall(_, body) | Exists(_, body):
            yield from _subterms(body)


class _Search:
    def __init__(self, lhs: TypeExpr, rhs: TypeExpr):
        self.memo: dict[tuple[object, object, int], Optional[Derivation]] = {}
        middles: dict[object, TypeExpr] = {}
        bound = type_free_vars(lhs) | type_free_vars(rhs)
        for t in (*_subterms(lhs), *_subterms(rhs)):
            # subterms under a binder may mention its variable
            if type_free_vars(t) <= bound:
                middles.setdefault(type_alpha_key(t), t)
        self.middles = list(middles.values())

    def prove(self, lhs: TypeExpr, rhs: TypeExpr, depth: int) -> Optional[Derivation]:
        if depth < 1:
            return None
        key = (type_alpha_key(lhs), type_alpha_key(rhs), depth)
        if key not in self.memo:
            self.memo[key] = None
            self.memo[key] = self._prove(lhs, rhs, depth)
        return self.memo[key]

    def _prove(self, lhs: TypeExpr, rhs: TypeExpr, depth: int) -> Optional[Derivation]:
        goal = Subtype(lhs, rhs)
        if type_alpha_eq(lhs, rhs):
            return Derivation(SubtypingRule.REFL.value, goal)
        node = next(self._axioms(goal), None) or next(self._structural(goal, depth - 1), None)
        return node or self._trans(goal, depth - 1)

    def _axioms(self, goal: Subtype) -> Iterator[Derivation]:
        for rule in _AXIOMS:
            node = _try(Derivation(rule.value, goal))
            if node is not None:
                yield node
        lhs, rhs = goal.lhs, goal.rhs
        if isinstance(lhs, Forall):
            instance = match_instance(lhs.body, lhs.var, rhs)
            if instance is not None:
                rule = (
                    SubtypingRule.FORALL_ELIM_D
                    if isinstance(lhs.var, DataVar)
                    else SubtypingRule.FORALL_ELIM
                )
                node = _try(Derivation(rule.value, goal, (), Witnesses(instance=instance)))
                if node is not None:
                    yield node
        if isinstance(rhs, Exists):
            instance = match_instance(rhs.body, rhs.var, lhs)
            if instance is not None:
                rule = (
                    SubtypingRule.EXISTS_INTRO_D
                    if isinstance(rhs.var, DataVar)
                    else SubtypingRule.EXISTS_INTRO
                )
                node = _try(Derivation(rule.value, goal, (), Witnesses(instance=instance)))
                if node is not None:
                    yield node

    def _structural(self, goal: Subtype, depth: int) -> Iterator[Derivation]:
        lhs, rhs = goal.lhs, goal.rhs
        if isinstance(lhs, Arrow) and isinstance(rhs, Arrow):
            yield from self._both(
                SubtypingRule.ARROW, goal, (rhs.dom, lhs.dom), (lhs.cod, rhs.cod), depth
            )
        if isinstance(lhs, TApp) and isinstance(rhs, TApp):
            yield from self._both(
                SubtypingRule.APP, goal, (lhs.head, rhs.head), (lhs.arg, rhs.arg), depth
            )
        if isinstance(lhs, TUnion):
            yield from self._both(
                SubtypingRule.UNION_ELIM, goal, (lhs.left, rhs), (lhs.right, rhs), depth
            )
        if isinstance(rhs, TInter):
            yield from self._both(
                SubtypingRule.INTER_INTRO, goal, (lhs, rhs.left), (lhs, rhs.right), depth
            )
        if isinstance(rhs, Forall) and rhs.var not in type_free_vars(lhs):
            body = self.prove(lhs, rhs.body, depth)
            if body is not None:
                yield Derivation(SubtypingRule.FORALL_INTRO.value, goal, (body,))
        if isinstance(lhs, Exists) and lhs.var not in type_free_vars(rhs):
            body = self.prove(lhs.body, rhs, depth)
            if body is not None:
                yield Derivation(SubtypingRule.EXISTS_ELIM.value, goal, (body,))
        if isinstance(rhs, TUnion):
            for rule, part in (
                (SubtypingRule.UNION_INTRO_L, rhs.left),
                (SubtypingRule.UNION_INTRO_R, rhs.right),
            ):
                step = self.prove(lhs, part, depth)
                if step is not None:
                    yield _chain(goal, step, Derivation(rule.value, Subtype(part, rhs)))
        if isinstance(lhs, TInter):
            for rule, part in (
                (SubtypingRule.INTER_ELIM_L, lhs.left),
                (SubtypingRule.INTER_ELIM_R, lhs.right),
            ):
                step = self.prove(part, rhs, depth)
                if step is not None:
                    yield _chain(goal, Derivation(rule.value, Subtype(lhs, part)), step)

    def _both(
        self,
        rule: SubtypingRule,
        goal: Subtype,
        first: tuple[TypeExpr, TypeExpr],
        second: tuple[TypeExpr, TypeExpr],
        depth: int,
    ) -> Iterator[Derivation]:
        left = self.prove(*first, depth)
        if left is None:
            return
        right = self.prove(*second, depth)
        if right is not None:
            yield Derivation(rule.value, goal, (left, right))

    def _trans(self, goal: Subtype, depth: int) -> Optional[Derivation]:
        if depth < 1:
            return None
        for middle in self.middles:
            if type_alpha_eq(middle, goal.lhs) or type_alpha_eq(middle, goal.rhs):
                continue
            left = self.prove(goal.lhs, middle, depth)
            if left is None:
                continue
            right = self.prove(middle, goal.rhs, depth)
            if right is not None:
                return _chain(goal, left, right)
        return None


def _chain(goal: Subtype, left: Derivation, right: Derivation) -> Derivation:
    return Derivation(SubtypingRule.TRANS.value, goal, (left, right))


def _try(node: Derivation) -> Optional[Derivation]:
    assert isinstance(node.conclusion, Subtype)
    try:
        SUBTYPING_CHECKS[SubtypingRule(node.rule)](node, node.conclusion)
    except (RuleViolation, DataSubstitutionViolation):
        return None
    return node


def search_subtyping(lhs: TypeExpr, rhs: TypeExpr, depth: int = 3) -> Optional[Derivation]:
    """A checked derivation of `lhs <= rhs` of height at most `depth`, or None."""
    if depth < 1:
        raise ValueError(f"search depth must be at least 1, got {depth}")
    found = _Search(lhs, rhs).prove(lhs, rhs, depth)
    if found is None:
        logger.info(f"no derivation of {format_type(lhs)} <= {format_type(rhs)} within {depth}")
        return None
    outcome = check_subtyping(found)
    if not outcome.accepted:
        # a search bug, never a user error
        logger.error(f"discarding unsound search result: {outcome.rejection}")
        return None
    logger.info(
        f"found derivation of {format_type(lhs)} <= {format_type(rhs)} ({found.size()} nodes)"
    )
    return found
