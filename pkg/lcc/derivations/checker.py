"""
Derivation checker.

Walks a derivation tree in pre-order and validates every node locally: the
types it mentions are well-formed, and the node instantiates the schema of
its rule. The first failing node is reported with its path; the tree is
accepted only if every node passes.
"""

from __future__ import annotations

import logging
from typing import Iterator, Optional

from lcc.derivations.base import RuleViolation
from lcc.derivations.models import (
    CheckOutcome,
    Derivation,
    DerivationPath,
    Judgment,
    Rejection,
    Subtype,
    format_path,
)
from lcc.derivations.subtyping import check_subtyping_node
from lcc.derivations.typing import check_typing_node
from lcc.types import TypeExpr, check_wellformed, format_type

logger = logging.getLogger(__name__)


def _judgment_types(j: Judgment) -> Iterator[TypeExpr]:
    if isinstance(j, Subtype):
        yield j.lhs
        yield j.rhs
        return
    for _, ty in j.ctx:
        yield ty
    yield j.ty


def _check_wellformed(j: Judgment) -> None:
    for ty in _judgment_types(j):
        violation = check_wellformed(ty)
        if violation is not None:
            raise RuleViolation(f"ill-formed type {format_type(ty)}: {violation}")


def _walk(d: Derivation, path: DerivationPath, warnings: list[str]) -> Optional[Rejection]:
    def warn(message: str) -> None:
        warnings.append(f"{format_path(path)} ({d.rule}): {message}")

    try:
        _check_wellformed(d.conclusion)
        if isinstance(d.conclusion, Subtype):
            check_subtyping_node(d)
        else:
            check_typing_node(d, warn)
    except RuleViolation as exc:
        return Rejection(path, d.rule, exc.reason)
    for index, premise in enumerate(d.premises):
        rejection = _walk(premise, path + (index,), warnings)
        if rejection is not None:
            return rejection
    return None


def check_derivation(d: Derivation) -> CheckOutcome:
    """Validate a typing or sub-typing derivation."""
    warnings: list[str] = []
    rejection = _walk(d, (), warnings)
    if rejection is not None:
        logger.info(f"derivation ({d.size()} nodes) {rejection}")
        return CheckOutcome.reject(rejection, tuple(warnings))
    logger.info(f"derivation ({d.size()} nodes) accepted by {d.rule}")
    for message in warnings:
        logger.warning(message)
    return CheckOutcome.accept(d.conclusion, tuple(warnings))


def check_subtyping(d: Derivation) -> CheckOutcome:
    if not isinstance(d.conclusion, Subtype):
        return CheckOutcome.reject(
            Rejection((), d.rule, "conclusion must be a sub-typing judgment")
        )
    return check_derivation(d)


def check_typing(d: Derivation) -> CheckOutcome:
    if isinstance(d.conclusion, Subtype):
        return CheckOutcome.reject(
            Rejection((), d.rule, "conclusion must be a typing judgment")
        )
    return check_derivation(d)
