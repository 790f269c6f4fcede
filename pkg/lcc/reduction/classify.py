"""
Term classification and the principal reduct of neutral terms.
"""

from __future__ import annotations

from typing import Optional

from lcc.reduction.models import Classification, ClassificationKind, RuleName
from lcc.reduction.rules import contract_here
from lcc.syntax import (
    App,
    Case,
    Constr,
    Lam,
    Position,
    Term,
    app,
    free_vars,
    iter_subterms,
    spine,
    substitute_term,
)


def undefined_witness(t: Term) -> Optional[Position]:
    """Leftmost position of a case over a constructor outside its binding's domain."""
    for position, sub in iter_subterms(t):
        match sub:
            case Case(binding, Constr(name)) if name not in binding.domain:
                return position
    return None


def is_defined(t: Term) -> bool:
    return undefined_witness(t) is None


def is_data_structure(t: Term) -> bool:
    head, _ = spine(t)
    return isinstance(head, Constr)


def is_value(t: Term) -> bool:
    return isinstance(t, Lam) or is_data_structure(t)


def is_pure_value(t: Term) -> bool:
    """A data structure whose arguments are, recursively, pure values."""
    head, args = spine(t)
    return isinstance(head, Constr) and all(is_pure_value(a) for a in args)


def classify(t: Term) -> Classification:
    fv = free_vars(t)
    witness = undefined_witness(t)
    if witness is not None:
        return Classification(ClassificationKind.UNDEFINED, fv, witness)
    if fv:
        return Classification(ClassificationKind.OPEN, fv)
    if isinstance(t, Lam):
        return Classification(ClassificationKind.VALUE_ABSTRACTION)
    if is_data_structure(t):
        return Classification(ClassificationKind.VALUE_DATA)
    return Classification(ClassificationKind.NEUTRAL)


def principal_reduct(t: Term) -> Optional[Term]:
    """
    The one-step reduct through which every value of a neutral `t` stays reachable.

    Defined for beta redexes and case constructs in head position; None for
    everything else (daimon- or variable-headed terms, match failures).
    """
    head, args = spine(t)
    if isinstance(head, Lam) and args:
        return app(substitute_term(head.body, head.bound, args[0]), *args[1:])
    if isinstance(head, Case):
        reduct = _case_reduct(head)
        return None if reduct is None else app(reduct, *args)
    return None


def _case_reduct(t: Case) -> Optional[Term]:
    match t.scrutinee:
        case Constr():
            return contract_here(t, RuleName.CO)
        case Lam():
            return contract_here(t, RuleName.CL)
        case App():
            return contract_here(t, RuleName.CA)
        case Case() as inner:
            reduct = _case_reduct(inner)
            return None if reduct is None else Case(t.binding, reduct)
    return None
