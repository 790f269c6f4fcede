"""
Case-commutation normal form.

`case_normal_form(t)` is the unique normal form of `t` for the CaseApp and
CaseLam rules, computed directly by structural equations instead of by
rewriting. Three of the equations recurse on terms that are not subterms of
the input; each of those calls is guarded by a strict decrease of the
structural measure.
"""

from __future__ import annotations

from lcc.reduction.models import MeasureNotDecreasing
from lcc.syntax import (
    App,
    Case,
    CaseBinding,
    Constr,
    Daimon,
    Lam,
    Term,
    Var,
    alpha_eq,
    format_term,
    free_vars,
    rename_binder,
    structural_measure,
)


def case_normal_form(t: Term) -> Term:
    match t:
        case Var() | Constr() | Daimon():
            return t
        case Lam(bound, body):
            return Lam(bound, case_normal_form(body))
        case App(fun, arg):
            return App(case_normal_form(fun), case_normal_form(arg))
        case Case(binding, scrutinee):
            return _case(t, binding, scrutinee)
    raise TypeError(f"not a term: {t!r}")


def binding_normal_form(binding: CaseBinding) -> CaseBinding:
    return binding.map_bodies(case_normal_form)


def _case(t: Term, binding: CaseBinding, scrutinee: Term) -> Term:
    match scrutinee:
        case Var() | Constr() | Daimon():
            return Case(binding_normal_form(binding), scrutinee)
        case Lam() as lam:
            fresh = rename_binder(lam, free_vars(binding))
            return Lam(fresh.bound, _descend(t, Case(binding, fresh.body)))
        case App(fun, arg):
            return App(_descend(t, Case(binding, fun)), case_normal_form(arg))
        case Case():
            inner = case_normal_form(scrutinee)
            if alpha_eq(inner, scrutinee):
                return Case(binding_normal_form(binding), scrutinee)
            return _descend(t, Case(binding, inner))
    raise TypeError(f"not a term: {scrutinee!r}")


def _descend(parent: Term, child: Term) -> Term:
    if structural_measure(child) >= structural_measure(parent):
        raise MeasureNotDecreasing(
            f"measure of {format_term(child)} ({structural_measure(child)}) is not below "
            f"that of {format_term(parent)} ({structural_measure(parent)})"
        )
    return case_normal_form(child)
