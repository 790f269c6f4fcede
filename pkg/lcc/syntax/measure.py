"""
Size functions on terms.

`structural_measure` is strictly decreased by every case-commutation step
(CaseApp, CaseLam). `term_size` is a plain node count used to bound
enumeration.
"""

from __future__ import annotations

from typing import Union

from lcc.syntax.terms import App, Case, CaseBinding, Constr, Daimon, Lam, Term, Var

Measure = int


def structural_measure(subject: Union[Term, CaseBinding]) -> Measure:
    if isinstance(subject, CaseBinding):
        return sum(structural_measure(u) for _, u in subject)
    match subject:
        case Var() | Constr() | Daimon():
            return 1
        case Lam(_, body):
            return structural_measure(body) + 1
        case App(fun, arg):
            return structural_measure(fun) + structural_measure(arg)
        case Case(binding, scrutinee):
            return structural_measure(scrutinee) * (structural_measure(binding) + 2)
    raise TypeError(f"not a term: {subject!r}")


def term_size(t: Term) -> int:
    """Node count; a case counts one node plus its scrutinee and branch bodies."""
    match t:
        case Var() | Constr() | Daimon():
            return 1
        case Lam(_, body):
            return 1 + term_size(body)
        case App(fun, arg):
            return 1 + term_size(fun) + term_size(arg)
        case Case(binding, scrutinee):
            return 1 + term_size(scrutinee) + sum(term_size(u) for _, u in binding)
    raise TypeError(f"not a term: {t!r}")
