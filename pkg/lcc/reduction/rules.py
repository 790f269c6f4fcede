"""
The rewrite rules and their contextual closure.

Each rule is a partial function from a subterm to its contractum; a redex is
a (position, rule) pair where that function is defined. `one_step_reducts`
walks the term in pre-order and tries the enabled rules at every position in
priority order, so its output is already in leftmost-outermost order.
"""

from __future__ import annotations

from typing import Callable, Iterator, Optional

from lcc.reduction.models import InvalidRedex, Redex, RuleName, RuleSet
from lcc.syntax import (
    DAIMON,
    App,
    Case,
    CaseBinding,
    Constr,
    Daimon,
    Lam,
    Term,
    Var,
    free_vars,
    iter_subterms,
    rename_binder,
    replace_at,
    substitute_term,
    subterm_at,
)

Contraction = Callable[[Term], Optional[Term]]


def compose_bindings(outer: CaseBinding, inner: CaseBinding) -> CaseBinding:
    """`outer o inner`: every inner branch body wrapped in a case over `outer`."""
    return inner.map_bodies(lambda body: Case(outer, body))


# ---------------------------------------------------------------------------
# Rule schemas
# ---------------------------------------------------------------------------


def _app_lam(t: Term) -> Optional[Term]:
    match t:
        case App(Lam(bound, body), arg):
            return substitute_term(body, bound, arg)
    return None


def _app_dai(t: Term) -> Optional[Term]:
    match t:
        case App(Daimon(), _):
            return DAIMON
    return None


def _lam_app(t: Term) -> Optional[Term]:
    match t:
        case Lam(bound, App(fun, Var(name))) if name == bound and bound not in free_vars(fun):
            return fun
    return None


def _lam_dai(t: Term) -> Optional[Term]:
    match t:
        case Lam(_, Daimon()):
            return DAIMON
    return None


def _case_cons(t: Term) -> Optional[Term]:
    match t:
        case Case(binding, Constr(name)):
            return binding.get(name)
    return None


def _case_dai(t: Term) -> Optional[Term]:
    match t:
        case Case(_, Daimon()):
            return DAIMON
    return None


def _case_app(t: Term) -> Optional[Term]:
    match t:
        case Case(binding, App(fun, arg)):
            return App(Case(binding, fun), arg)
    return None


def _case_lam(t: Term) -> Optional[Term]:
    match t:
        case Case(binding, Lam() as lam):
            # binder renamed away from FV(binding)
            fresh = rename_binder(lam, free_vars(binding))
            return Lam(fresh.bound, Case(binding, fresh.body))
    return None


def _case_case(t: Term) -> Optional[Term]:
    match t:
        case Case(outer, Case(inner, scrutinee)):
            return Case(compose_bindings(outer, inner), scrutinee)
    return None


RULES: dict[RuleName, Contraction] = {
    RuleName.AL: _app_lam,
    RuleName.AD: _app_dai,
    RuleName.LA: _lam_app,
    RuleName.LD: _lam_dai,
    RuleName.CO: _case_cons,
    RuleName.CD: _case_dai,
    RuleName.CA: _case_app,
    RuleName.CL: _case_lam,
    RuleName.CC: _case_case,
}


def contract_here(t: Term, rule: RuleName) -> Optional[Term]:
    """Contract `t` itself by `rule`, or None when `t` is not a `rule` redex."""
    return RULES[rule](t)


# ---------------------------------------------------------------------------
# Contextual closure
# ---------------------------------------------------------------------------


def iter_redexes(t: Term, rules: RuleSet) -> Iterator[tuple[Redex, Term]]:
    """(redex, contractum of the redex subterm) pairs in leftmost-outermost order."""
    ordered = rules.ordered()
    for position, sub in iter_subterms(t):
        for rule in ordered:
            contractum = RULES[rule](sub)
            if contractum is not None:
                yield Redex(position, rule), contractum


def one_step_reducts(t: Term, rules: RuleSet) -> list[tuple[Redex, Term]]:
    return [
        (redex, replace_at(t, redex.position, contractum))
        for redex, contractum in iter_redexes(t, rules)
    ]


def redexes(t: Term, rules: RuleSet) -> list[Redex]:
    return [redex for redex, _ in iter_redexes(t, rules)]


def is_normal(t: Term, rules: RuleSet) -> bool:
    return next(iter_redexes(t, rules), None) is None


def contract(t: Term, redex: Redex) -> Term:
    try:
        sub = subterm_at(t, redex.position)
    except IndexError as exc:
        raise InvalidRedex(f"{redex}: {exc}") from exc
    contractum = RULES[redex.rule](sub)
    if contractum is None:
        raise InvalidRedex(f"{redex}: subterm does not match the {redex.rule.long_name} schema")
    return replace_at(t, redex.position, contractum)
