"""
Binding discipline: free variables, capture-avoiding substitution and
alpha-equivalence.

Binders keep the names the user wrote so traces stay readable; renaming only
happens when a substitution would capture a free variable, and then picks
the first free `name<N>` variant. Alpha-equivalence compares de Bruijn
forms (constructors are constants and are compared literally).
"""

from __future__ import annotations

import re
from typing import Hashable, Iterable, Union

from lcc.syntax.terms import App, Case, CaseBinding, Constr, Daimon, Lam, Term, Var

Subject = Union[Term, CaseBinding]

_TRAILING_DIGITS = re.compile(r"\d+$")


def free_vars(subject: Subject) -> frozenset[str]:
    """Free variables of a term or of a case binding (union over its bodies)."""
    if isinstance(subject, CaseBinding):
        return frozenset().union(*(free_vars(u) for _, u in subject))
    match subject:
        case Var(name):
            return frozenset({name})
        case Constr() | Daimon():
            return frozenset()
        case Lam(bound, body):
            return free_vars(body) - {bound}
        case App(fun, arg):
            return free_vars(fun) | free_vars(arg)
        case Case(binding, scrutinee):
            return free_vars(binding) | free_vars(scrutinee)
    raise TypeError(f"not a term: {subject!r}")


def fresh_name(base: str, avoid: Iterable[str]) -> str:
    """First `base<N>` (N = 1, 2, ...) not in `avoid`; trailing digits of base are dropped."""
    taken = set(avoid)
    stem = _TRAILING_DIGITS.sub("", base) or "x"
    n = 1
    while f"{stem}{n}" in taken:
        n += 1
    return f"{stem}{n}"


def substitute(subject: Subject, var: str, replacement: Term) -> Subject:
    """`subject{var := replacement}`, renaming binders that would capture."""
    fv_r = free_vars(replacement)
    if isinstance(subject, CaseBinding):
        return subject.map_bodies(lambda u: _subst(u, var, replacement, fv_r))
    return _subst(subject, var, replacement, fv_r)


def substitute_term(t: Term, var: str, replacement: Term) -> Term:
    """Typed convenience wrapper of `substitute` for terms."""
    return _subst(t, var, replacement, free_vars(replacement))


def _subst(t: Term, x: str, u: Term, fv_u: frozenset[str]) -> Term:
    match t:
        case Var(name):
            return u if name == x else t
        case Constr() | Daimon():
            return t
        case App(fun, arg):
            return App(_subst(fun, x, u, fv_u), _subst(arg, x, u, fv_u))
        case Case(binding, scrutinee):
            return Case(
                binding.map_bodies(lambda b: _subst(b, x, u, fv_u)),
                _subst(scrutinee, x, u, fv_u),
            )
        case Lam(bound, body):
            if bound == x:
                return t
            fv_body = free_vars(body)
            if x not in fv_body:
                return t
            if bound in fv_u:
                renamed = fresh_name(bound, fv_u | fv_body | {x})
                body = _subst(body, bound, Var(renamed), frozenset({renamed}))
                bound = renamed
            return Lam(bound, _subst(body, x, u, fv_u))
    raise TypeError(f"not a term: {t!r}")


def rename_binder(lam: Lam, avoid: frozenset[str]) -> Lam:
    """Alpha-rename `lam` so its binder is outside `avoid` (no-op when already fresh)."""
    if lam.bound not in avoid:
        return lam
    renamed = fresh_name(lam.bound, avoid | free_vars(lam.body))
    return Lam(renamed, substitute_term(lam.body, lam.bound, Var(renamed)))


def alpha_key(t: Term) -> Hashable:
    """Canonical nameless form: equal keys iff alpha-equivalent terms."""
    return _key(t, ())


def _key(t: Term, env: tuple[str, ...]) -> Hashable:
    match t:
        case Var(name):
            for depth, bound in enumerate(reversed(env)):
                if bound == name:
                    return ("b", depth)
            return ("f", name)
        case Constr(name):
            return ("c", name)
        case Daimon():
            return ("d",)
        case Lam(bound, body):
            return ("l", _key(body, env + (bound,)))
        case App(fun, arg):
            return ("a", _key(fun, env), _key(arg, env))
        case Case(binding, scrutinee):
            branches = tuple(sorted((c, _key(u, env)) for c, u in binding))
            return ("k", branches, _key(scrutinee, env))
    raise TypeError(f"not a term: {t!r}")


def alpha_eq(a: Term, b: Term) -> bool:
    return alpha_key(a) == alpha_key(b)
