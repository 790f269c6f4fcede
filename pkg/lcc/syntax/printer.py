"""
Pretty printer for the concrete term syntax.

    \\x. t              abstraction (body extends as far right as possible)
    t u                application, left-associative
    {| C -> u ; D -> v |}. t
    !                  daimon

The output re-parses to an alpha-equal term.
"""

from __future__ import annotations

from lcc.syntax.terms import App, Case, CaseBinding, Constr, Daimon, Lam, Term, Var

# Precedence levels: a subterm printed at a level above its own gets parentheses.
_TOP = 0
_APP = 1
_ATOM = 2


def format_term(t: Term) -> str:
    return _fmt(t, _TOP)


def format_binding(binding: CaseBinding) -> str:
    if not len(binding):
        return "{| |}"
    inner = " ; ".join(f"{c} -> {_fmt(u, _TOP)}" for c, u in binding)
    return f"{{| {inner} |}}"


def _level(t: Term) -> int:
    if isinstance(t, (Lam, Case)):
        return _TOP
    if isinstance(t, App):
        return _APP
    return _ATOM


def _fmt(t: Term, ctx: int) -> str:
    text = _bare(t)
    return f"({text})" if _level(t) < ctx else text


def _bare(t: Term) -> str:
    match t:
        case Var(name) | Constr(name):
            return name
        case Daimon():
            return "!"
        case Lam(bound, body):
            return f"\\{bound}. {_fmt(body, _TOP)}"
        case Case(binding, scrutinee):
            return f"{format_binding(binding)}. {_fmt(scrutinee, _TOP)}"
        case App(fun, arg):
            return f"{_fmt(fun, _APP)} {_fmt(arg, _ATOM)}"
    raise TypeError(f"not a term: {t!r}")
