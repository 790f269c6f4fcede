"""
Positional addressing of subterms.

A position is a tuple of child indices from the root. Abstractions have one
child (the body), applications two (function 0, argument 1), and a case
construct has the scrutinee at 0 followed by the branch bodies at 1..n in
sorted constructor order.
"""

from __future__ import annotations

from typing import Iterator

from lcc.syntax.terms import App, Case, Lam, Term

Position = tuple[int, ...]

ROOT: Position = ()


def children(t: Term) -> list[Term]:
    match t:
        case Lam(_, body):
            return [body]
        case App(fun, arg):
            return [fun, arg]
        case Case(binding, scrutinee):
            bodies = [binding.get(c) for c in binding.sorted_keys()]
            return [scrutinee, *(b for b in bodies if b is not None)]
    return []


def replace_child(t: Term, index: int, new: Term) -> Term:
    match t:
        case Lam(bound, _) if index == 0:
            return Lam(bound, new)
        case App(fun, arg) if index in (0, 1):
            return App(new, arg) if index == 0 else App(fun, new)
        case Case(binding, scrutinee):
            if index == 0:
                return Case(binding, new)
            keys = binding.sorted_keys()
            if 1 <= index <= len(keys):
                return Case(binding.replace(keys[index - 1], new), scrutinee)
    raise IndexError(f"no child {index} in {type(t).__name__}")


def subterm_at(t: Term, position: Position) -> Term:
    for index in position:
        kids = children(t)
        if not 0 <= index < len(kids):
            raise IndexError(f"position {format_position(position)} leaves the term")
        t = kids[index]
    return t


def replace_at(t: Term, position: Position, new: Term) -> Term:
    if not position:
        return new
    head, rest = position[0], position[1:]
    kids = children(t)
    if not 0 <= head < len(kids):
        raise IndexError(f"position {format_position(position)} leaves the term")
    return replace_child(t, head, replace_at(kids[head], rest, new))


def iter_subterms(t: Term, prefix: Position = ROOT) -> Iterator[tuple[Position, Term]]:
    """Pre-order walk: a position precedes its extensions, siblings left to right."""
    yield prefix, t
    for index, child in enumerate(children(t)):
        yield from iter_subterms(child, prefix + (index,))


def format_position(position: Position) -> str:
    return ".".join(str(i) for i in position) if position else "root"
