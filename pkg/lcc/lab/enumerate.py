"""
Exhaustive term enumeration.

Terms are generated smallest first (by `term_size`), each size in a fixed
order: atoms, abstractions, applications, case constructs. Binders are named
canonically by their lambda depth (`x0` outermost), so two enumerated terms
are never alpha-equivalent. `count_terms` counts the same grammar by direct
recursion, without building terms, as an independent oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import replace
from functools import lru_cache
from typing import Iterator, Sequence

from lcc.lab.config import BINDER_PREFIX, EnumConfig
from lcc.reduction import is_defined
from lcc.syntax import DAIMON, App, Case, CaseBinding, Constr, Lam, Term, Var


def binder(depth: int) -> str:
    return f"{BINDER_PREFIX}{depth}"


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered ways of writing `total` as `parts` positive integers."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cut in itertools.combinations(range(1, total), parts - 1):
        bounds = (0, *cut, total)
        yield tuple(b - a for a, b in itertools.pairwise(bounds))


def _domains(constructors: Sequence[str]) -> list[tuple[str, ...]]:
    names = sorted(constructors)
    return [d for k in range(len(names) + 1) for d in itertools.combinations(names, k)]


class _Grammar:
    def __init__(self, cfg: EnumConfig):
        self.cfg = cfg
        self.domains = _domains(cfg.constructors)
        self.terms = lru_cache(maxsize=None)(self._terms)
        self.count = lru_cache(maxsize=None)(self._count)

    def _atoms(self, depth: int) -> list[Term]:
        atoms: list[Term] = [Var(binder(i)) for i in range(depth)]
        if not self.cfg.closed_only:
            atoms.extend(Var(name) for name in self.cfg.variables)
        atoms.extend(Constr(name) for name in sorted(self.cfg.constructors))
        if self.cfg.allow_daimon:
            atoms.append(DAIMON)
        return atoms

    def _terms(self, size: int, depth: int) -> tuple[Term, ...]:
        if size == 1:
            return tuple(self._atoms(depth))
        out: list[Term] = [Lam(binder(depth), body) for body in self.terms(size - 1, depth + 1)]
        for left in range(1, size - 1):
            for fun in self.terms(left, depth):
                for arg in self.terms(size - 1 - left, depth):
                    out.append(App(fun, arg))
        for domain in self.domains:
            for sizes in _compositions(size - 1, len(domain) + 1):
                scrutinees = self.terms(sizes[0], depth)
                bodies = [self.terms(s, depth) for s in sizes[1:]]
                for scrutinee in scrutinees:
                    for chosen in itertools.product(*bodies):
                        binding = CaseBinding(tuple(zip(domain, chosen)))
                        out.append(Case(binding, scrutinee))
        return tuple(out)

    def _count(self, size: int, depth: int) -> int:
        if size == 1:
            free = 0 if self.cfg.closed_only else len(self.cfg.variables)
            return depth + free + len(self.cfg.constructors) + int(self.cfg.allow_daimon)
        total = self.count(size - 1, depth + 1)
        for left in range(1, size - 1):
            total += self.count(left, depth) * self.count(size - 1 - left, depth)
        for domain in self.domains:
            for sizes in _compositions(size - 1, len(domain) + 1):
                product = 1
                for s in sizes:
                    product *= self.count(s, depth)
                total += product
        return total


def enumerate_terms(cfg: EnumConfig) -> Iterator[Term]:
    """All terms of size 1..max_size allowed by `cfg`, smallest first."""
    grammar = _Grammar(cfg)
    for size in range(1, cfg.max_size + 1):
        for t in grammar.terms(size, 0):
            if cfg.defined_only and not is_defined(t):
                continue
            yield t


def enumerate_closed_terms(cfg: EnumConfig) -> Iterator[Term]:
    return enumerate_terms(replace(cfg, closed_only=True))


def count_terms(cfg: EnumConfig) -> dict[int, int]:
    """Number of terms per size, ignoring `defined_only`."""
    grammar = _Grammar(cfg)
    return {size: grammar.count(size, 0) for size in range(1, cfg.max_size + 1)}
