"""
Term and case-binding models.

Terms are immutable trees. Variables and constructors live in disjoint
alphabets (lowercase vs. uppercase in the concrete syntax). A case binding is
a finite function from constructors to terms: branch order is kept for
printing and iteration, but two bindings are equal when they map the same
constructors to equal terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Union


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Constr:
    name: str


@dataclass(frozen=True)
class Lam:
    bound: str
    body: Term


@dataclass(frozen=True)
class App:
    fun: Term
    arg: Term


@dataclass(frozen=True)
class Case:
    """`{| θ |}. scrutinee`"""

    binding: CaseBinding
    scrutinee: Term


@dataclass(frozen=True)
class Daimon:
    """Immediate termination (`!`)."""


Term = Union[Var, Constr, Lam, App, Case, Daimon]

DAIMON = Daimon()


class DuplicateBranchError(ValueError):
    """Raised when a case binding maps the same constructor twice."""


@dataclass(frozen=True, eq=False)
class CaseBinding:
    branches: tuple[tuple[str, Term], ...] = ()

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for constructor, _ in self.branches:
            if constructor in seen:
                raise DuplicateBranchError(
                    f"case binding maps constructor {constructor} more than once"
                )
            seen.add(constructor)

    @classmethod
    def of(cls, *branches: tuple[str, Term]) -> CaseBinding:
        return cls(tuple(branches))

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(c for c, _ in self.branches)

    def get(self, constructor: str) -> Optional[Term]:
        for c, body in self.branches:
            if c == constructor:
                return body
        return None

    def sorted_keys(self) -> list[str]:
        """Constructor keys in the order used for positional addressing."""
        return sorted(self.domain)

    def replace(self, constructor: str, body: Term) -> CaseBinding:
        return CaseBinding(
            tuple((c, body if c == constructor else u) for c, u in self.branches)
        )

    def map_bodies(self, fn: Callable[[Term], Term]) -> CaseBinding:
        return CaseBinding(tuple((c, fn(u)) for c, u in self.branches))

    def __len__(self) -> int:
        return len(self.branches)

    def __iter__(self) -> Iterator[tuple[str, Term]]:
        return iter(self.branches)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CaseBinding):
            return NotImplemented
        return dict(self.branches) == dict(other.branches)

    def __hash__(self) -> int:
        return hash(frozenset(self.branches))


EMPTY_BINDING = CaseBinding()


def app(head: Term, *args: Term) -> Term:
    """Left-nested application `head a1 ... ak`."""
    result = head
    for a in args:
        result = App(result, a)
    return result


def spine(t: Term) -> tuple[Term, list[Term]]:
    """Split `h t1 ... tk` into its head `h` (not an application) and arguments."""
    args: list[Term] = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fun
    args.reverse()
    return t, args
