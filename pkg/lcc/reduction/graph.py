"""
Bounded reduction graphs.

Nodes are terms identified up to alpha-equivalence (keyed by `alpha_key`),
edges are single contractions labelled with their redex. Expansion is
breadth-first from the root and stops at a node budget and a depth budget.

A fully explored graph is `complete` when acyclic and `cyclic` otherwise;
only a complete graph certifies that every reduction from the root
terminates. Graphs are stored in a `networkx.MultiDiGraph` (two redexes may
lead to the same reduct) and exported to DOT with `graphviz`.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Hashable, Iterator, Optional

import graphviz
import networkx as nx

from lcc.reduction.classify import is_defined, is_value
from lcc.reduction.models import LC_MINUS, GraphStatus, Redex, RuleName, RuleSet
from lcc.reduction.rules import one_step_reducts
from lcc.syntax import Term, alpha_key, format_term

logger = logging.getLogger(__name__)

DEFAULT_MAX_NODES = 500
DEFAULT_MAX_DEPTH = 60

NodeKey = Hashable


@dataclass(frozen=True)
class GraphBudget:
    max_nodes: int = DEFAULT_MAX_NODES
    max_depth: int = DEFAULT_MAX_DEPTH

    def __post_init__(self) -> None:
        if self.max_nodes < 1 or self.max_depth < 0:
            raise ValueError(
                f"graph budget must be positive, got {self.max_nodes} nodes, "
                f"depth {self.max_depth}"
            )


DEFAULT_BUDGET = GraphBudget()

# the target side of `has_nonempty_join`: clears cases over the daimon
CASE_DAIMON = RuleSet.of([RuleName.CD], "cd")


@dataclass
class ReductionGraph:
    root: NodeKey
    rules: RuleSet
    graph: nx.MultiDiGraph
    status: GraphStatus

    @property
    def is_complete(self) -> bool:
        return self.status is GraphStatus.COMPLETE

    @property
    def fully_explored(self) -> bool:
        return self.status is not GraphStatus.TRUNCATED

    @property
    def root_term(self) -> Term:
        return self.term(self.root)

    def term(self, key: NodeKey) -> Term:
        term: Term = self.graph.nodes[key]["term"]
        return term

    def __len__(self) -> int:
        return int(self.graph.number_of_nodes())

    def __contains__(self, t: object) -> bool:
        return alpha_key(t) in self.graph  # type: ignore[arg-type]

    def keys(self) -> list[NodeKey]:
        return list(self.graph.nodes)

    def terms(self) -> Iterator[Term]:
        for key in self.graph.nodes:
            yield self.term(key)

    def edges(self) -> Iterator[tuple[Term, Redex, Term]]:
        for source, target, data in self.graph.edges(data=True):
            yield self.term(source), data["redex"], self.term(target)

    def sinks(self) -> list[Term]:
        """Explored nodes with no outgoing edge: the normal forms reached."""
        return [
            self.term(key)
            for key, data in self.graph.nodes(data=True)
            if data["expanded"] and self.graph.out_degree(key) == 0
        ]

    def edge_count(self) -> int:
        return int(self.graph.number_of_edges())


def reduction_graph(
    t: Term, rules: RuleSet, budget: GraphBudget = DEFAULT_BUDGET
) -> ReductionGraph:
    graph = nx.MultiDiGraph()
    root = alpha_key(t)
    graph.add_node(root, term=t, depth=0, expanded=False)
    frontier: deque[NodeKey] = deque([root])
    truncated = False

    while frontier:
        key = frontier.popleft()
        data = graph.nodes[key]
        if data["depth"] >= budget.max_depth:
            truncated = True
            continue
        data["expanded"] = True
        for redex, reduct in one_step_reducts(data["term"], rules):
            target = alpha_key(reduct)
            if target not in graph:
                if graph.number_of_nodes() >= budget.max_nodes:
                    truncated = True
                    continue
                graph.add_node(target, term=reduct, depth=data["depth"] + 1, expanded=False)
                frontier.append(target)
            graph.add_edge(key, target, key=str(redex), redex=redex)

    if truncated:
        status = GraphStatus.TRUNCATED
    elif nx.is_directed_acyclic_graph(graph):
        status = GraphStatus.COMPLETE
    else:
        status = GraphStatus.CYCLIC
    logger.debug(
        f"reduction graph ({rules.label}): {graph.number_of_nodes()} nodes, "
        f"{graph.number_of_edges()} edges, {status.value}"
    )
    return ReductionGraph(root, rules, graph, status)


# ---------------------------------------------------------------------------
# Queries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ValueSet:
    """
    Values reachable from a term, with the status of the graph they were read from.

    `complete` means acyclic and fully explored: a fully explored graph with
    a cycle still lists every reachable value, but is not `complete`.
    """

    terms: tuple[Term, ...]
    keys: frozenset[NodeKey]
    status: GraphStatus

    @property
    def complete(self) -> bool:
        return self.status is GraphStatus.COMPLETE

    def __contains__(self, t: object) -> bool:
        return alpha_key(t) in self.keys  # type: ignore[arg-type]

    def issubset(self, other: ValueSet) -> bool:
        return self.keys <= other.keys


def values_of(t: Term, budget: GraphBudget = DEFAULT_BUDGET) -> ValueSet:
    """All values in the LC_MINUS reduction graph of `t` (exact only when complete)."""
    g = reduction_graph(t, LC_MINUS, budget)
    values = [term for term in g.terms() if is_value(term)]
    return ValueSet(tuple(values), frozenset(alpha_key(v) for v in values), g.status)


class PNVerdict(str, Enum):
    CERTIFIED = "certified"  # complete graph, every node defined
    REFUTED = "refuted"  # an undefined reduct, or a cycle
    UNKNOWN = "unknown"  # budget hit before either


def perfect_normalisation(t: Term, budget: GraphBudget = DEFAULT_BUDGET) -> PNVerdict:
    g = reduction_graph(t, LC_MINUS, budget)
    if not all(is_defined(term) for term in g.terms()):
        return PNVerdict.REFUTED
    if g.status is GraphStatus.CYCLIC:
        return PNVerdict.REFUTED
    if g.status is GraphStatus.TRUNCATED:
        return PNVerdict.UNKNOWN
    return PNVerdict.CERTIFIED


def is_perfectly_normalising(t: Term, budget: GraphBudget = DEFAULT_BUDGET) -> bool:
    """Bounded certificate: False also when the budget is too small to decide."""
    return perfect_normalisation(t, budget) is PNVerdict.CERTIFIED


def _reaches(
    source: Term, goals: frozenset[NodeKey], rules: RuleSet, budget: GraphBudget
) -> Optional[bool]:
    """Breadth-first search for a non-empty path from `source` into `goals`."""
    seen: dict[NodeKey, int] = {}
    frontier: deque[tuple[Term, int]] = deque([(source, 0)])
    exhausted = True
    while frontier:
        term, depth = frontier.popleft()
        if depth >= budget.max_depth:
            exhausted = False
            continue
        for _, reduct in one_step_reducts(term, rules):
            key = alpha_key(reduct)
            if key in goals:
                return True
            if key in seen:
                continue
            if len(seen) >= budget.max_nodes:
                exhausted = False
                continue
            seen[key] = depth + 1
            frontier.append((reduct, depth + 1))
    return False if exhausted else None


def has_nonempty_path(
    source: Term,
    target: Term,
    rules: RuleSet = LC_MINUS,
    budget: GraphBudget = DEFAULT_BUDGET,
) -> Optional[bool]:
    """
    Whether `source` reduces to `target` (up to alpha) in one or more steps.

    Breadth-first, stopping as soon as the target is reached. Returns None
    when the budget runs out before the search space is exhausted.
    """
    return _reaches(source, frozenset([alpha_key(target)]), rules, budget)


def has_nonempty_join(
    source: Term,
    target: Term,
    rules: RuleSet = LC_MINUS,
    budget: GraphBudget = DEFAULT_BUDGET,
    target_rules: RuleSet = CASE_DAIMON,
) -> Optional[bool]:
    """
    Whether `source` reduces in one or more `rules` steps to a term that
    `target` reaches by `target_rules` steps alone (none included).

    Returns None when either side runs out of budget without a join.
    """
    closure = reduction_graph(target, target_rules, budget)
    found = _reaches(source, frozenset(closure.keys()), rules, budget)
    if found is False and not closure.fully_explored:
        return None
    return found


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------


def to_dot(g: ReductionGraph, name: str = "reductions") -> graphviz.Digraph:
    """Render with term labels; normal forms doubly outlined; status as a leading comment."""
    comment = None if g.is_complete else g.status.value
    dot = graphviz.Digraph(name, comment=comment)
    ids = {key: f"n{index}" for index, key in enumerate(g.graph.nodes)}
    sinks = {
        key
        for key, data in g.graph.nodes(data=True)
        if data["expanded"] and g.graph.out_degree(key) == 0
    }
    for key, node_id in ids.items():
        attrs = {"peripheries": "2"} if key in sinks else {}
        if key == g.root:
            attrs["style"] = "bold"
        dot.node(node_id, label=format_term(g.term(key)), **attrs)
    for source, target, data in g.graph.edges(data=True):
        dot.edge(ids[source], ids[target], label=str(data["redex"]))
    return dot
