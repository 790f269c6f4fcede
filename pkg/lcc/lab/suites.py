"""
Property suites.

Each suite pairs an instance stream (enumerated terms, term pairs, or corpus
scripts) with a per-instance check. Checks are pure functions of the
instance and the configuration, so a failure is reproduced by re-running the
check on the instance at the same index of the stream.

Bounded graphs never overstate a property: an instance whose graph hits the
budget is reported as skipped.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Iterator, Optional

from lcc.derivations import TermTyping, check_typing, format_judgment
from lcc.lab.config import LabConfig
from lcc.lab.enumerate import enumerate_closed_terms, enumerate_terms
from lcc.lab.models import InstanceResult
from lcc.parsing import ScriptError, TermSyntaxError, load_script, parse_term
from lcc.reduction import (
    LB,
    LC_MINUS,
    LCOM,
    ClassificationKind,
    GraphStatus,
    MeasureNotDecreasing,
    PNVerdict,
    RuleName,
    RuleSet,
    case_normal_form,
    classify,
    has_nonempty_join,
    has_nonempty_path,
    is_defined,
    is_normal,
    is_pure_value,
    one_step_reducts,
    perfect_normalisation,
    principal_reduct,
    reduction_graph,
    values_of,
)
from lcc.syntax import (
    Constr,
    Daimon,
    Term,
    alpha_eq,
    alpha_key,
    format_term,
    free_vars,
    iter_subterms,
    spine,
    structural_measure,
    substitute_term,
)
from lcc.types import TypeExpr, constructor_spine, format_type, is_pure_data_type

logger = logging.getLogger(__name__)

BUNDLED_CORPUS = Path(__file__).resolve().parent.parent / "corpus"

# closed terms substituted for the free variable in substitution-pn
SUBSTITUTION_SIZE = 2

# steps whose simulation may stop short of the reduct by CD steps
DAIMON_STEPS = frozenset({RuleName.LD, RuleName.AD})


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    instances: Callable[[LabConfig], Iterator[Any]]
    check: Callable[[Any, LabConfig], InstanceResult]
    show: Callable[[Any], str] = format_term


def _closed_terms(cfg: LabConfig) -> Iterator[Term]:
    return enumerate_closed_terms(cfg.enum_config())


# ---------------------------------------------------------------------------
# Case commutation
# ---------------------------------------------------------------------------


def check_com_normalization(t: Term, cfg: LabConfig) -> InstanceResult:
    g = reduction_graph(t, LCOM, cfg.budget)
    if g.status is GraphStatus.TRUNCATED:
        return InstanceResult.skipped("LCOM graph truncated")
    if g.status is GraphStatus.CYCLIC:
        return InstanceResult.failed("LCOM graph has a cycle")
    for source, redex, target in g.edges():
        before, after = structural_measure(source), structural_measure(target)
        if after >= before:
            return InstanceResult.failed(
                f"{redex} does not decrease the measure ({before} -> {after}) "
                f"from {format_term(source)}"
            )
    sinks = g.sinks()
    if len(sinks) != 1:
        return InstanceResult.failed(f"{len(sinks)} distinct LCOM normal forms")
    try:
        cnf = case_normal_form(t)
    except MeasureNotDecreasing as exc:
        return InstanceResult.failed(f"case normal form: {exc}")
    if not alpha_eq(sinks[0], cnf):
        return InstanceResult.failed(
            f"LCOM normal form {format_term(sinks[0])} differs from "
            f"case normal form {format_term(cnf)}"
        )
    return InstanceResult.passed()


def check_commutation_simulation(t: Term, cfg: LabConfig) -> InstanceResult:
    reducts = one_step_reducts(t, LB)
    if not reducts:
        return InstanceResult.passed()
    cnf = case_normal_form(t)
    undecided = False
    for redex, reduct in reducts:
        target = case_normal_form(reduct)
        found = has_nonempty_path(cnf, target, LC_MINUS, cfg.simulation_budget)
        if found is False and redex.rule in DAIMON_STEPS:
            # cases commuted past the erased abstraction or application are
            # left over the daimon on the reduct's side only
            found = has_nonempty_join(cnf, target, LC_MINUS, cfg.simulation_budget)
            if found:
                logger.debug(f"{redex} from {format_term(t)} simulated up to CD steps")
        if found is None:
            undecided = True
        elif not found:
            return InstanceResult.failed(
                f"no path from the case normal form after {redex} to {format_term(reduct)}"
            )
    if perfect_normalisation(cnf, cfg.budget) is PNVerdict.CERTIFIED:
        verdict = perfect_normalisation(t, cfg.budget)
        if verdict is PNVerdict.REFUTED:
            return InstanceResult.failed("case normal form is PN but the term is not")
        undecided = undecided or verdict is PNVerdict.UNKNOWN
    return InstanceResult.skipped("search budget hit") if undecided else InstanceResult.passed()


# ---------------------------------------------------------------------------
# Normal forms, confluence and principal reducts
# ---------------------------------------------------------------------------


def check_normal_form_shape(t: Term, cfg: LabConfig) -> InstanceResult:
    if not is_defined(t) or not is_normal(t, LC_MINUS):
        return InstanceResult.excluded()
    if isinstance(t, Daimon) or classify(t).is_value:
        return InstanceResult.passed()
    return InstanceResult.failed(f"normal form classified as {classify(t)}")


def check_confluence(t: Term, cfg: LabConfig, rules: Optional[RuleSet] = None) -> InstanceResult:
    rules = rules or cfg.rule_set
    g = reduction_graph(t, rules, cfg.budget)
    if not g.fully_explored:
        return InstanceResult.skipped(f"{rules.label} graph truncated")
    sinks = g.sinks()
    for a, b in itertools.combinations(sinks, 2):
        if not alpha_eq(a, b):
            return InstanceResult.failed(
                f"distinct normal forms {format_term(a)} and {format_term(b)}"
            )
    return InstanceResult.passed()


def check_principal_reduct(t: Term, cfg: LabConfig) -> InstanceResult:
    if classify(t).kind is not ClassificationKind.NEUTRAL:
        return InstanceResult.excluded()
    p = principal_reduct(t)
    if p is None:
        return InstanceResult.excluded()
    if alpha_key(p) not in {alpha_key(r) for _, r in one_step_reducts(t, LC_MINUS)}:
        return InstanceResult.failed(f"principal reduct {format_term(p)} is not a one-step reduct")
    mine = values_of(t, cfg.budget)
    if not mine.complete:
        return InstanceResult.skipped("graph not complete")
    theirs = values_of(p, cfg.budget)
    if not theirs.complete:
        return InstanceResult.skipped("principal reduct graph not complete")
    missing = [v for v in mine.terms if v not in theirs]
    if missing:
        return InstanceResult.failed(
            f"value {format_term(missing[0])} unreachable from principal reduct {format_term(p)}"
        )
    return InstanceResult.passed()


# ---------------------------------------------------------------------------
# Substitution and round trip
# ---------------------------------------------------------------------------


def substitution_pairs(cfg: LabConfig) -> Iterator[tuple[Term, str, Term]]:
    """Open terms over one free variable, each paired with every small closed term."""
    var = cfg.variables[0]
    open_cfg = cfg.model_copy(update={"variables": [var]}).enum_config(closed_only=False)
    small_cfg = cfg.model_copy(update={"size": min(SUBSTITUTION_SIZE, cfg.size)})
    closed = list(enumerate_closed_terms(small_cfg.enum_config()))
    for t in enumerate_terms(open_cfg):
        if var in free_vars(t):
            for u in closed:
                yield t, var, u


def check_substitution_pn(instance: tuple[Term, str, Term], cfg: LabConfig) -> InstanceResult:
    t, var, u = instance
    if perfect_normalisation(substitute_term(t, var, u), cfg.budget) is not PNVerdict.CERTIFIED:
        return InstanceResult.excluded()
    verdict = perfect_normalisation(t, cfg.budget)
    if verdict is PNVerdict.REFUTED:
        return InstanceResult.failed("substitution instance is PN but the term is not")
    if verdict is PNVerdict.UNKNOWN:
        return InstanceResult.skipped("graph truncated")
    return InstanceResult.passed()


def _show_pair(instance: tuple[Term, str, Term]) -> str:
    t, var, u = instance
    return f"{format_term(t)} with {var} := {format_term(u)}"


def check_round_trip(t: Term, cfg: LabConfig) -> InstanceResult:
    text = format_term(t)
    try:
        parsed = parse_term(text)
    except TermSyntaxError as exc:
        return InstanceResult.failed(f"printed form does not parse: {exc}")
    if not alpha_eq(parsed, t):
        return InstanceResult.failed(f"re-parses as {format_term(parsed)}")
    return InstanceResult.passed()


# ---------------------------------------------------------------------------
# Typed soundness (derivation corpus)
# ---------------------------------------------------------------------------


def corpus_scripts(cfg: LabConfig) -> Iterator[Path]:
    root = Path(cfg.corpus) if cfg.corpus else BUNDLED_CORPUS / "positive"
    yield from sorted(root.glob("*.lcd"))


def mirrors_type(value: Term, ty: TypeExpr) -> bool:
    """`c t1 ... tk` against `C T1 ... Tk`, constructor by constructor."""
    type_spine = constructor_spine(ty)
    head, args = spine(value)
    if type_spine is None or not isinstance(head, Constr):
        return False
    name, type_args = type_spine
    return (
        head.name == name
        and len(args) == len(type_args)
        and all(mirrors_type(a, u) for a, u in zip(args, type_args))
    )


def check_typed_soundness(path: Path, cfg: LabConfig) -> InstanceResult:
    try:
        d = load_script(path)
    except (OSError, ScriptError) as exc:
        return InstanceResult.failed(f"unreadable script: {exc}")
    outcome = check_typing(d)
    if not outcome.accepted:
        return InstanceResult.failed(f"derivation rejected: {outcome.rejection}")
    j = d.conclusion
    if not isinstance(j, TermTyping):
        return InstanceResult.excluded()
    g = reduction_graph(j.subject, LC_MINUS, cfg.budget)
    if g.status is GraphStatus.TRUNCATED:
        return InstanceResult.skipped("graph truncated")
    if g.status is GraphStatus.CYCLIC:
        return InstanceResult.failed(f"well-typed {format_judgment(j)} has a reduction cycle")
    undefined = next((u for u in g.terms() if not is_defined(u)), None)
    if undefined is not None:
        return InstanceResult.failed(f"reduct {format_term(undefined)} is not defined")
    daimon_free = not any(isinstance(s, Daimon) for _, s in iter_subterms(j.subject))
    if free_vars(j.subject) or not daimon_free or not is_pure_data_type(j.ty):
        return InstanceResult.passed()
    sinks = g.sinks()
    if len(sinks) != 1 or not is_pure_value(sinks[0]):
        return InstanceResult.failed(f"type {format_type(j.ty)} but no unique pure value")
    if not mirrors_type(sinks[0], j.ty):
        return InstanceResult.failed(
            f"value {format_term(sinks[0])} does not mirror {format_type(j.ty)}"
        )
    return InstanceResult.passed()


def _show_path(path: Path) -> str:
    return path.name


SUITES: dict[str, Suite] = {
    s.name: s
    for s in (
        Suite(
            "com-normalization",
            "LCOM steps decrease the measure; LCOM is confluent with the case normal form",
            _closed_terms,
            check_com_normalization,
        ),
        Suite(
            "normal-form-shape",
            "defined closed LC_MINUS normal forms are the daimon or values",
            _closed_terms,
            check_normal_form_shape,
        ),
        Suite(
            "commutation-simulation",
            "each LB step is simulated by a non-empty path between case normal forms "
            "(LD and AD up to CD steps on the reduct's side)",
            _closed_terms,
            check_commutation_simulation,
        ),
        Suite(
            "confluence",
            "fully explored graphs have a single normal form",
            _closed_terms,
            check_confluence,
        ),
        Suite(
            "principal-reduct",
            "every value of a neutral term is reachable from its principal reduct",
            _closed_terms,
            check_principal_reduct,
        ),
        Suite(
            "typed-soundness",
            "typed subjects of the corpus are perfectly normalising",
            corpus_scripts,
            check_typed_soundness,
            _show_path,
        ),
        Suite(
            "substitution-pn",
            "if t{x := u} is perfectly normalising, so is t",
            substitution_pairs,
            check_substitution_pn,
            _show_pair,
        ),
        Suite(
            "round-trip",
            "printed terms re-parse to alpha-equal terms",
            _closed_terms,
            check_round_trip,
        ),
    )
}
