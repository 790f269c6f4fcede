"""Reduction under configurable rule sets, normal forms, classification and graphs."""

from lcc.reduction.classify import (
    classify,
    is_data_structure,
    is_defined,
    is_pure_value,
    is_value,
    principal_reduct,
    undefined_witness,
)
from lcc.reduction.commutation import binding_normal_form, case_normal_form
from lcc.reduction.engine import LEFTMOST_OUTERMOST, Strategy, UnknownStrategyError, normalize
from lcc.reduction.graph import (
    DEFAULT_BUDGET,
    GraphBudget,
    PNVerdict,
    ReductionGraph,
    ValueSet,
    has_nonempty_join,
    has_nonempty_path,
    is_perfectly_normalising,
    perfect_normalisation,
    reduction_graph,
    to_dot,
    values_of,
)
from lcc.reduction.models import (
    FULL,
    LB,
    LC_MINUS,
    LCOM,
    PRESETS,
    Classification,
    ClassificationKind,
    FuelExhausted,
    GraphStatus,
    InvalidRedex,
    MeasureNotDecreasing,
    NormalForm,
    Outcome,
    Redex,
    RuleName,
    RuleSet,
    Step,
    UnknownRuleSetError,
)
from lcc.reduction.rules import (
    compose_bindings,
    contract,
    contract_here,
    is_normal,
    one_step_reducts,
    redexes,
)

__all__ = [
    "Classification",
    "ClassificationKind",
    "DEFAULT_BUDGET",
    "FULL",
    "FuelExhausted",
    "GraphBudget",
    "GraphStatus",
    "InvalidRedex",
    "LB",
    "LCOM",
    "LC_MINUS",
    "LEFTMOST_OUTERMOST",
    "MeasureNotDecreasing",
    "NormalForm",
    "Outcome",
    "PNVerdict",
    "PRESETS",
    "Redex",
    "ReductionGraph",
    "RuleName",
    "RuleSet",
    "Step",
    "Strategy",
    "UnknownRuleSetError",
    "UnknownStrategyError",
    "ValueSet",
    "binding_normal_form",
    "case_normal_form",
    "classify",
    "compose_bindings",
    "contract",
    "contract_here",
    "has_nonempty_join",
    "has_nonempty_path",
    "is_data_structure",
    "is_defined",
    "is_normal",
    "is_perfectly_normalising",
    "is_pure_value",
    "is_value",
    "normalize",
    "one_step_reducts",
    "perfect_normalisation",
    "principal_reduct",
    "redexes",
    "reduction_graph",
    "to_dot",
    "undefined_witness",
    "values_of",
]
