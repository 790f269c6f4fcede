"""Type expressions, the data-type discipline and type operations."""

from lcc.types.operations import (
    DataSubstitutionViolation,
    IllFormedTypeError,
    WellFormednessViolation,
    arrow_chain,
    check_wellformed,
    constructor_spine,
    expand_vectors,
    free_vars_of_all,
    fresh_type_var,
    is_data_type,
    is_pure_data_type,
    is_wellformed,
    type_alpha_eq,
    type_alpha_key,
    type_application,
    type_free_vars,
    type_substitute,
)
from lcc.types.printer import format_type, format_vector
from lcc.types.syntax import (
    DATA_BOTTOM,
    ORD_BOTTOM,
    Arrow,
    DataVar,
    Exists,
    Forall,
    OrdVar,
    Quantifier,
    TApp,
    TConstr,
    TInter,
    TUnion,
    TypeExpr,
    TypeVar,
    TypeVector,
)

__all__ = [
    "Arrow",
    "DATA_BOTTOM",
    "DataSubstitutionViolation",
    "DataVar",
    "Exists",
    "Forall",
    "IllFormedTypeError",
    "ORD_BOTTOM",
    "OrdVar",
    "Quantifier",
    "TApp",
    "TConstr",
    "TInter",
    "TUnion",
    "TypeExpr",
    "TypeVar",
    "TypeVector",
    "WellFormednessViolation",
    "arrow_chain",
    "check_wellformed",
    "constructor_spine",
    "expand_vectors",
    "format_type",
    "format_vector",
    "free_vars_of_all",
    "fresh_type_var",
    "is_data_type",
    "is_pure_data_type",
    "is_wellformed",
    "type_alpha_eq",
    "type_alpha_key",
    "type_application",
    "type_free_vars",
    "type_substitute",
]
