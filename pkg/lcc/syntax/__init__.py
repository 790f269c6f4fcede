"""Abstract syntax of terms and case bindings."""

from lcc.syntax.binding import (
    alpha_eq,
    alpha_key,
    free_vars,
    fresh_name,
    rename_binder,
    substitute,
    substitute_term,
)
from lcc.syntax.measure import Measure, structural_measure, term_size
from lcc.syntax.positions import (
    ROOT,
    Position,
    children,
    format_position,
    iter_subterms,
    replace_at,
    subterm_at,
)
from lcc.syntax.printer import format_binding, format_term
from lcc.syntax.terms import (
    DAIMON,
    EMPTY_BINDING,
    App,
    Case,
    CaseBinding,
    Constr,
    Daimon,
    DuplicateBranchError,
    Lam,
    Term,
    Var,
    app,
    spine,
)

__all__ = [
    "App",
    "Case",
    "CaseBinding",
    "Constr",
    "DAIMON",
    "Daimon",
    "DuplicateBranchError",
    "EMPTY_BINDING",
    "Lam",
    "Measure",
    "Position",
    "ROOT",
    "Term",
    "Var",
    "alpha_eq",
    "alpha_key",
    "app",
    "children",
    "format_binding",
    "format_position",
    "format_term",
    "free_vars",
    "fresh_name",
    "iter_subterms",
    "rename_binder",
    "replace_at",
    "spine",
    "structural_measure",
    "substitute",
    "substitute_term",
    "subterm_at",
    "term_size",
]
