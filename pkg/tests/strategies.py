"""Hypothesis strategies for terms and types over small fixed alphabets."""

from hypothesis import strategies as st

from lcc.syntax import DAIMON, App, Case, CaseBinding, Constr, Lam, Term, Var
from lcc.types import Arrow, DataVar, Exists, Forall, OrdVar, TApp, TConstr, TInter, TUnion

VARIABLES = ["x", "y", "z"]
CONSTRUCTORS = ["C", "D", "E"]

variables = st.sampled_from(VARIABLES)


def _bindings(children: st.SearchStrategy[Term]) -> st.SearchStrategy[CaseBinding]:
    return st.dictionaries(st.sampled_from(CONSTRUCTORS), children, max_size=2).map(
        lambda d: CaseBinding(tuple(d.items()))
    )


terms: st.SearchStrategy[Term] = st.recursive(
    st.one_of(
        st.builds(Var, variables),
        st.builds(Constr, st.sampled_from(CONSTRUCTORS)),
        st.just(DAIMON),
    ),
    lambda children: st.one_of(
        st.builds(Lam, variables, children),
        st.builds(App, children, children),
        st.builds(Case, _bindings(children), children),
    ),
    max_leaves=8,
)

closed_constructor_terms: st.SearchStrategy[Term] = st.recursive(
    st.builds(Constr, st.sampled_from(CONSTRUCTORS)),
    lambda children: st.builds(App, children, children),
    max_leaves=4,
)

# data heads only, so every generated type is well formed
types = st.recursive(
    st.one_of(
        st.builds(OrdVar, st.sampled_from(["X", "Y"])),
        st.builds(DataVar, st.sampled_from(["a", "b"])),
        st.builds(TConstr, st.sampled_from(CONSTRUCTORS)),
    ),
    lambda children: st.one_of(
        st.builds(Arrow, children, children),
        st.builds(TUnion, children, children),
        st.builds(TInter, children, children),
        st.builds(TApp, st.builds(TConstr, st.sampled_from(CONSTRUCTORS)), children),
        st.builds(Forall, st.builds(OrdVar, st.sampled_from(["X", "Y"])), children),
        st.builds(Exists, st.builds(DataVar, st.sampled_from(["a", "b"])), children),
    ),
    max_leaves=6,
)
