"""
Tests for `lcc.reduction`: the rewrite rules, leftmost-outermost
normalisation, case-commutation normal forms, classification and bounded
reduction graphs.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import pytest
from hypothesis import given, settings

from lcc.parsing import parse_term, parse_term_file
from lcc.reduction import (
    FULL,
    LB,
    LC_MINUS,
    LCOM,
    ClassificationKind,
    FuelExhausted,
    GraphBudget,
    GraphStatus,
    InvalidRedex,
    NormalForm,
    PNVerdict,
    Redex,
    RuleName,
    RuleSet,
    Strategy,
    UnknownRuleSetError,
    UnknownStrategyError,
    case_normal_form,
    classify,
    contract,
    contract_here,
    has_nonempty_join,
    has_nonempty_path,
    is_normal,
    is_pure_value,
    normalize,
    perfect_normalisation,
    principal_reduct,
    redexes,
    reduction_graph,
    to_dot,
    values_of,
)
from lcc.syntax import App, Case, Constr, Lam, Var, alpha_eq, format_term
from tests.strategies import terms

CORPUS = Path(__file__).parent.parent / "lcc" / "corpus"

delta = Lam("x", App(Var("x"), Var("x")))
omega = App(delta, delta)


@pytest.fixture
def pred_s0():
    return parse_term_file(CORPUS / "pred_s0.lct")


@pytest.fixture
def tab_projection():
    return parse_term_file(CORPUS / "example31.lct")


@pytest.fixture
def diverge():
    return parse_term_file(CORPUS / "diverge.lct")


@pytest.fixture
def match_failure():
    return parse_term_file(CORPUS / "match_failure.lct")


# ---------- rule sets and strategies ----------


class TestRuleSet:
    def test_presets(self) -> None:
        assert RuleSet.parse("lcminus") is LC_MINUS
        assert RuleSet.parse("LC-MINUS") is LC_MINUS
        assert RuleName.CC in FULL
        assert RuleName.CC not in LC_MINUS
        assert LCOM.enabled == {RuleName.CA, RuleName.CL}
        assert RuleName.CA not in LB

    def test_tag_list(self) -> None:
        rules = RuleSet.parse("co, al")
        assert rules.enabled == {RuleName.AL, RuleName.CO}
        assert rules.label == "AL,CO"

    @pytest.mark.parametrize("text", ["", "bogus", "AL,XX"])
    def test_unknown(self, text: str) -> None:
        with pytest.raises(UnknownRuleSetError):
            RuleSet.parse(text)

    def test_strategies(self) -> None:
        assert Strategy.parse("lo").seed is None
        assert Strategy.parse("random:7").seed == 7
        assert str(Strategy.parse("random:7")) == "random:7"
        with pytest.raises(UnknownStrategyError):
            Strategy.parse("random")


# ---------- rules ----------


class TestRules:
    @pytest.mark.parametrize(
        "rule, source, expected",
        [
            (RuleName.AL, r"(\x. x) C", "C"),
            (RuleName.AD, "! C", "!"),
            (RuleName.LA, r"\x. f x", "f"),
            (RuleName.LD, r"\x. !", "!"),
            (RuleName.CO, "{| C -> D ; E -> F |}. E", "F"),
            (RuleName.CD, "{| C -> D |}. !", "!"),
            (RuleName.CA, "{| C -> D |}. f a", "({| C -> D |}. f) a"),
            (RuleName.CL, r"{| C -> y |}. \y. y", r"\z. {| C -> y |}. z"),
            (RuleName.CC, "{| D -> E |}. {| C -> D |}. x", "{| C -> {| D -> E |}. D |}. x"),
        ],
    )
    def test_contracts(self, rule: RuleName, source: str, expected: str) -> None:
        reduct = contract_here(parse_term(source), rule)
        assert reduct is not None
        assert alpha_eq(reduct, parse_term(expected))

    @pytest.mark.parametrize(
        "rule, source",
        [
            (RuleName.LA, r"\x. x x"),
            (RuleName.CO, "{| C -> D |}. E"),
            (RuleName.AL, "f C"),
            (RuleName.CC, "{| C -> D |}. x"),
        ],
    )
    def test_side_conditions(self, rule: RuleName, source: str) -> None:
        assert contract_here(parse_term(source), rule) is None

    def test_case_lam_keeps_free_variables_of_binding(self) -> None:
        reduct = contract_here(parse_term(r"{| C -> y |}. \y. y"), RuleName.CL)
        assert isinstance(reduct, Lam)
        assert reduct.bound != "y"

    def test_leftmost_outermost_order(self) -> None:
        t = parse_term(r"(\x. x) ((\y. y) C)")
        assert [str(r) for r in redexes(t, LC_MINUS)] == ["AL@root", "AL@1"]

    def test_scrutinee_before_branches(self) -> None:
        t = parse_term(r"{| C -> (\x. x) C |}. (\y. y) C")
        assert [str(r) for r in redexes(t, LC_MINUS)] == ["CA@root", "AL@0", "AL@1"]

    def test_invalid_redex(self) -> None:
        with pytest.raises(InvalidRedex):
            contract(parse_term("C"), Redex((), RuleName.AL))
        with pytest.raises(InvalidRedex):
            contract(parse_term("C D"), Redex((5,), RuleName.AL))


# ---------- normalisation ----------


class TestNormalize:
    def test_pred_s0(self, pred_s0) -> None:
        outcome = normalize(pred_s0, LC_MINUS)
        assert isinstance(outcome, NormalForm)
        assert outcome.term == Constr("Zero")
        assert [str(s.redex) for s in outcome.trace] == ["AL@root", "CA@root", "CO@0", "AL@root"]

    def test_tab_projection(self, tab_projection) -> None:
        outcome = normalize(tab_projection, LC_MINUS)
        assert isinstance(outcome, NormalForm)
        assert format_term(outcome.term) == "Tab t1 t3"
        assert outcome.steps == 6

    def test_random_strategy_reaches_same_normal_form(self, tab_projection) -> None:
        for seed in range(5):
            outcome = normalize(tab_projection, LC_MINUS, Strategy(seed=seed))
            assert isinstance(outcome, NormalForm)
            assert format_term(outcome.term) == "Tab t1 t3"

    def test_fuel(self) -> None:
        outcome = normalize(omega, LB, fuel=3)
        assert isinstance(outcome, FuelExhausted)
        assert outcome.steps == 3
        assert outcome.term == omega
        assert isinstance(normalize(omega, LB, fuel=0), FuelExhausted)
        with pytest.raises(ValueError):
            normalize(omega, LB, fuel=-1)

    def test_normal_term_takes_no_steps(self) -> None:
        outcome = normalize(Var("x"), FULL, fuel=0)
        assert isinstance(outcome, NormalForm)
        assert outcome.steps == 0


class TestCaseCaseDivergence:
    """A term normal without case-case whose case-case reduct diverges."""

    def test_normal_without_case_case(self, diverge) -> None:
        assert is_normal(diverge, LC_MINUS)

    def test_single_case_case_redex(self, diverge) -> None:
        assert [str(r) for r in redexes(diverge, FULL)] == ["CC@root"]

    def test_diverges_with_case_case(self, diverge) -> None:
        outcome = normalize(diverge, FULL, fuel=10)
        assert isinstance(outcome, FuelExhausted)
        assert [str(s.redex) for s in outcome.trace[:5]] == [
            "CC@root",
            "CO@1",
            "CA@2",
            "CO@2.0",
            "AL@2",
        ]
        final = outcome.term
        assert isinstance(final, Case)
        assert final.binding.get("C'") == omega

    def test_full_graph_is_cyclic(self, diverge) -> None:
        g = reduction_graph(diverge, FULL)
        assert g.status is GraphStatus.CYCLIC
        assert g.fully_explored

    def test_case_case_can_expose_match_failure(self, match_failure) -> None:
        assert classify(match_failure).kind is not ClassificationKind.UNDEFINED
        case_case = [r for r in redexes(match_failure, FULL) if r.rule is RuleName.CC]
        assert len(case_case) == 1
        reduct = contract(match_failure, case_case[0])
        assert str(classify(reduct)) == "undefined (match failure at 2)"
        assert normalize(match_failure, LC_MINUS).term == Constr("D'")


# ---------- case-commutation normal form ----------


class TestCaseNormalForm:
    def test_pushes_case_into_head(self) -> None:
        t = parse_term("{| C -> D |}. f a b")
        assert case_normal_form(t) == parse_term("({| C -> D |}. f) a b")

    def test_pushes_case_under_lambda(self) -> None:
        t = parse_term(r"{| C -> y |}. \y. y")
        assert alpha_eq(case_normal_form(t), parse_term(r"\z. {| C -> y |}. z"))

    def test_nested_scrutinee(self) -> None:
        t = parse_term("{| C -> D |}. {| E -> F |}. g a")
        expected = parse_term("({| C -> D |}. {| E -> F |}. g) a")
        assert case_normal_form(t) == expected

    def test_agrees_with_rewriting(self, tab_projection) -> None:
        outcome = normalize(tab_projection, LCOM)
        assert isinstance(outcome, NormalForm)
        assert outcome.term == case_normal_form(tab_projection)

    @settings(max_examples=200)
    @given(terms)
    def test_result_is_commutation_normal(self, t) -> None:
        assert is_normal(case_normal_form(t), LCOM)

    @settings(max_examples=200)
    @given(terms)
    def test_matches_leftmost_outermost(self, t) -> None:
        outcome = normalize(t, LCOM, fuel=10_000)
        assert isinstance(outcome, NormalForm)
        assert alpha_eq(outcome.term, case_normal_form(t))


# ---------- classification ----------


class TestClassify:
    @pytest.mark.parametrize(
        "source, expected",
        [
            (r"C (\x. x)", "value-data"),
            (r"\x. x", "value-abstraction"),
            (r"(\x. x) C", "neutral"),
            ("!", "neutral"),
            ("x C", "open (free: x)"),
            ("y x", "open (free: x, y)"),
            ("{| C -> D |}. E", "undefined (match failure at root)"),
            (r"\x. {| C -> D |}. E", "undefined (match failure at 0)"),
        ],
    )
    def test_kinds(self, source: str, expected: str) -> None:
        assert str(classify(parse_term(source))) == expected

    def test_pure_values(self) -> None:
        assert is_pure_value(parse_term("S (S Zero)"))
        assert not is_pure_value(parse_term(r"S (\x. x)"))

    @pytest.mark.parametrize(
        "source, expected",
        [
            (r"(\x. x) C D", "C D"),
            ("{| C -> D |}. C", "D"),
            (r"({| C -> \y. y |}. C) D", r"(\y. y) D"),
            ("{| C -> D |}. {| E -> C |}. E", "{| C -> D |}. C"),
            ("{| C -> D |}. E", None),
            ("x C", None),
        ],
    )
    def test_principal_reduct(self, source: str, expected: Optional[str]) -> None:
        reduct = principal_reduct(parse_term(source))
        if expected is None:
            assert reduct is None
        else:
            assert reduct is not None
            assert alpha_eq(reduct, parse_term(expected))


# ---------- graphs ----------


class TestGraphs:
    def test_pred_s0_graph(self, pred_s0) -> None:
        g = reduction_graph(pred_s0, LC_MINUS)
        assert g.status is GraphStatus.COMPLETE
        assert len(g) == 5
        assert g.edge_count() == 4
        assert g.sinks() == [Constr("Zero")]
        assert pred_s0 in g

    def test_omega_is_cyclic(self) -> None:
        g = reduction_graph(omega, LB)
        assert g.status is GraphStatus.CYCLIC
        assert len(g) == 1
        assert g.sinks() == []

    def test_truncated(self, pred_s0) -> None:
        g = reduction_graph(pred_s0, LC_MINUS, GraphBudget(max_nodes=2))
        assert g.status is GraphStatus.TRUNCATED
        assert not g.fully_explored
        g = reduction_graph(pred_s0, LC_MINUS, GraphBudget(max_depth=1))
        assert g.status is GraphStatus.TRUNCATED

    def test_bad_budget(self) -> None:
        with pytest.raises(ValueError):
            GraphBudget(max_nodes=0)

    def test_values(self, pred_s0) -> None:
        values = values_of(pred_s0)
        assert values.complete
        assert Constr("Zero") in values
        assert len(values.terms) == 1

    def test_perfect_normalisation(self, pred_s0) -> None:
        assert perfect_normalisation(pred_s0) is PNVerdict.CERTIFIED
        assert perfect_normalisation(parse_term("{| C -> D |}. E")) is PNVerdict.REFUTED
        assert perfect_normalisation(omega) is PNVerdict.REFUTED
        assert perfect_normalisation(pred_s0, GraphBudget(max_nodes=1)) is PNVerdict.UNKNOWN

    def test_nonempty_paths(self, pred_s0) -> None:
        assert has_nonempty_path(pred_s0, Constr("Zero")) is True
        assert has_nonempty_path(Constr("Zero"), Constr("Zero")) is False
        assert has_nonempty_path(omega, omega, LB) is True
        growing = parse_term(r"(\x. x x x) (\x. x x x)")
        assert has_nonempty_path(growing, Constr("Zero"), LB, GraphBudget(max_depth=3)) is None

    @pytest.mark.parametrize(
        "text, reduct",
        [
            (r"{| |}. \x. !", "{| |}. !"),
            ("{| C -> C |}. (! C)", "{| C -> C |}. !"),
        ],
    )
    def test_daimon_steps_under_a_case_join_up_to_cd(self, text: str, reduct: str) -> None:
        source = case_normal_form(parse_term(text))
        target = case_normal_form(parse_term(reduct))
        assert has_nonempty_path(source, target) is False
        assert has_nonempty_join(source, target) is True

    def test_nonempty_join(self) -> None:
        assert has_nonempty_join(Constr("Zero"), Constr("Zero")) is False
        assert has_nonempty_join(Constr("Zero"), parse_term("{| |}. !")) is False
        assert has_nonempty_join(parse_term("{| |}. !"), parse_term("{| |}. !")) is True
        assert has_nonempty_join(parse_term(r"\x. !"), parse_term("{| |}. !")) is True

    def test_dot(self, pred_s0) -> None:
        source = to_dot(reduction_graph(pred_s0, LC_MINUS)).source
        assert "AL@root" in source
        assert "peripheries=2" in source
        assert not source.startswith("//")
        assert to_dot(reduction_graph(omega, LB)).source.startswith("// cyclic")
