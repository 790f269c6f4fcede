"""
Tests for `lcc.derivations`: the bundled corpus of typing derivations, the
local rule checks, and the bounded sub-typing search.
"""

from __future__ import annotations

from pathlib import Path

import pytest

from lcc.derivations import (
    Derivation,
    Subtype,
    check_derivation,
    check_subtyping,
    check_typing,
    format_path,
    match_instance,
    search_subtyping,
)
from lcc.parsing import load_script, parse_script, parse_type
from lcc.types import Arrow, DataVar, Forall, OrdVar, TApp, TConstr

CORPUS = Path(__file__).parent.parent / "lcc" / "corpus"
POSITIVE = sorted((CORPUS / "positive").glob("*.lcd"))
NEGATIVE = sorted((CORPUS / "negative").glob("*.lcd"))

C, D = TConstr("C"), TConstr("D")
X, Y = OrdVar("X"), OrdVar("Y")


def expectation(path: Path) -> str:
    for line in path.read_text(encoding="utf-8").splitlines():
        if line.startswith("-- expect:"):
            return line.removeprefix("-- expect:").strip()
    raise AssertionError(f"{path.name} has no expect line")


def check(text: str):
    return check_derivation(parse_script(text))


# ---------- corpus ----------


class TestCorpus:
    def test_corpus_present(self) -> None:
        assert len(POSITIVE) >= 6
        assert len(NEGATIVE) >= 4

    @pytest.mark.parametrize("path", POSITIVE, ids=lambda p: p.name)
    def test_positive_accepted(self, path: Path) -> None:
        outcome = check_typing(load_script(path))
        assert outcome.accepted, str(outcome.rejection)
        assert outcome.rejection is None

    @pytest.mark.parametrize("path", NEGATIVE, ids=lambda p: p.name)
    def test_negative_rejected_where_expected(self, path: Path) -> None:
        outcome = check_derivation(load_script(path))
        assert not outcome.accepted
        assert str(outcome.rejection).startswith(f"rejected at {expectation(path)}")


# ---------- typing rules ----------


class TestTypingRules:
    def test_init(self) -> None:
        assert check('(Init "x : C |- x : C")').accepted

    def test_init_needs_declaration(self) -> None:
        outcome = check('(Init "x : C |- y : C")')
        assert outcome.rejection is not None
        assert outcome.rejection.reason == "side condition violated: y is not in the context"

    def test_arrow_intro(self) -> None:
        script = r'(ArrowIntro "|- \x. x : C -> C" (Init "x : C |- x : C"))'
        assert check(script).accepted

    def test_premise_path(self) -> None:
        script = r'(ArrowIntro "|- \x. x : C -> D" (Init "x : C |- x : D"))'
        outcome = check(script)
        assert outcome.rejection is not None
        assert outcome.rejection.path == (0,)
        assert outcome.rejection.rule == "Init"

    def test_daimon(self) -> None:
        assert check('(False "|- ! : C -> D")').accepted

    def test_constr_types_itself(self) -> None:
        outcome = check('(Constr "|- C : D")')
        assert not outcome.accepted

    def test_unknown_rule(self) -> None:
        outcome = check('(Magic "|- C : C")')
        assert outcome.rejection is not None
        assert "unknown typing rule" in outcome.rejection.reason

    def test_subsumption_through_data_axiom(self) -> None:
        script = """
        (Subs "|- S : Zero -> S Zero"
          (Constr "|- S : S")
          (Data "S <= Zero -> S Zero"))
        """
        assert check(script).accepted


# ---------- sub-typing rules ----------


class TestSubtypingRules:
    def test_refl_up_to_alpha(self) -> None:
        assert check('(Refl "forall $X. $X <= forall $Y. $Y")').accepted

    def test_data_needs_data_type(self) -> None:
        outcome = check('(Data "$X <= C -> C")')
        assert not outcome.accepted

    def test_distinct_constructors(self) -> None:
        assert check('(Constr "C & D <= forall @a. @a")').accepted

    def test_trans(self) -> None:
        script = """
        (Trans "C & D <= C | E"
          (InterElimL "C & D <= C")
          (UnionIntroL "C <= C | E"))
        """
        assert check(script).accepted

    def test_ill_formed_conclusion(self) -> None:
        ill = TApp(X, C)
        outcome = check_derivation(Derivation("Refl", Subtype(ill, ill)))
        assert outcome.rejection is not None
        assert outcome.rejection.reason.startswith("ill-formed type")

    def test_judgment_kind(self) -> None:
        typing = parse_script('(Constr "|- C : C")')
        subtyping = parse_script('(Refl "C <= C")')
        assert not check_subtyping(typing).accepted
        assert not check_typing(subtyping).accepted
        assert check_subtyping(subtyping).accepted

    def test_format_path(self) -> None:
        assert format_path(()) == "root"
        assert format_path((0, 1)) == "root/0/1"


# ---------- search ----------


class TestMatchInstance:
    def test_finds_instance(self) -> None:
        assert match_instance(Arrow(X, X), X, Arrow(C, C)) == C

    def test_inconsistent_instance(self) -> None:
        assert match_instance(Arrow(X, X), X, Arrow(C, D)) is None

    def test_variable_absent(self) -> None:
        assert match_instance(C, X, C) == X

    def test_bound_variable_cannot_escape(self) -> None:
        pattern = Forall(Y, Arrow(X, Y))
        target = parse_type("forall $Z. $Z -> $Z")
        assert match_instance(pattern, X, target) is None


class TestSearch:
    @pytest.mark.parametrize(
        "lhs, rhs",
        [
            ("C", "C"),
            ("C & D", "forall @a. @a"),
            ("C & D", "C | E"),
            ("forall $X. $X -> $X", "C -> C"),
            ("C -> D", "C -> D | E"),
            ("S", "Zero -> S Zero"),
        ],
    )
    def test_finds_checked_derivation(self, lhs: str, rhs: str) -> None:
        found = search_subtyping(parse_type(lhs), parse_type(rhs))
        assert found is not None
        assert check_subtyping(found).accepted

    def test_instance_witness(self) -> None:
        found = search_subtyping(parse_type("forall @a. @a"), C)
        assert found is not None
        assert found.rule == "ForallElimD"
        assert found.witnesses.instance == C

    def test_unrelated_constants(self) -> None:
        assert search_subtyping(C, D) is None

    def test_non_data_instance_of_data_variable(self) -> None:
        lhs = Forall(DataVar("a"), DataVar("a"))
        assert search_subtyping(lhs, Arrow(C, C), depth=1) is None

    def test_depth_must_be_positive(self) -> None:
        with pytest.raises(ValueError):
            search_subtyping(C, C, depth=0)
