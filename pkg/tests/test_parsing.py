"""
Tests for `lcc.parsing`: the term, type and judgment grammars, syntax error
reporting, and the derivation script reader and printer.
"""

from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import given

from lcc.derivations import BindingTyping, Subtype, TermTyping
from lcc.parsing import (
    ScriptError,
    TermSyntaxError,
    format_script,
    load_script,
    parse_judgment,
    parse_script,
    parse_split,
    parse_term,
    parse_type,
    parse_vector,
)
from lcc.syntax import DAIMON, App, Case, CaseBinding, Constr, Lam, Var, alpha_eq, format_term
from lcc.types import (
    Arrow,
    DataVar,
    Forall,
    IllFormedTypeError,
    OrdVar,
    TApp,
    TConstr,
    TInter,
    TUnion,
    format_type,
    type_alpha_eq,
)
from tests.strategies import terms, types

CORPUS = Path(__file__).parent.parent / "lcc" / "corpus"

delta = Lam("x", App(Var("x"), Var("x")))


# ---------- terms ----------


class TestParseTerm:
    def test_pred(self) -> None:
        t = parse_term(r"\x. {| Zero -> Zero ; S -> \z. z |}. x")
        theta = CaseBinding.of(("Zero", Constr("Zero")), ("S", Lam("z", Var("z"))))
        assert t == Lam("x", Case(theta, Var("x")))

    def test_empty_binding_over_daimon(self) -> None:
        assert parse_term("{| |}. !") == Case(CaseBinding(), DAIMON)

    def test_delta_delta(self) -> None:
        assert parse_term(r"(\x. x x) (\x. x x)") == App(delta, delta)

    def test_application_is_left_associative(self) -> None:
        assert parse_term("f a b") == App(App(Var("f"), Var("a")), Var("b"))

    def test_lambda_body_extends_right(self) -> None:
        assert parse_term(r"\x. f x") == Lam("x", App(Var("f"), Var("x")))

    def test_comments_ignored(self) -> None:
        assert parse_term("-- a comment\nC -- trailing\n") == Constr("C")

    def test_syntax_error_has_position_and_expected_tokens(self) -> None:
        with pytest.raises(TermSyntaxError) as info:
            parse_term("\\x x", source="bad.lct")
        err = info.value
        assert err.line == 1
        assert err.column > 0
        assert err.expected
        assert str(err).startswith("bad.lct:1:")

    def test_unclosed_paren(self) -> None:
        with pytest.raises(TermSyntaxError):
            parse_term("(x y")

    def test_duplicate_branch_is_a_syntax_error(self) -> None:
        with pytest.raises(TermSyntaxError):
            parse_term("{| C -> x ; C -> y |}. z")

    @given(terms)
    def test_printer_round_trip(self, t) -> None:
        assert alpha_eq(parse_term(format_term(t)), t)


# ---------- types ----------


class TestParseType:
    def test_application_nests_left(self) -> None:
        ty = parse_type("Tab $T1 $T3")
        assert ty == TApp(TApp(TConstr("Tab"), OrdVar("T1")), OrdVar("T3"))

    def test_case_bottom_type(self) -> None:
        ty = parse_type("forall @a. @a -> forall $X. $X")
        expected = Forall(DataVar("a"), Arrow(DataVar("a"), Forall(OrdVar("X"), OrdVar("X"))))
        assert ty == expected

    def test_precedence(self) -> None:
        # application, then &, then |, then ->
        ty = parse_type("A B & C | D -> E")
        left = TUnion(TInter(TApp(TConstr("A"), TConstr("B")), TConstr("C")), TConstr("D"))
        assert ty == Arrow(left, TConstr("E"))

    def test_arrow_is_right_associative(self) -> None:
        assert parse_type("A -> B -> C") == Arrow(
            TConstr("A"), Arrow(TConstr("B"), TConstr("C"))
        )

    def test_arrow_head_is_ill_formed(self) -> None:
        with pytest.raises(IllFormedTypeError):
            parse_type("($X -> $X) Nat")

    def test_vectors_and_splits(self) -> None:
        assert parse_vector("") == ()
        assert parse_vector("A; $X") == (TConstr("A"), OrdVar("X"))
        vector, result = parse_split("A; B => C")
        assert vector == (TConstr("A"), TConstr("B"))
        assert result == TConstr("C")
        assert parse_split("=> C") == ((), TConstr("C"))

    @given(types)
    def test_printer_round_trip(self, ty) -> None:
        assert type_alpha_eq(parse_type(format_type(ty)), ty)


# ---------- judgments ----------


class TestParseJudgment:
    def test_subtype(self) -> None:
        j = parse_judgment("C & D <= forall @a. @a")
        assert isinstance(j, Subtype)

    def test_term_typing_with_context(self) -> None:
        j = parse_judgment("x : C, y : $X |- x : C")
        assert isinstance(j, TermTyping)
        assert j.ctx.get("y") == OrdVar("X")
        assert j.subject == Var("x")

    def test_empty_context(self) -> None:
        j = parse_judgment("|- C : C")
        assert isinstance(j, TermTyping)
        assert len(j.ctx) == 0

    def test_binding_subject(self) -> None:
        j = parse_judgment("|- {| C -> D |} : C -> D")
        assert isinstance(j, BindingTyping)


# ---------- derivation scripts ----------


class TestScripts:
    def test_reads_witnesses(self) -> None:
        d = parse_script(
            '(Cb "|- {| C -> D |} : C -> D" index=1 split="=> D"\n  (Constr "|- D : D"))'
        )
        assert d.rule == "Cb"
        assert d.witnesses.index == 1
        assert d.witnesses.splits == (((), TConstr("D")),)
        assert len(d.premises) == 1

    def test_unknown_witness_key(self) -> None:
        with pytest.raises(ScriptError, match="unknown witness key"):
            parse_script('(Refl "C <= C" colour="red")')

    def test_duplicate_witness(self) -> None:
        with pytest.raises(ScriptError, match="duplicate witness"):
            parse_script('(Cb "|- {| C -> D |} : C -> D" index=1 index=2 (Constr "|- D : D"))')

    def test_bad_conclusion_reports_position(self) -> None:
        with pytest.raises(ScriptError) as info:
            parse_script('(Refl\n  "C <=")', source="broken.lcd")
        assert info.value.line == 2

    def test_unbalanced_parens(self) -> None:
        with pytest.raises(ScriptError):
            parse_script('(Refl "C <= C"')

    @pytest.mark.parametrize(
        "path", sorted((CORPUS / "positive").glob("*.lcd")), ids=lambda p: p.name
    )
    def test_format_script_reads_back(self, path: Path) -> None:
        d = load_script(path)
        assert parse_script(format_script(d)) == d
