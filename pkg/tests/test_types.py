"""Tests for `lcc.types`: data types, well-formedness, substitution and printing."""

from __future__ import annotations

import pytest
from hypothesis import given

from lcc.parsing import parse_type
from lcc.types import (
    DATA_BOTTOM,
    ORD_BOTTOM,
    Arrow,
    DataSubstitutionViolation,
    DataVar,
    Exists,
    Forall,
    IllFormedTypeError,
    OrdVar,
    TApp,
    TConstr,
    arrow_chain,
    check_wellformed,
    constructor_spine,
    expand_vectors,
    format_type,
    is_data_type,
    is_pure_data_type,
    is_wellformed,
    type_alpha_eq,
    type_application,
    type_free_vars,
    type_substitute,
)
from tests.strategies import types

X, Y = OrdVar("X"), OrdVar("Y")
a = DataVar("a")


# ---------- data types ----------


class TestDataTypes:
    @pytest.mark.parametrize(
        "text",
        ["C", "@a", "Tab $T1 $T3", "C | D", "C & @a", "forall @a. @a", "exists $X. C $X"],
    )
    def test_data(self, text: str) -> None:
        assert is_data_type(parse_type(text))

    @pytest.mark.parametrize("text", ["$X", "C -> D", "C | $X", "forall $X. $X"])
    def test_not_data(self, text: str) -> None:
        assert not is_data_type(parse_type(text))

    def test_bottoms(self) -> None:
        assert is_data_type(DATA_BOTTOM)
        assert not is_data_type(ORD_BOTTOM)

    def test_constructor_spine(self) -> None:
        assert constructor_spine(parse_type("Tab A $X")) == ("Tab", [TConstr("A"), X])
        assert constructor_spine(TConstr("C")) == ("C", [])
        assert constructor_spine(TApp(a, X)) is None
        assert constructor_spine(parse_type("C | D")) is None

    def test_pure_data(self) -> None:
        assert is_pure_data_type(parse_type("S (S Zero)"))
        assert not is_pure_data_type(parse_type("S @a"))


# ---------- well-formedness ----------


class TestWellFormedness:
    def test_application_of_data_heads(self) -> None:
        assert is_wellformed(parse_type("(C | D) $X"))
        assert is_wellformed(TApp(a, Arrow(X, X)))

    def test_non_data_head_reported_with_position(self) -> None:
        ty = Arrow(TConstr("A"), TApp(X, TConstr("B")))
        violation = check_wellformed(ty)
        assert violation is not None
        assert violation.position == (1,)
        assert violation.head == X
        assert str(violation) == "type application at 1 has a non-data head"

    def test_expand_vectors(self) -> None:
        assert expand_vectors(TConstr("C"), [X, Y]) == TApp(TApp(TConstr("C"), X), Y)
        assert expand_vectors(TConstr("C"), [X], TConstr("D")) == Arrow(X, TConstr("D"))
        with pytest.raises(IllFormedTypeError):
            expand_vectors(X, [Y])

    def test_empty_vectors(self) -> None:
        assert type_application(TConstr("C"), ()) == TConstr("C")
        assert arrow_chain((), X) == X


# ---------- substitution ----------


class TestSubstitution:
    def test_free_vars(self) -> None:
        assert type_free_vars(parse_type("forall $X. $X -> $Y | @a")) == {Y, a}

    def test_substitutes_free_occurrences_only(self) -> None:
        ty = parse_type("$X -> forall $X. $X")
        assert type_substitute(ty, X, TConstr("C")) == parse_type("C -> forall $X. $X")

    def test_avoids_capture(self) -> None:
        ty = Forall(Y, Arrow(X, Y))
        result = type_substitute(ty, X, Y)
        assert isinstance(result, Forall)
        assert result.var != Y
        assert type_alpha_eq(result, parse_type("forall $Z. $Y -> $Z"))

    def test_data_variable_accepts_data(self) -> None:
        result = type_substitute(parse_type("C @a"), a, parse_type("D | E"))
        assert result == parse_type("C (D | E)")

    def test_data_variable_rejects_non_data(self) -> None:
        with pytest.raises(DataSubstitutionViolation):
            type_substitute(parse_type("C @a"), a, Arrow(X, X))

    def test_ordinary_variable_accepts_anything(self) -> None:
        result = type_substitute(X, X, Arrow(X, X))
        assert result == Arrow(X, X)


# ---------- alpha-equivalence and printing ----------


class TestAlpha:
    def test_bound_names_irrelevant(self) -> None:
        assert type_alpha_eq(parse_type("forall $X. $X"), parse_type("forall $Z. $Z"))

    def test_sorts_matter(self) -> None:
        assert not type_alpha_eq(Forall(X, X), Forall(a, a))

    def test_free_names_matter(self) -> None:
        assert not type_alpha_eq(X, Y)

    def test_exists_differs_from_forall(self) -> None:
        assert not type_alpha_eq(Exists(a, a), Forall(a, a))

    @given(types)
    def test_alpha_eq_reflexive(self, ty) -> None:
        assert type_alpha_eq(ty, ty)


class TestPrinter:
    @pytest.mark.parametrize(
        "text",
        [
            "forall @a. @a",
            "Tab $T1 $T3",
            "(C -> D) -> E",
            "C -> forall $X. $X",
            "(C | D) & E",
            "C (D E)",
            "(forall $X. $X) -> C",
        ],
    )
    def test_canonical_text(self, text: str) -> None:
        assert format_type(parse_type(text)) == text
