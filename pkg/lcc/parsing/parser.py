"""
Parsers for the concrete syntax.

One LALR parser (grammar.lark) with a start symbol per entry point. Parse
trees are turned into syntax objects by `_Builder`; type applications are
checked for well-formedness as they are built, so an ill-formed type is
reported at its source position.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from pathlib import Path
from typing import Any, Union

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError
from lark.tree import Meta

from lcc.derivations.models import (
    BindingTyping,
    Context,
    Judgment,
    Subtype,
    TermTyping,
)
from lcc.syntax import (
    DAIMON,
    App,
    Case,
    CaseBinding,
    Constr,
    DuplicateBranchError,
    Lam,
    Term,
    Var,
)
from lcc.types import (
    Arrow,
    DataVar,
    Exists,
    Forall,
    IllFormedTypeError,
    OrdVar,
    TApp,
    TConstr,
    TInter,
    TUnion,
    TypeExpr,
    TypeVector,
    is_data_type,
)

logger = logging.getLogger(__name__)

_GRAMMAR = Path(__file__).with_name("grammar.lark")
_STARTS = ["term_unit", "type_unit", "judgment_unit", "vector_unit", "split_unit"]


class TermSyntaxError(ValueError):
    """A syntax error with its source position and the tokens that would have been accepted."""

    def __init__(
        self,
        message: str,
        line: int = 0,
        column: int = 0,
        expected: tuple[str, ...] = (),
        source: str = "",
    ):
        self.line = line
        self.column = column
        self.expected = expected
        self.source = source
        self.detail = message
        where = f"{source}:" if source else ""
        text = f"{where}{line}:{column}: {message}"
        if expected:
            text += f" (expected one of: {', '.join(expected)})"
        super().__init__(text)


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(
        _GRAMMAR.read_text(encoding="utf-8"),
        parser="lalr",
        start=_STARTS,
        propagate_positions=True,
        maybe_placeholders=True,
    )


# ---------------------------------------------------------------------------
# Tree -> syntax
# ---------------------------------------------------------------------------


class _Builder(Transformer[Token, Any]):
    # units
    def term_unit(self, items: list[Any]) -> Term:
        return items[0]  # type: ignore[no-any-return]

    def type_unit(self, items: list[Any]) -> TypeExpr:
        return items[0]  # type: ignore[no-any-return]

    def judgment_unit(self, items: list[Any]) -> Judgment:
        return items[0]  # type: ignore[no-any-return]

    def vector_unit(self, items: list[Any]) -> TypeVector:
        return tuple(t for t in items if t is not None)

    def split_unit(self, items: list[Any]) -> tuple[TypeVector, TypeExpr]:
        return items[0], items[1]

    # terms
    def var(self, items: list[Token]) -> Term:
        return Var(str(items[0]))

    def constr(self, items: list[Token]) -> Term:
        return Constr(str(items[0]))

    def daimon(self, _: list[Any]) -> Term:
        return DAIMON

    def lam(self, items: list[Any]) -> Term:
        return Lam(str(items[0]), items[1])

    def app(self, items: list[Term]) -> Term:
        result = items[0]
        for arg in items[1:]:
            result = App(result, arg)
        return result

    def branch(self, items: list[Any]) -> tuple[str, Term]:
        return str(items[0]), items[1]

    def binding(self, items: list[Any]) -> CaseBinding:
        return CaseBinding(tuple(b for b in items if b is not None))

    def case(self, items: list[Any]) -> Term:
        return Case(items[0], items[1])

    # types
    def ordvar(self, items: list[Token]) -> TypeExpr:
        return OrdVar(str(items[0])[1:])

    def datavar(self, items: list[Token]) -> TypeExpr:
        return DataVar(str(items[0])[1:])

    def tconstr(self, items: list[Token]) -> TypeExpr:
        return TConstr(str(items[0]))

    @v_args(meta=True)
    def tapplication(self, meta: Meta, items: list[TypeExpr]) -> TypeExpr:
        head, arg = items
        if not is_data_type(head):
            raise IllFormedTypeError(
                "the head of a type application must be a data type",
                line=getattr(meta, "line", 0),
                column=getattr(meta, "column", 0),
            )
        return TApp(head, arg)

    def tarrow(self, items: list[TypeExpr]) -> TypeExpr:
        return Arrow(items[0], items[1])

    def tunion(self, items: list[TypeExpr]) -> TypeExpr:
        return TUnion(items[0], items[1])

    def tinter(self, items: list[TypeExpr]) -> TypeExpr:
        return TInter(items[0], items[1])

    def forall(self, items: list[Any]) -> TypeExpr:
        return Forall(items[0], items[1])

    def exists(self, items: list[Any]) -> TypeExpr:
        return Exists(items[0], items[1])

    # judgments
    def hyp(self, items: list[Any]) -> tuple[str, TypeExpr]:
        return str(items[0]), items[1]

    def context(self, items: list[Any]) -> Context:
        ctx = Context()
        for hyp in items:
            if hyp is not None:
                ctx = ctx.extend(*hyp)
        return ctx

    def subtype(self, items: list[TypeExpr]) -> Judgment:
        return Subtype(items[0], items[1])

    def typing(self, items: list[Any]) -> Judgment:
        ctx, subject, ty = items
        if isinstance(subject, CaseBinding):
            return BindingTyping(ctx, subject, ty)
        return TermTyping(ctx, subject, ty)


def _expected_display(names: set[str]) -> tuple[str, ...]:
    parser = _parser()
    shown: set[str] = set()
    for name in names:
        try:
            pattern = parser.get_terminal(name).pattern
        except KeyError:
            shown.add(name)
            continue
        if pattern.type == "str":
            shown.add(repr(pattern.value))
        else:
            shown.add(name.lower())
    return tuple(sorted(shown))


def _parse(text: str, start: str, source: str = "") -> Any:
    try:
        tree = _parser().parse(text, start=start)
    except UnexpectedCharacters as exc:
        raise TermSyntaxError(
            f"unexpected character {text[exc.pos_in_stream]!r}",
            exc.line,
            exc.column,
            _expected_display(set(exc.allowed or ())),
            source,
        ) from exc
    except UnexpectedEOF as exc:
        raise TermSyntaxError(
            "unexpected end of input",
            getattr(exc, "line", 0) or text.count("\n") + 1,
            getattr(exc, "column", 0) or 0,
            _expected_display(set(exc.expected or ())),
            source,
        ) from exc
    except UnexpectedInput as exc:
        token = getattr(exc, "token", None)
        found = "end of input" if token is None or token.type == "$END" else repr(str(token))
        raise TermSyntaxError(
            f"unexpected {found}",
            exc.line,
            exc.column,
            _expected_display(set(getattr(exc, "expected", ()) or ())),
            source,
        ) from exc
    try:
        return _Builder().transform(tree)
    except VisitError as exc:
        orig = exc.orig_exc
        if isinstance(orig, IllFormedTypeError):
            if source:
                orig.args = (f"{source}:{orig.line}:{orig.column}: {orig}",)
            raise orig from None
        if isinstance(orig, DuplicateBranchError):
            meta = getattr(exc.obj, "meta", None)
            raise TermSyntaxError(
                str(orig), getattr(meta, "line", 0), getattr(meta, "column", 0), (), source
            ) from None
        raise


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------


def parse_term(text: str, source: str = "") -> Term:
    term: Term = _parse(text, "term_unit", source)
    return term


def parse_type(text: str, source: str = "") -> TypeExpr:
    ty: TypeExpr = _parse(text, "type_unit", source)
    return ty


def parse_judgment(text: str, source: str = "") -> Judgment:
    judgment: Judgment = _parse(text, "judgment_unit", source)
    return judgment


def parse_vector(text: str, source: str = "") -> TypeVector:
    """`"T1; T2"` (empty text gives the empty vector)."""
    vector: TypeVector = _parse(text, "vector_unit", source)
    return vector


def parse_split(text: str, source: str = "") -> tuple[TypeVector, TypeExpr]:
    """`"T1; T2 => T"`, the (vector, result) split of a branch type."""
    split: tuple[TypeVector, TypeExpr] = _parse(text, "split_unit", source)
    return split


def read_source(path: Union[str, Path]) -> tuple[str, str]:
    """(text, display name) of a UTF-8 source file."""
    p = Path(path)
    return p.read_text(encoding="utf-8"), str(p)


def parse_term_file(path: Union[str, Path]) -> Term:
    text, name = read_source(path)
    logger.debug(f"parsing term file {name}")
    return parse_term(text, name)


def parse_type_file(path: Union[str, Path]) -> TypeExpr:
    text, name = read_source(path)
    return parse_type(text, name)
