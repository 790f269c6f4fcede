"""
Derivation scripts (.lcd).

A script is one parenthesised tree:

    (Subs "x : C |- x : C | D"
      (Init "x : C |- x : C")
      (UnionIntroL "C <= C | D"))

Each node names its rule, gives its conclusion as a quoted judgment, then
optional witnesses (`key="value"`), then its premises. Witness keys:

    with    instantiating type (ForallElim, ForallElimD, ExistsIntro, ExistsIntroD)
    index   selected branch, 1-based (Cb)
    split   "U1; U2 => T", one per branch in binding order (Cb, repeatable)
    vector  "U1; U2" (Case)
    var     the quantified type variable (Univ, Exist)
    on      the rewritten context variable (Exist, Union)
"""

from __future__ import annotations

import logging
import re
from functools import lru_cache
from pathlib import Path
from typing import Any, Callable, Union

from lark import Lark, Token, Tree
from lark.exceptions import UnexpectedInput

from lcc.derivations.models import Derivation, Witnesses, format_judgment
from lcc.parsing.parser import (
    TermSyntaxError,
    parse_judgment,
    parse_split,
    parse_type,
    parse_vector,
    read_source,
)
from lcc.types import (
    DataVar,
    IllFormedTypeError,
    OrdVar,
    TypeExpr,
    format_type,
    format_vector,
)

logger = logging.getLogger(__name__)

_GRAMMAR = Path(__file__).with_name("script.lark")
_TERM_VAR = re.compile(r"^[a-z_][A-Za-z0-9_']*$")
_INDENT = "  "


class ScriptError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = ""):
        self.line = line
        self.column = column
        self.source = source
        self.detail = message
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{column}: {message}")


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(_GRAMMAR.read_text(encoding="utf-8"), parser="lalr")


# ---------------------------------------------------------------------------
# Reading
# ---------------------------------------------------------------------------


def _type_var(text: str) -> Union[OrdVar, DataVar]:
    ty = parse_type(text)
    if not isinstance(ty, (OrdVar, DataVar)):
        raise ValueError(f"expected a type variable, found {format_type(ty)}")
    return ty


def _term_var(text: str) -> str:
    name = text.strip()
    if not _TERM_VAR.match(name):
        raise ValueError(f"expected a term variable, found {name!r}")
    return name


_SINGLE: dict[str, Callable[[str], Any]] = {
    "with": parse_type,
    "index": int,
    "vector": parse_vector,
    "var": _type_var,
    "on": _term_var,
}
_FIELDS = {"with": "instance"}


def _value(token: Token) -> str:
    text = str(token)
    return text[1:-1] if token.type == "STRING" else text


def _witnesses(items: list[Tree[Token]], source: str) -> Witnesses:
    found: dict[str, Any] = {}
    splits: list[tuple[tuple[TypeExpr, ...], TypeExpr]] = []
    for item in items:
        key_token, value_token = item.children
        assert isinstance(key_token, Token) and isinstance(value_token, Token)
        key, text = str(key_token), _value(value_token)
        line, column = key_token.line or 0, key_token.column or 0
        if key != "split" and key not in _SINGLE:
            raise ScriptError(f"unknown witness key {key!r}", line, column, source)
        if key in found:
            raise ScriptError(f"duplicate witness {key!r}", line, column, source)
        try:
            if key == "split":
                splits.append(parse_split(text))
            else:
                found[key] = _SINGLE[key](text)
        except ValueError as exc:
            raise ScriptError(f"bad {key} witness {text!r}: {exc}", line, column, source) from exc
    return Witnesses(splits=tuple(splits), **{_FIELDS.get(k, k): v for k, v in found.items()})


def _node(tree: Tree[Token], source: str) -> Derivation:
    rule_token, judgment_token, *rest = tree.children
    assert isinstance(rule_token, Token) and isinstance(judgment_token, Token)
    try:
        conclusion = parse_judgment(_value(judgment_token))
    except (TermSyntaxError, IllFormedTypeError) as exc:
        raise ScriptError(
            f"bad conclusion of {rule_token}: {exc}",
            judgment_token.line or 0,
            judgment_token.column or 0,
            source,
        ) from exc
    witness_items = [c for c in rest if isinstance(c, Tree) and c.data == "witness"]
    premises = tuple(_node(c, source) for c in rest if isinstance(c, Tree) and c.data == "node")
    return Derivation(str(rule_token), conclusion, premises, _witnesses(witness_items, source))


def parse_script(text: str, source: str = "") -> Derivation:
    try:
        tree = _parser().parse(text)
    except UnexpectedInput as exc:
        raise ScriptError(
            f"malformed derivation script near {exc.get_context(text).strip()!r}",
            getattr(exc, "line", 0),
            getattr(exc, "column", 0),
            source,
        ) from exc
    root = tree.children[0]
    assert isinstance(root, Tree)
    return _node(root, source)


def load_script(path: Union[str, Path]) -> Derivation:
    text, name = read_source(path)
    d = parse_script(text, name)
    logger.debug(f"loaded {name}: {d.size()} nodes")
    return d


# ---------------------------------------------------------------------------
# Writing
# ---------------------------------------------------------------------------


def _witness_fields(w: Witnesses) -> list[tuple[str, str]]:
    fields: list[tuple[str, str]] = []
    if w.instance is not None:
        fields.append(("with", format_type(w.instance)))
    if w.index is not None:
        fields.append(("index", str(w.index)))
    for vector, result in w.splits:
        fields.append(("split", f"{format_vector(vector)} => {format_type(result)}".strip()))
    if w.vector is not None:
        fields.append(("vector", format_vector(w.vector)))
    if w.var is not None:
        fields.append(("var", str(w.var)))
    if w.on is not None:
        fields.append(("on", w.on))
    return fields


def format_script(d: Derivation, depth: int = 0) -> str:
    """Indented script text; `parse_script` reads it back to an equal tree."""
    pad = _INDENT * depth
    head = f'{pad}({d.rule} "{format_judgment(d.conclusion)}"'
    head += "".join(f' {key}="{value}"' for key, value in _witness_fields(d.witnesses))
    if not d.premises:
        return head + ")"
    body = "\n".join(format_script(p, depth + 1) for p in d.premises)
    return f"{head}\n{body})"
