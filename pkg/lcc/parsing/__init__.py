"""Concrete syntax: terms, types, judgments and derivation scripts."""

from lcc.parsing.parser import (
    TermSyntaxError,
    parse_judgment,
    parse_split,
    parse_term,
    parse_term_file,
    parse_type,
    parse_type_file,
    parse_vector,
    read_source,
)
from lcc.parsing.script import ScriptError, format_script, load_script, parse_script

__all__ = [
    "ScriptError",
    "TermSyntaxError",
    "format_script",
    "load_script",
    "parse_judgment",
    "parse_script",
    "parse_split",
    "parse_term",
    "parse_term_file",
    "parse_type",
    "parse_type_file",
    "parse_vector",
    "read_source",
]
