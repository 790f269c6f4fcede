"""
lcc: the lambda-calculus with constructors.

Parsing, reduction under configurable rule sets, case-commutation normal
forms, a checker for typing and sub-typing derivations, and a property lab
that exercises the calculus' metatheory on exhaustively enumerated terms.
"""

__version__ = "0.1.0"
