"""Concrete syntax for influence formulas.

Grammar (whitespace-insensitive)::

    formula := disj
    disj    := conj ('|' conj)*       a | b  ==  (a -> false) -> b
    conj    := impl ('&' impl)*       a & b  ==  (a -> (b -> false)) -> false
    impl    := unary ('->' impl)?     right-associative
    unary   := '!' unary | atomic     !a     ==  a -> false
    atomic  := 'false' | set '|>' set | '(' formula ')'
    set     := '{' [ident (',' ident)*] '}'

Note that ``->`` binds tighter than ``|`` and ``&``: ``a | b -> c`` reads as
``a | (b -> c)``.  Parenthesize when in doubt.
"""
from __future__ import annotations

import re
from typing import Iterable, Optional

from .core import (BOT, Atom, Bot, Formula, Implies, InfluenceError,
                   UnknownAgentError, conj, disj, format_set, neg)


class FormulaSyntaxError(InfluenceError):
    def __init__(self, message: str, text: str, position: int):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}: {text!r}")


_TOKEN_RE = re.compile(r"\s*(?:(\|>|->|[|&!(){},])|([A-Za-z0-9_]+))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        if m.group(1):
            tokens.append((m.group(1), m.group(1), m.start(1)))
        else:
            tokens.append(("ident", m.group(2), m.start(2)))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ambient: Optional[frozenset]):
        self.text = text
        self.ambient = ambient
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def peek(self) -> str:
        return self.tokens[self.i][0]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str):
        if self.peek != kind:
            self.fail(f"expected {kind!r}")
        return self.advance()

    def fail(self, message: str):
        kind, value, pos = self.tokens[self.i]
        found = "end of input" if kind == "eof" else repr(value)
        raise FormulaSyntaxError(f"{message}, found {found}", self.text, pos)

    def formula(self) -> Formula:
        f = self.conj()
        while self.peek == "|":
            self.advance()
            f = disj(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.impl()
        while self.peek == "&":
            self.advance()
            f = conj(f, self.impl())
        return f

    def impl(self) -> Formula:
        f = self.unary()
        if self.peek == "->":
            self.advance()
            return Implies(f, self.impl())
        return f

    def unary(self) -> Formula:
        if self.peek == "!":
            self.advance()
            return neg(self.unary())
        return self.atomic()

    def atomic(self) -> Formula:
        kind, value, _ = self.tokens[self.i]
        if kind == "ident" and value == "false":
            self.advance()
            return BOT
        if kind == "(":
            self.advance()
            f = self.formula()
            self.expect(")")
            return f
        if kind == "{":
            left = self.agent_set()
            self.expect("|>")
            right = self.agent_set()
            return Atom(left, right)
        self.fail("expected 'false', '{' or '('")

    def agent_set(self) -> frozenset:
        self.expect("{")
        members = []
        if self.peek != "}":
            members.append(self.ident())
            while self.peek == ",":
                self.advance()
                members.append(self.ident())
        self.expect("}")
        return frozenset(members)

    def ident(self) -> str:
        _, name, _ = self.expect("ident")
        if self.ambient is not None and name not in self.ambient:
            raise UnknownAgentError(name, "formula")
        return name


def parse_formula(text: str, ambient: Optional[Iterable[str]] = None) -> Formula:
    """Parse ``text`` into a formula, expanding ``!``, ``|`` and ``&``.

    When ``ambient`` is given, every agent named in the formula must belong
    to it, otherwise :class:`UnknownAgentError` is raised.
    """
    p = _Parser(text, None if ambient is None else frozenset(ambient))
    f = p.formula()
    if p.peek != "eof":
        p.fail("unexpected trailing input")
    return f


def pretty(f: Formula) -> str:
    """Render ``f`` in primitive syntax; ``parse_formula(pretty(f)) == f``."""
    if isinstance(f, Bot):
        return "false"
    if isinstance(f, Atom):
        return f"{format_set(f.left)} |> {format_set(f.right)}"
    if isinstance(f, Implies):
        left = pretty(f.antecedent)
        if isinstance(f.antecedent, Implies):
            left = f"({left})"
        return f"{left} -> {pretty(f.consequent)}"
    raise TypeError(f"not a formula: {f!r}")
