"""Parser for the canonical formula grammar (see docs/grammar.md).

ASCII and Unicode connectives are both accepted: ``forall/∀ exists/∃ ~/¬
&/∧ |/∨ ->/→ <->/↔``.  ``mode="closed"`` reads bare identifiers in formula
position as nullary predicates; ``mode="template"`` reads them as sentence
placeholders.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import FormulaSyntaxError
from .syntax import (
    And,
    Constant,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Placeholder,
    PredApp,
    Signature,
    SORTS,
    Variable,
    infer_signature,
    sort_of_name,
)

_TOKEN_SPEC = [
    ("IFF", r"<->|↔|⟷"),
    ("IMPLIES", r"->|→|⟶"),
    ("AND", r"&|∧"),
    ("OR", r"\||∨"),
    ("NOT", r"~|¬"),
    ("FORALL", r"forall\b|∀"),
    ("EXISTS", r"exists\b|∃"),
    ("LPAREN", r"\("),
    ("RPAREN", r"\)"),
    ("COMMA", r","),
    ("DOT", r"\."),
    ("COLON", r":"),
    ("IDENT", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("WS", r"\s+"),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{n}>{p})" for n, p in _TOKEN_SPEC))


@dataclass
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "WS":
            tokens.append(_Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(_Token("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, mode: str):
        self.tokens = _tokenize(text)
        self.i = 0
        self.mode = mode
        self.bound: list[str] = []

    @property
    def cur(self) -> _Token:
        return self.tokens[self.i]

    def eat(self, kind: str) -> _Token:
        tok = self.cur
        if tok.kind != kind:
            raise FormulaSyntaxError(f"expected {kind}, got {tok.text!r}", tok.pos)
        self.i += 1
        return tok

    def parse(self) -> Formula:
        phi = self.formula()
        if self.cur.kind != "EOF":
            raise FormulaSyntaxError(f"trailing input {self.cur.text!r}", self.cur.pos)
        return phi

    def formula(self) -> Formula:
        left = self.implication()
        if self.cur.kind == "IFF":
            self.eat("IFF")
            right = self.implication()
            if self.cur.kind == "IFF":
                raise FormulaSyntaxError(
                    "chained <-> needs explicit parentheses", self.cur.pos
                )
            return Iff(left, right)
        return left

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.cur.kind == "IMPLIES":
            self.eat("IMPLIES")
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        out = self.conjunction()
        while self.cur.kind == "OR":
            self.eat("OR")
            out = Or(out, self.conjunction())
        return out

    def conjunction(self) -> Formula:
        out = self.unary()
        while self.cur.kind == "AND":
            self.eat("AND")
            out = And(out, self.unary())
        return out

    def unary(self) -> Formula:
        tok = self.cur
        if tok.kind == "NOT":
            self.eat("NOT")
            return Not(self.unary())
        if tok.kind in ("FORALL", "EXISTS"):
            return self.quantified()
        return self.primary()

    def quantified(self) -> Formula:
        kind = Forall if self.cur.kind == "FORALL" else Exists
        self.eat(self.cur.kind)
        variables = [self.vardecl()]
        while self.cur.kind == "IDENT":
            variables.append(self.vardecl())
        self.eat("DOT")
        self.bound.extend(v.name for v in variables)
        body = self.formula()
        del self.bound[len(self.bound) - len(variables):]
        out = body
        for v in reversed(variables):
            out = kind(v, out)
        return out

    def vardecl(self) -> Variable:
        name = self.eat("IDENT").text
        if self.cur.kind == "COLON":
            self.eat("COLON")
            sort_tok = self.eat("IDENT")
            if sort_tok.text not in SORTS:
                raise FormulaSyntaxError(f"unknown sort {sort_tok.text!r}", sort_tok.pos)
            return Variable(name, sort_tok.text)
        return Variable(name)

    def primary(self) -> Formula:
        tok = self.cur
        if tok.kind == "LPAREN":
            self.eat("LPAREN")
            phi = self.formula()
            self.eat("RPAREN")
            return phi
        if tok.kind == "IDENT":
            name = self.eat("IDENT").text
            if self.cur.kind == "LPAREN":
                self.eat("LPAREN")
                args = [self.term()]
                while self.cur.kind == "COMMA":
                    self.eat("COMMA")
                    args.append(self.term())
                self.eat("RPAREN")
                return PredApp(name, tuple(args))
            if self.mode == "template":
                return Placeholder(name)
            return PredApp(name, ())
        raise FormulaSyntaxError(f"expected a formula, got {tok.text!r}", tok.pos)

    def term(self):
        tok = self.eat("IDENT")
        if self.cur.kind == "LPAREN":
            raise FormulaSyntaxError("function terms are not supported", tok.pos)
        name = tok.text
        if name in self.bound or name[0].islower():
            return Variable(name)
        return Constant(name, sort_of_name(name))


def parse_formula(
    text: str, mode: str = "closed", signature: Signature | None = None
) -> Formula:
    """Parse text into a Formula; checks sort consistency against signature."""
    if mode not in ("closed", "template"):
        raise ValueError(f"unknown parse mode {mode!r}")
    phi = _Parser(text, mode).parse()
    infer_signature(phi, signature)
    return phi
