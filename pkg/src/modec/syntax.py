"""Tokenizer and parser for the modec statement language.

One statement per line::

    let a = 2*X^[1,0;0] + 3*X^[0,2;0]
    dpr a b c d
    dprn (a; c) [b1, b2] [d1, d2]
    include pair(x.b=0 / c|x) <= pair(x.a=0 / Z) pair(T / c|x)

Query arguments are whole expressions read greedily, so ``dpr a -b c d``
reads ``a - b``; write ``(-b)`` instead.  Element expressions stay as
syntax trees until evaluated against an environment and a domain.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import ParseError
from .lgroup import GroupElement, canon

KEYWORDS = {"let", "pair", "dual", "divmul", "T", "Z"}
RESERVED_NAMES = KEYWORDS | {"x", "X"}

ARITY = {
    "eq": 2, "divides": 2, "gcd": 2, "xgcd": 2, "radmem": 2, "content": 1,
    "dpr": 4, "dprsets": 4,
}
QUERY_KINDS = set(ARITY) | {"dprn", "radsets", "empty", "nonempty", "include"}

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(<=|[-+*/^()\[\],;|&.=]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "end"
    text: str
    col: int


def tokenize(text: str, line: int = 1) -> List[Token]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
        kind = "num" if m.group(1) else "name" if m.group(2) else "op"
        out.append(Token(kind, m.group(m.lastindex), m.start(m.lastindex) + 1))
        pos = m.end()
    out.append(Token("end", "", len(text) + 1))
    return out


# -- syntax trees --------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str
    col: int


@dataclass(frozen=True)
class PolyX:
    pass


@dataclass(frozen=True)
class Mono:
    exponent: GroupElement


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class AtomSyntax:
    kind: str  # "T", "Z", "div", "ann", "dual", "divmul"
    args: Tuple


@dataclass(frozen=True)
class PairSyntax:
    phi: Tuple[Tuple[AtomSyntax, ...], ...]
    psi: Tuple[Tuple[AtomSyntax, ...], ...]


@dataclass(frozen=True)
class Let:
    name: str
    expr: object


@dataclass(frozen=True)
class Query:
    kind: str
    args: Tuple


# -- parser ----------------------------------------------------------------------

class Parser:
    def __init__(self, text: str, line: int = 1):
        self.line = line
        self.toks = tokenize(text, line)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg: str, tok: Optional[Token] = None):
        tok = tok or self.tok
        raise ParseError(msg, self.line, tok.col)

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind in ("op", "name") and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.tok.text or "end of line"
            self.error(f"expected {text!r}, found {found!r}")
        return self.advance()

    def expect_end(self):
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}")

    # statements
    def statement(self):
        t = self.tok
        if t.kind != "name":
            self.error("expected a statement keyword")
        if t.text == "let":
            self.advance()
            name = self.tok
            if name.kind != "name":
                self.error("expected a name")
            if name.text in RESERVED_NAMES or name.text in QUERY_KINDS:
                self.error(f"{name.text!r} is reserved")
            self.advance()
            self.expect("=")
            expr = self.expr()
            self.expect_end()
            return Let(name.text, expr)
        if t.text not in QUERY_KINDS:
            self.error(f"unknown statement {t.text!r}")
        self.advance()
        kind = t.text
        if kind in ARITY:
            args = tuple(self.expr() for _ in range(ARITY[kind]))
        elif kind == "dprn":
            self.expect("(")
            a = self.expr()
            self.expect(";")
            c = self.expr()
            self.expect(")")
            bs, ds = self.expr_list(), self.expr_list()
            if len(bs) != len(ds):
                self.error("dprn needs lists of equal length")
            args = (a, c, bs, ds)
        elif kind == "radsets":
            args = (self.expr(), self.expr_list())
        elif kind in ("empty", "nonempty"):
            args = (self.pair(),)
        else:
            lhs = self.pair()
            self.expect("<=")
            rhs = []
            while self.tok.kind != "end":
                rhs.append(self.pair())
            args = (lhs, tuple(rhs))
        self.expect_end()
        return Query(kind, args)

    def expr_list(self) -> Tuple:
        self.expect("[")
        items = [self.expr()]
        while self.at(","):
            self.advance()
            items.append(self.expr())
        self.expect("]")
        return tuple(items)

    # expressions
    def expr(self):
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in ("+", "-"):
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.tok.kind == "op" and self.tok.text in ("*", "/"):
            op = self.advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.at("-"):
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.primary()
        if self.at("^") and not isinstance(base, Mono):
            self.advance()
            if self.tok.kind != "num":
                self.error("expected a nonnegative integer exponent")
            return Pow(base, int(self.advance().text))
        return base

    def primary(self):
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Num(Fraction(int(t.text)))
        if self.at("("):
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if t.kind == "name":
            if t.text == "X":
                self.advance()
                self.expect("^")
                return Mono(self.group_literal())
            if t.text == "x":
                self.advance()
                return PolyX()
            if t.text in KEYWORDS:
                self.error(f"{t.text!r} cannot start an expression")
            self.advance()
            return Var(t.text, t.col)
        self.error(f"expected an expression, found {t.text or 'end of line'!r}")

    def signed_int(self) -> int:
        sign = 1
        if self.at("-"):
            self.advance()
            sign = -1
        if self.tok.kind != "num":
            self.error("expected an integer")
        return sign * int(self.advance().text)

    def group_literal(self) -> GroupElement:
        self.expect("[")
        prefix = []
        if not self.at(";"):
            prefix.append(self.signed_int())
            while self.at(","):
                self.advance()
                prefix.append(self.signed_int())
        self.expect(";")
        tail = self.signed_int()
        self.expect("]")
        return canon(prefix, tail)

    # pairs
    def pair(self) -> PairSyntax:
        self.expect("pair")
        self.expect("(")
        phi = [self.conjunction()]
        while self.at(",") or self.at("+"):
            self.advance()
            phi.append(self.conjunction())
        self.expect("/")
        psi = [self.sum()]
        while self.at(",") or self.at("&"):
            self.advance()
            psi.append(self.sum())
        self.expect(")")
        return PairSyntax(tuple(phi), tuple(psi))

    def conjunction(self):
        atoms = [self.atom()]
        while self.at("&"):
            self.advance()
            atoms.append(self.atom())
        return tuple(atoms)

    def sum(self):
        atoms = [self.atom()]
        while self.at("+"):
            self.advance()
            atoms.append(self.atom())
        return tuple(atoms)

    def atom(self) -> AtomSyntax:
        t = self.tok
        if t.kind == "name" and t.text in ("T", "Z"):
            self.advance()
            return AtomSyntax(t.text, ())
        if t.kind == "name" and t.text in ("dual", "divmul"):
            self.advance()
            self.expect("(")
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect(")")
            return AtomSyntax(t.text, (a, b))
        if t.kind == "name" and t.text == "x" and self.peek().text == ".":
            self.advance()
            self.advance()
            b = self.expr()
            self.expect("=")
            if self.tok.text != "0":
                self.error("expected 0")
            self.advance()
            return AtomSyntax("ann", (b,))
        a = self.expr()
        self.expect("|")
        if not self.at("x"):
            self.error("expected 'x' after '|'")
        self.advance()
        return AtomSyntax("div", (a,))


def parse_statement(text: str, line: int = 1):
    return Parser(text, line).statement()


def parse_expression(text: str, line: int = 1):
    p = Parser(text, line)
    node = p.expr()
    p.expect_end()
    return node


def parse_script(text: str) -> List[Tuple[int, str, object]]:
    """``(line number, source text, statement)`` for every non-blank, non-comment line."""
    out = []
    for n, raw in enumerate(text.splitlines(), start=1):
        src = raw.split("#", 1)[0].strip()
        if src:
            out.append((n, src, parse_statement(src, n)))
    return out
