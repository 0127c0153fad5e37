"""Expression parsing for the two symbol modes.

Weyl mode admits the symbols p and q and evaluates products
noncommutatively left to right; polynomial mode admits X and Y.  The
grammar is

    expr   := ('-')? term (('+' | '-') term)*
    factor := atom ('^' nat)?
    term   := factor ('*'? factor)*
    atom   := rational | symbol | '(' expr ')'

with juxtaposition meaning multiplication.  Exponents are capped by the
WEYL_MAX_DEGREE environment variable (default 64); so is the largest
exponent of any intermediate value, which turns runaway products into an
explicit resource error instead of a memory blowup.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .bipoly import BiPoly
from .errors import ParseError, ResourceLimitError
from .weyl import WeylElement

__all__ = ["Expr", "Num", "Sym", "Add", "Sub", "Mul", "Pow", "Neg",
           "parse", "evaluate", "parse_element", "weyl_max_degree"]

_MODE_SYMBOLS = {"weyl": ("p", "q"), "poly": ("X", "Y")}


def weyl_max_degree() -> int:
    raw = os.environ.get("WEYL_MAX_DEGREE", "64")
    try:
        cap = int(raw)
    except ValueError:
        raise ResourceLimitError(f"WEYL_MAX_DEGREE must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ResourceLimitError("WEYL_MAX_DEGREE must be positive")
    return cap


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


Expr = Union[Num, Sym, Add, Sub, Mul, Pow, Neg]


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    position: int


def _lex(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    at = 0
    n = len(text)
    while at < n:
        ch = text[at]
        if ch.isspace():
            at += 1
            continue
        if ch.isdigit():
            start = at
            while at < n and text[at].isdigit():
                at += 1
            if at < n and text[at] == "/":
                probe = at + 1
                while probe < n and text[probe].isdigit():
                    probe += 1
                if probe == at + 1:
                    raise ParseError("expected digits after '/'", at + 1)
                at = probe
            tokens.append(_Token("number", text[start:at], start))
            continue
        if ch.isalpha():
            tokens.append(_Token("symbol", ch, at))
            at += 1
            continue
        if ch in "+-*^()":
            tokens.append(_Token(ch, ch, at))
            at += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", at)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    """Recursive-descent parser over the lexed token stream."""

    def __init__(self, text: str, mode: str):
        if mode not in _MODE_SYMBOLS:
            raise ValueError(f"unknown mode {mode!r}")
        self.tokens = _lex(text)
        self.pos = 0
        self.mode = mode
        self.cap = weyl_max_degree()

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> Expr:
        node = self.expr()
        tail = self.peek()
        if tail.kind != "end":
            raise ParseError(f"unexpected {tail.text!r}", tail.position)
        return node

    def expr(self) -> Expr:
        if self.peek().kind == "-":
            self.take()
            node: Expr = Neg(self.term())
        else:
            node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.take()
            right = self.term()
            node = Add(node, right) if op.kind == "+" else Sub(node, right)
        return node

    def term(self) -> Expr:
        node = self.factor()
        while True:
            nxt = self.peek()
            if nxt.kind == "*":
                self.take()
                node = Mul(node, self.factor())
            elif nxt.kind in ("number", "symbol", "("):
                node = Mul(node, self.factor())
            else:
                return node

    def factor(self) -> Expr:
        node = self.atom()
        if self.peek().kind == "^":
            caret = self.take()
            exp = self.peek()
            if exp.kind != "number" or "/" in exp.text:
                raise ParseError("exponent must be a natural number",
                                 exp.position if exp.kind != "end" else caret.position)
            self.take()
            n = int(exp.text)
            if n > self.cap:
                raise ResourceLimitError(
                    f"exponent {n} exceeds WEYL_MAX_DEGREE={self.cap}")
            return Pow(node, n)
        return node

    def atom(self) -> Expr:
        tok = self.take()
        if tok.kind == "number":
            return Num(Fraction(tok.text))
        if tok.kind == "symbol":
            allowed = _MODE_SYMBOLS[self.mode]
            if tok.text not in allowed:
                other = "poly" if self.mode == "weyl" else "weyl"
                hint = ""
                if tok.text in _MODE_SYMBOLS[other]:
                    hint = f" (did you mean {other} mode?)"
                raise ParseError(
                    f"symbol {tok.text!r} is not available in {self.mode} mode; "
                    f"use {allowed[0]}, {allowed[1]}{hint}", tok.position)
            return Sym(tok.text)
        if tok.kind == "(":
            node = self.expr()
            closer = self.take()
            if closer.kind != ")":
                raise ParseError("expected ')'", closer.position)
            return node
        raise ParseError(f"unexpected {tok.text!r}" if tok.kind != "end"
                         else "unexpected end of input", tok.position)


def parse(text: str, mode: str) -> Expr:
    """Parse an expression in the given mode without evaluating it."""
    return _Parser(text, mode).parse()


def _check_cap(value, cap: int):
    exps = value.support()
    if exps:
        worst = max(max(i, j) for i, j in exps)
        if worst > cap:
            raise ResourceLimitError(
                f"intermediate exponent {worst} exceeds WEYL_MAX_DEGREE={cap}")
    return value


def evaluate(node: Expr, mode: str):
    """Evaluate a parsed tree to a WeylElement or BiPoly.

    Weyl-mode products multiply noncommutatively in source order.
    """
    cap = weyl_max_degree()
    if mode == "weyl":
        one = WeylElement.one()
        sym = {"p": WeylElement.gen_p(), "q": WeylElement.gen_q()}
        const = WeylElement.constant
    elif mode == "poly":
        one = BiPoly.one()
        sym = {"X": BiPoly.var_x(), "Y": BiPoly.var_y()}
        const = BiPoly.constant
    else:
        raise ValueError(f"unknown mode {mode!r}")

    def walk(n: Expr):
        if isinstance(n, Num):
            return const(n.value)
        if isinstance(n, Sym):
            return sym[n.name]
        if isinstance(n, Add):
            return _check_cap(walk(n.left) + walk(n.right), cap)
        if isinstance(n, Sub):
            return _check_cap(walk(n.left) - walk(n.right), cap)
        if isinstance(n, Mul):
            return _check_cap(walk(n.left) * walk(n.right), cap)
        if isinstance(n, Pow):
            return _check_cap(walk(n.base) ** n.exponent, cap)
        if isinstance(n, Neg):
            return -walk(n.operand)
        raise TypeError(f"not an expression node: {n!r}")

    return walk(node)


def parse_element(text: str, mode: str):
    """Parse and evaluate in one call."""
    return evaluate(parse(text, mode), mode)
