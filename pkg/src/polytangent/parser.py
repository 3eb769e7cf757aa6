"""Recursive-descent parser for polynomial and rational-function expressions.

Grammar (loosest to tightest binding):

    expr   := term (("+"|"-") term)*
    term   := unary (("*"|"/") unary)*
    unary  := "-" unary | power
    power  := atom ("^" nonneg_int)?
    atom   := number | "x" | "(" expr ")"
    number := int | decimal

Whitespace between tokens is ignored.  Decimal literals convert exactly
(1.25 becomes 5/4).  Implicit multiplication like ``2x``, ``2(x+1)`` or
``(x-2)(x-3)`` is accepted by the lexer and normalized to ``*``.
Exponents must be literal non-negative integers, and the only variable
is ``x``.

Fractions such as ``1/2`` parse as ordinary division nodes; lowering
folds division by a constant into the coefficients, so ``1/2*x`` means
(1/2)*x by left associativity, matching the canonical rendering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomial import Polynomial, RationalFunction, X


class ParseError(Exception):
    """A syntax error, with the byte offset where it was detected."""

    def __init__(self, position: int, message: str):
        super().__init__(f"{message} (at offset {position})")
        self.position = position
        self.message = message


# Textual input is untrusted; without a bound, a tiny string like
# "9^999999999" would demand a billion-digit power.
MAX_EXPONENT = 1024


class LoweringError(Exception):
    """A well-formed expression that does not denote the requested kind of value."""


# -- AST ------------------------------------------------------------------


@dataclass(frozen=True)
class Number:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


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
class Div:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Number | Var | Neg | Add | Sub | Mul | Div | Pow


# -- lexer ------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "x", one of "+-*/^()", or "end"
    value: Fraction | None
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if i < n and text[i] == ".":
                if i + 1 < n and text[i + 1].isdigit():
                    i += 1
                    while i < n and text[i].isdigit():
                        i += 1
                else:
                    raise ParseError(i, "malformed decimal literal")
            tokens.append(Token("num", Fraction(text[start:i]), start))
            continue
        if ch == "x":
            tokens.append(Token("x", None, i))
            i += 1
            continue
        if ch in "+-*/^()":
            tokens.append(Token(ch, None, i))
            i += 1
            continue
        if ch.isalpha():
            raise ParseError(i, f"unknown symbol {ch!r}; the only variable is x")
        raise ParseError(i, f"unexpected character {ch!r}")
    tokens.append(Token("end", None, n))
    return _insert_implicit_multiplication(tokens)


def _insert_implicit_multiplication(tokens: list[Token]) -> list[Token]:
    out = [tokens[0]]
    for tok in tokens[1:]:
        prev = out[-1]
        if prev.kind in ("num", "x", ")") and tok.kind in ("x", "("):
            out.append(Token("*", None, tok.pos))
        out.append(tok)
    return out


# -- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self) -> Expr:
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            right = self.term()
            node = Add(node, right) if op.kind == "+" else Sub(node, right)
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.peek().kind in ("*", "/"):
            op = self.advance()
            right = self.unary()
            node = Mul(node, right) if op.kind == "*" else Div(node, right)
        return node

    def unary(self) -> Expr:
        if self.peek().kind == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        node = self.atom()
        if self.peek().kind == "^":
            self.advance()
            tok = self.peek()
            if tok.kind != "num" or tok.value.denominator != 1:
                raise ParseError(tok.pos, "exponent must be a non-negative integer literal")
            if tok.value > MAX_EXPONENT:
                raise ParseError(tok.pos, f"exponent exceeds the limit of {MAX_EXPONENT}")
            self.advance()
            node = Pow(node, int(tok.value))
        return node

    def atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            return Number(tok.value)
        if tok.kind == "x":
            self.advance()
            return Var()
        if tok.kind == "(":
            self.advance()
            inner = self.expr()
            closing = self.peek()
            if closing.kind != ")":
                raise ParseError(closing.pos, "expected ')'")
            self.advance()
            return inner
        if tok.kind == "end":
            raise ParseError(tok.pos, "unexpected end of input")
        raise ParseError(tok.pos, f"unexpected {_describe(tok)}")


def _describe(tok: Token) -> str:
    return "number" if tok.kind == "num" else f"token {tok.kind!r}"


def parse(text: str) -> Expr:
    """Parse an expression; raises ParseError with a byte offset on bad input."""
    parser = _Parser(text)
    node = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise ParseError(trailing.pos, f"unexpected {_describe(trailing)}")
    return node


# -- lowering ------------------------------------------------------------------


def lower_poly(e: Expr) -> Polynomial:
    """Evaluate the tree to an exact Polynomial.

    Division is allowed only by subexpressions that lower to a nonzero
    constant (the constant folds into the coefficients); anything with
    x in a denominator raises LoweringError and belongs to
    lower_ratfun.
    """
    if isinstance(e, Number):
        return Polynomial((e.value,))
    if isinstance(e, Var):
        return X
    if isinstance(e, Neg):
        return -lower_poly(e.operand)
    if isinstance(e, Add):
        return lower_poly(e.left) + lower_poly(e.right)
    if isinstance(e, Sub):
        return lower_poly(e.left) - lower_poly(e.right)
    if isinstance(e, Mul):
        return lower_poly(e.left) * lower_poly(e.right)
    if isinstance(e, Pow):
        return lower_poly(e.base) ** e.exponent
    if isinstance(e, Div):
        num = lower_poly(e.left)
        den = lower_poly(e.right)
        if not den:
            raise LoweringError("division by zero")
        if den.degree >= 1:
            raise LoweringError("x in a denominator: not a polynomial")
        return num * (Fraction(1) / den.coeffs[0])
    raise TypeError(f"not an expression node: {e!r}")


def lower_ratfun(e: Expr) -> RationalFunction:
    """Evaluate the tree to a canonical RationalFunction by field arithmetic."""
    if isinstance(e, Number):
        return RationalFunction(Polynomial((e.value,)))
    if isinstance(e, Var):
        return RationalFunction(X)
    if isinstance(e, Neg):
        return -lower_ratfun(e.operand)
    if isinstance(e, Add):
        return lower_ratfun(e.left) + lower_ratfun(e.right)
    if isinstance(e, Sub):
        return lower_ratfun(e.left) - lower_ratfun(e.right)
    if isinstance(e, Mul):
        return lower_ratfun(e.left) * lower_ratfun(e.right)
    if isinstance(e, Pow):
        return lower_ratfun(e.base) ** e.exponent
    if isinstance(e, Div):
        den = lower_ratfun(e.right)
        if not den:
            raise LoweringError("division by zero")
        return lower_ratfun(e.left) / den
    raise TypeError(f"not an expression node: {e!r}")


def render(value: Polynomial | RationalFunction) -> str:
    """Canonical text for a polynomial or rational function.

    Parsing the result back and lowering recovers the value exactly.
    """
    return str(value)
