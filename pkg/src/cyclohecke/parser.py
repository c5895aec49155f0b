"""Expressions in the generators ``x_i`` and ``s_i``.

Grammar (whitespace is ignored)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*'? factor)*
    factor := atom ('^' uint)?
    atom   := rational | 'x' uint | 's' uint | '(' expr ')'

Juxtaposition is multiplication, so ``2x1s1`` means ``2*x1*s1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "ParseError",
    "EvaluationError",
    "Num",
    "Gen",
    "Sum",
    "Product",
    "Power",
    "Neg",
    "parse",
    "evaluate",
]


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"syntax error at byte {offset}: {message}")
        self.offset = offset


class EvaluationError(ValueError):
    pass


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Gen:
    kind: str  # "x" or "s"
    index: int


@dataclass(frozen=True)
class Sum:
    terms: tuple  # ((sign, node), ...)


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int


@dataclass(frozen=True)
class Neg:
    operand: object


class _Parser:
    def __init__(self, source: str):
        self.src = source
        self.pos = 0

    def offset(self, pos=None) -> int:
        pos = self.pos if pos is None else pos
        return len(self.src[:pos].encode("utf-8"))

    def error(self, message, pos=None):
        raise ParseError(message, self.offset(pos))

    def skip(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def uint(self, what) -> int:
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            self.error(f"expected {what}")
        return int(self.src[start:self.pos])

    def parse(self):
        node = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return node

    def expr(self):
        terms = []
        sign = "+"
        if self.peek() == "-":
            self.pos += 1
            sign = "-"
        terms.append((sign, self.term()))
        while self.peek() in ("+", "-"):
            sign = self.src[self.pos]
            self.pos += 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == "+":
            return terms[0][1]
        if len(terms) == 1:
            return Neg(terms[0][1])
        return Sum(tuple(terms))

    def term(self):
        factors = [self.factor()]
        while True:
            c = self.peek()
            if c == "*":
                self.pos += 1
                factors.append(self.factor())
            elif c and (c in "xs(" or c.isdigit()):
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip()
            return Power(base, self.uint("exponent"))
        return base

    def atom(self):
        c = self.peek()
        if not c:
            self.error("unexpected end of input")
        if c == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return node
        if c in "xs":
            self.pos += 1
            return Gen(c, self.uint(f"index after '{c}'"))
        if c.isdigit():
            num = self.uint("integer")
            den = 1
            if self.peek() == "/":
                self.pos += 1
                self.skip()
                slash = self.pos
                den = self.uint("denominator")
                if den == 0:
                    self.error("zero denominator", slash)
            return Num(Fraction(num, den))
        self.error(f"unexpected {c!r}")


def parse(source: str):
    """Parse ``source`` into an expression tree; raises :class:`ParseError`."""
    return _Parser(source).parse()


def evaluate(node, algebra):
    """Evaluate an expression tree in a Hecke or graded algebra."""
    if isinstance(node, Num):
        return algebra.scalar(node.value)
    if isinstance(node, Gen):
        bound = algebra.d if node.kind == "x" else algebra.d - 1
        if not 1 <= node.index <= bound:
            raise EvaluationError(f"generator index out of range: {node.kind}{node.index}")
        return algebra.x(node.index) if node.kind == "x" else algebra.s(node.index)
    if isinstance(node, Neg):
        return -evaluate(node.operand, algebra)
    if isinstance(node, Sum):
        out = algebra.zero()
        for sign, t in node.terms:
            v = evaluate(t, algebra)
            out = out - v if sign == "-" else out + v
        return out
    if isinstance(node, Product):
        out = evaluate(node.factors[0], algebra)
        for f in node.factors[1:]:
            out = out * evaluate(f, algebra)
        return out
    if isinstance(node, Power):
        return evaluate(node.base, algebra) ** node.exponent
    raise TypeError(f"unknown node {node!r}")
