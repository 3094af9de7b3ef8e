"""
Expressions over index combinations.

Grammar, loosest binding first::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "·") unary)*
    unary  := "-" unary | atom
    atom   := INT ["/" INT] | "[" [INT ("," INT)*] "]" | "(" expr ")"

``*`` scales when either side is a bare rational and is the stuffle product
when both sides are combinations. A bare rational evaluates to that multiple
of the empty index.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .algebra import Combination, Index, stuffle


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Rational:
    value: Fraction


@dataclass(frozen=True)
class IndexLiteral:
    index: Index


@dataclass(frozen=True)
class Neg:
    operand: "Expression"


@dataclass(frozen=True)
class BinOp:
    op: str  # "+", "-", "*"
    left: "Expression"
    right: "Expression"


Expression = Union[Rational, IndexLiteral, Neg, BinOp]

_TOKEN = re.compile(r"\s*(?:(\d+)|(\S))")


def tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            ch = m.group(2)
            if ch not in "+-*·/[](),":
                raise ParseError(f"unexpected character {ch!r}", m.start(2))
            tokens.append(("op", "*" if ch == "·" else ch, m.start(2)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, pos = self.take()
        if v != value or kind != "op":
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", pos)

    def parse(self) -> Expression:
        node = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {v!r}", pos)
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            node = BinOp("*", node, self.unary())
        return node

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return Neg(self.unary())
        return self.atom()

    def atom(self):
        kind, v, pos = self.take()
        if kind == "int":
            num = int(v)
            if self.peek()[:2] == ("op", "/"):
                self.take()
                kind, d, dpos = self.take()
                if kind != "int":
                    raise ParseError("expected denominator", dpos)
                if int(d) == 0:
                    raise ParseError("zero denominator", dpos)
                return Rational(Fraction(num, int(d)))
            return Rational(Fraction(num))
        if (kind, v) == ("op", "["):
            return IndexLiteral(self.index_body())
        if (kind, v) == ("op", "("):
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {v or 'end of input'!r}", pos)

    def index_body(self) -> Index:
        parts = []
        if self.peek()[:2] == ("op", "]"):
            self.take()
            return ()
        while True:
            kind, v, pos = self.take()
            if kind != "int":
                raise ParseError(f"expected index entry, found {v or 'end of input'!r}", pos)
            if int(v) < 1:
                raise ParseError(f"index entry {v} is below 1", pos)
            parts.append(int(v))
            kind, v, pos = self.take()
            if (kind, v) == ("op", "]"):
                return tuple(parts)
            if (kind, v) != ("op", ","):
                raise ParseError(f"expected ',' or ']', found {v or 'end of input'!r}", pos)


def parse_expression(text: str) -> Expression:
    return _Parser(text).parse()


def _as_combination(x) -> Combination:
    if isinstance(x, Combination):
        return x
    return Combination.one().scale(x)


def _eval(node):
    if isinstance(node, Rational):
        return node.value
    if isinstance(node, IndexLiteral):
        return Combination.from_index(node.index)
    if isinstance(node, Neg):
        return -_eval(node.operand)
    left, right = _eval(node.left), _eval(node.right)
    if node.op == "*":
        if isinstance(left, Fraction) and isinstance(right, Fraction):
            return left * right
        if isinstance(left, Fraction):
            return right.scale(left)
        if isinstance(right, Fraction):
            return left.scale(right)
        return stuffle(left, right)
    left, right = _as_combination(left), _as_combination(right)
    return left + right if node.op == "+" else left - right


def evaluate(node: Expression) -> Combination:
    return _as_combination(_eval(node))


def evaluate_text(text: str) -> Combination:
    return evaluate(parse_expression(text))
