"""
Parser and printer for polynomial expressions in the variable ``u``.

Grammar (whitespace is insignificant between tokens)::

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ['^' uint]
    base     := rational | 'u' | '(' expr ')'
    rational := uint ['/' uint]

``^`` binds tighter than the leading unary minus, which binds tighter than ``*`` and the
binary ``+``/``-``. ``^`` is non-associative, towers need parentheses. The parser is a
plain recursive descent parser over a regex tokenizer; errors are raised as
:class:`~zetakit.shared_types.PolySyntaxError` with a 1-based column.

Example:
    >>> parse_polynomial("u^2 + 3*u - 1/2").coefficients
    (Fraction(-1, 2), Fraction(3, 1), Fraction(1, 1))
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Union

from zetakit.exactnum import RationalPolynomial
from zetakit.shared_types import PolySyntaxError

# Global module logger
logger = logging.getLogger(__name__)


class Token(NamedTuple):
    kind: str
    text: str
    column: int


END = "end of input"
NUMBER = "number"
_OPERATORS = "+-*/^()u"
_TOKEN_RE = re.compile(r"\s*(?:(?P<number>\d+)|(?P<op>\S))")
_BASE_START = ("(", NUMBER, "u")


def tokenize(src: str) -> List[Token]:
    """
    Splits ``src`` into tokens. The list always ends with an end-of-input token whose
    column is ``len(src) + 1``.
    """
    tokens: List[Token] = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            break
        if m.group("number") is not None:
            tokens.append(Token(NUMBER, m.group("number"), m.start("number") + 1))
        else:
            op = m.group("op")
            if op not in _OPERATORS:
                raise PolySyntaxError(m.start("op") + 1, tuple(_OPERATORS) + (NUMBER,), repr(op))
            tokens.append(Token(op, op, m.start("op") + 1))
        pos = m.end()
    tokens.append(Token(END, "", len(src) + 1))
    return tokens


@dataclass(frozen=True)
class Literal:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: Node


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Node
    right: Node


@dataclass(frozen=True)
class Pow:
    base: Node
    exponent: int


@dataclass(frozen=True)
class Group:
    inner: Node


Node = Union[Literal, Var, Neg, BinOp, Pow, Group]
"""A node of the parsed expression tree."""


class _Parser:
    def __init__(self, src: str):
        self._tokens = tokenize(src)
        self._pos = 0

    @property
    def _current(self) -> Token:
        return self._tokens[self._pos]

    def _advance(self) -> Token:
        token = self._tokens[self._pos]
        self._pos += 1
        return token

    def _fail(self, *expected: str) -> PolySyntaxError:
        token = self._current
        found = END if token.kind == END else repr(token.text)
        return PolySyntaxError(token.column, expected, found)

    def _expect(self, kind: str) -> Token:
        if self._current.kind != kind:
            raise self._fail(kind)
        return self._advance()

    def parse(self) -> Node:
        node = self._expr()
        if self._current.kind != END:
            raise self._fail(END)
        return node

    def _expr(self) -> Node:
        if self._current.kind == "-":
            self._advance()
            node: Node = Neg(self._term())
        else:
            node = self._term()
        while self._current.kind in ("+", "-"):
            op = self._advance().kind
            node = BinOp(op, node, self._term())
        return node

    def _term(self) -> Node:
        node = self._factor()
        while self._current.kind == "*":
            self._advance()
            node = BinOp("*", node, self._factor())
        return node

    def _factor(self) -> Node:
        node = self._base()
        if self._current.kind == "^":
            self._advance()
            exponent = int(self._expect(NUMBER).text)
            node = Pow(node, exponent)
        return node

    def _base(self) -> Node:
        token = self._current
        if token.kind == NUMBER:
            return Literal(self._rational())
        if token.kind == "u":
            self._advance()
            return Var()
        if token.kind == "(":
            self._advance()
            inner = self._expr()
            self._expect(")")
            return Group(inner)
        raise self._fail(*_BASE_START)

    def _rational(self) -> Fraction:
        numerator = int(self._advance().text)
        if self._current.kind != "/":
            return Fraction(numerator)
        self._advance()
        if self._current.kind == NUMBER and int(self._current.text) == 0:
            raise self._fail("nonzero number")
        return Fraction(numerator, int(self._expect(NUMBER).text))


def parse_poly(src: str) -> Node:
    """
    Parses ``src`` into an expression tree.

    Raises:
        PolySyntaxError: With the 1-based column and the expected token names.

    Example:
        >>> parse_poly("u^^2")
        Traceback (most recent call last):
        ...
        zetakit.shared_types.PolySyntaxError: Error 15: Syntax error in polynomial expression - column 3: expected number, found '^'
    """
    return _Parser(src).parse()


def lower(node: Node) -> RationalPolynomial:
    """Lowers an expression tree to its polynomial."""
    if isinstance(node, Literal):
        return RationalPolynomial.constant(node.value)
    if isinstance(node, Var):
        return RationalPolynomial.x()
    if isinstance(node, Neg):
        return -lower(node.operand)
    if isinstance(node, Group):
        return lower(node.inner)
    if isinstance(node, Pow):
        return lower(node.base) ** node.exponent
    left, right = lower(node.left), lower(node.right)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    return left * right


def parse_polynomial(src: str) -> RationalPolynomial:
    """Parses and lowers ``src`` in one step."""
    poly = lower(parse_poly(src))
    logger.debug("parsed %r as %r", src, poly)
    return poly


def format_poly(p: RationalPolynomial) -> str:
    """
    Prints a polynomial in the parser grammar, highest power first.

    Example:
        >>> format_poly(RationalPolynomial([Fraction(1, 2), -1, Fraction(3, 2)]))
        '3/2*u^2 - u + 1/2'
    """
    if p.is_zero:
        return "0"
    parts: List[str] = []
    for power, coeff in sorted(p, reverse=True):
        magnitude = abs(coeff)
        if power == 0:
            body = str(magnitude)
        else:
            var = "u" if power == 1 else f"u^{power}"
            body = var if magnitude == 1 else f"{magnitude}*{var}"
        if not parts:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f"{'-' if coeff < 0 else '+'} {body}")
    return " ".join(parts)
