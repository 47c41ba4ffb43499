"""Recursive-descent parser for user-defined test functions of one variable ``x``.

Grammar (``^`` and ``**`` are both power, right associative)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom (('^' | '**') unary)?
    atom   := NUMBER | 'x' | 'pi' | NAME '(' expr [',' expr] ')' | '(' expr ')'

Allowed function names: exp, ln, sin, cos, sqrt, pow. Numeric literals are
kept as strings until evaluation and parsed exactly at context precision.
"""

from __future__ import annotations

import re
from typing import Callable

from ..errors import ExpressionError
from ..mpreal import HighPrecisionReal, PrecisionContext, elementary

__all__ = ["compile_expression", "parse_expression"]

_TOKEN_RE = re.compile(
    r"""\s*(?:
        (?P<number>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)
      | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
      | (?P<op>\*\*|[-+*/^(),])
    )""",
    re.VERBOSE,
)

FUNCTIONS = {"exp": 1, "ln": 1, "sin": 1, "cos": 1, "sqrt": 1, "pow": 2}


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionError(f"unexpected character {text[pos:].lstrip()[:1]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, text, pos = self.take()
        if text != value:
            raise ExpressionError(f"expected {value!r}, found {text or 'end of input'!r}", pos)

    def parse(self):
        node = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ExpressionError(f"unexpected {text!r}", pos)
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            node = (op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            node = (op, node, self.unary())
        return node

    def unary(self):
        kind, text, _ = self.peek()
        if kind == "op" and text in ("+", "-"):
            self.take()
            operand = self.unary()
            return ("neg", operand) if text == "-" else operand
        return self.power()

    def power(self):
        base = self.atom()
        kind, text, _ = self.peek()
        if kind == "op" and text in ("^", "**"):
            self.take()
            return ("pow", base, self.unary())
        return base

    def atom(self):
        kind, text, pos = self.take()
        if kind == "number":
            return ("num", text)
        if kind == "name":
            if text == "x":
                return ("x",)
            if text == "pi":
                return ("pi",)
            if text not in FUNCTIONS:
                raise ExpressionError(f"unknown name {text!r}", pos)
            self.expect("(")
            args = [self.expr()]
            while self.peek()[1] == ",":
                self.take()
                args.append(self.expr())
            self.expect(")")
            if len(args) != FUNCTIONS[text]:
                raise ExpressionError(f"{text} takes {FUNCTIONS[text]} argument(s), got {len(args)}", pos)
            return ("call", text, *args)
        if text == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ExpressionError(f"unexpected {text or 'end of input'!r}", pos)


def parse_expression(text: str):
    """Parse ``text`` into a nested-tuple syntax tree."""
    if not text or not text.strip():
        raise ExpressionError("empty expression")
    return _Parser(text).parse()


def _compile(node, ctx):
    kind = node[0]
    if kind == "num":
        const = ctx.parse(node[1])
        return lambda x: const
    if kind == "x":
        return lambda x: x
    if kind == "pi":
        const = ctx.pi()
        return lambda x: const
    if kind == "neg":
        inner = _compile(node[1], ctx)
        return lambda x: -inner(x)
    if kind == "call":
        name = node[1]
        args = [_compile(a, ctx) for a in node[2:]]
        if len(args) == 1:
            (a,) = args
            return lambda x: elementary(name, a(x))
        a, b = args
        return lambda x: elementary("pow", a(x), b(x))
    if kind == "pow":
        base = _compile(node[1], ctx)
        exponent_node = node[2]
        if exponent_node[0] == "num" and re.fullmatch(r"\d+", exponent_node[1]):
            n = int(exponent_node[1])
            return lambda x: base(x) ** n
        exponent = _compile(exponent_node, ctx)
        return lambda x: elementary("pow", base(x), exponent(x))
    left = _compile(node[1], ctx)
    right = _compile(node[2], ctx)
    if kind == "+":
        return lambda x: left(x) + right(x)
    if kind == "-":
        return lambda x: left(x) - right(x)
    if kind == "*":
        return lambda x: left(x) * right(x)
    if kind == "/":
        return lambda x: left(x) / right(x)
    raise AssertionError(f"unhandled node {kind}")


def compile_expression(text: str, ctx: PrecisionContext) -> Callable[[HighPrecisionReal], HighPrecisionReal]:
    """Turn ``text`` into a callable evaluating at ``ctx``'s precision."""
    return _compile(parse_expression(text), ctx)
