"""A tiny expression language for catalog data.

Catalog rows are parameterized families; basis coefficients, conjugator
recipes and class parameters are stored as strings in one variable ``a``
(e.g. ``"-2*(a+1)/(a+3)^2"``) so the catalog is exportable/importable as JSON
and still evaluates exactly.  Grammar:

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := ['-'] atom ['^' integer]
    atom   := rational | name | '(' expr ')'

Values are exact rationals.
"""

from __future__ import annotations

from .rational import Q

__all__ = ["eval_expr"]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def parse(self, env):
        v = self.expr(env)
        if self.peek():
            raise ValueError(f"trailing input in expression: {self.text!r}")
        return v

    def expr(self, env):
        v = self.term(env)
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term(env)
            v = v + rhs if op == "+" else v - rhs
        return v

    def term(self, env):
        v = self.factor(env)
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.factor(env)
            v = v * rhs if op == "*" else v / rhs
        return v

    def factor(self, env):
        neg = False
        while self.peek() == "-":
            self.take()
            neg = not neg
        v = self.atom(env)
        if self.peek() == "^":
            self.take()
            e = self.integer()
            v = v**e
        return -v if neg else v

    def atom(self, env):
        ch = self.peek()
        if ch == "(":
            self.take()
            v = self.expr(env)
            if self.take() != ")":
                raise ValueError(f"unbalanced parentheses in {self.text!r}")
            return v
        if ch.isdigit():
            return Q(self.integer())
        if ch.isalpha() or ch == "_":
            name = self.name()
            if name not in env:
                raise ValueError(f"unknown name {name!r} in {self.text!r}")
            return Q(env[name])
        raise ValueError(f"unexpected character {ch!r} in {self.text!r}")

    def integer(self) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ValueError(f"expected integer in {self.text!r}")
        return int(self.text[start:self.pos])

    def name(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos]


def eval_expr(text: str, env: dict | None = None):
    """Evaluate an expression string to an exact rational."""
    return _Parser(str(text)).parse(env or {})
