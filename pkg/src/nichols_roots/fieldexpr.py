"""Field-element expressions such as ``-1/3 * zeta(4)`` or ``zeta(6)^-2``.

Grammar (whitespace is ignored)::

    expr     := term (('*' | '/') term)*
    term     := factor ('^' int)?
    factor   := rational | 'zeta(' uint ')' | '(' expr ')' | '-' factor
    rational := uint ('/' uint)?

A slash directly between two unsigned integers is read as part of a rational
literal, so ``2/3`` is one literal while ``2/(3)`` is a quotient.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .cyclofield import FieldScalar, FieldSpec
from .errors import DomainError


class FieldExprError(DomainError):
    """Syntax or evaluation error; ``position`` is a character offset or None."""

    def __init__(self, message: str, position=None):
        self.position = position
        where = "" if position is None else f" at offset {position}"
        super().__init__(f"{message}{where}")


@dataclass(frozen=True)
class Rational:
    num: int
    den: int = 1


@dataclass(frozen=True)
class Zeta:
    order: int


@dataclass(frozen=True)
class Neg:
    arg: "FieldExpr"


@dataclass(frozen=True)
class Mul:
    left: "FieldExpr"
    right: "FieldExpr"


@dataclass(frozen=True)
class Div:
    left: "FieldExpr"
    right: "FieldExpr"


@dataclass(frozen=True)
class Pow:
    base: "FieldExpr"
    exp: int


FieldExpr = Union[Rational, Zeta, Neg, Mul, Div, Pow]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str):
        self._skip()
        if not self.text.startswith(token, self.pos):
            raise FieldExprError(f"expected {token!r}", self.pos)
        self.pos += len(token)

    def uint(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise FieldExprError("expected an integer", start)
        return int(self.text[start:self.pos])

    def signed_int(self) -> int:
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        return sign * self.uint()

    def expr(self) -> FieldExpr:
        node = self.term()
        while self.peek() in ("*", "/") and self.peek():
            op = self.peek()
            self.pos += 1
            right = self.term()
            node = Mul(node, right) if op == "*" else Div(node, right)
        return node

    def term(self) -> FieldExpr:
        node = self.factor()
        if self.peek() == "^":
            self.pos += 1
            node = Pow(node, self.signed_int())
        return node

    def factor(self) -> FieldExpr:
        ch = self.peek()
        start = self.pos
        if ch == "-":
            self.pos += 1
            return Neg(self.factor())
        if ch == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        if ch.isdigit():
            num = self.uint()
            save = self.pos
            if self.peek() == "/":
                self.pos += 1
                if self.peek().isdigit():
                    den_pos = self.pos
                    den = self.uint()
                    if den == 0:
                        raise FieldExprError("zero denominator", den_pos)
                    return Rational(num, den)
                self.pos = save
            return Rational(num)
        if self.text.startswith("zeta", self.pos):
            self.pos += 4
            self.expect("(")
            n_pos = self.pos
            n = self.uint()
            if n == 0:
                raise FieldExprError("zeta(0) is not a root of unity", n_pos)
            self.expect(")")
            return Zeta(n)
        raise FieldExprError(f"unexpected {ch!r}" if ch else "unexpected end of input", start)


def parse_field_expr(text: str) -> FieldExpr:
    """Parse ``text`` into an expression tree; raises FieldExprError with an offset."""
    p = _Parser(text)
    node = p.expr()
    if p.peek():
        raise FieldExprError(f"unexpected {p.peek()!r}", p.pos)
    return node


def zeta_orders(node: FieldExpr) -> set:
    if isinstance(node, Zeta):
        return {node.order}
    if isinstance(node, Rational):
        return set()
    if isinstance(node, (Neg,)):
        return zeta_orders(node.arg)
    if isinstance(node, Pow):
        return zeta_orders(node.base)
    return zeta_orders(node.left) | zeta_orders(node.right)


def required_order(*nodes: FieldExpr) -> int:
    """Smallest cyclotomic order whose field contains every zeta in the expressions."""
    order = 1
    for node in nodes:
        for n in zeta_orders(node):
            order = math.lcm(order, n)
    return order


def evaluate(node: FieldExpr, field: FieldSpec) -> FieldScalar:
    if isinstance(node, Rational):
        if node.den == 0:
            raise FieldExprError("zero denominator")
        return field(node.num) / field(node.den)
    if isinstance(node, Zeta):
        if field.order % node.order:
            raise FieldExprError(f"zeta({node.order}) does not lie in Q(zeta_{field.order})")
        return field.zeta(node.order)
    if isinstance(node, Neg):
        return -evaluate(node.arg, field)
    if isinstance(node, Pow):
        base = evaluate(node.base, field)
        if node.exp < 0 and base.is_zero():
            raise FieldExprError("negative power of zero")
        return base ** node.exp
    left, right = evaluate(node.left, field), evaluate(node.right, field)
    if isinstance(node, Mul):
        return left * right
    if right.is_zero():
        raise FieldExprError("division by zero")
    return left / right


def _is_atom(node) -> bool:
    return isinstance(node, Zeta) or (isinstance(node, Rational) and node.den == 1)


def render(node: FieldExpr) -> str:
    """Text that parses back to an equal tree."""
    if isinstance(node, Rational):
        return str(node.num) if node.den == 1 else f"{node.num}/{node.den}"
    if isinstance(node, Zeta):
        return f"zeta({node.order})"
    if isinstance(node, Neg):
        inner = node.arg
        plain = isinstance(inner, (Rational, Zeta, Neg))
        return "-" + (render(inner) if plain else f"({render(inner)})")
    if isinstance(node, Pow):
        base = render(node.base) if _is_atom(node.base) else f"({render(node.base)})"
        return f"{base}^{node.exp}"
    op = "*" if isinstance(node, Mul) else "/"
    right = node.right
    if isinstance(node, Mul):
        wrap = isinstance(right, (Mul, Div))
    else:
        wrap = not isinstance(right, Zeta)
    right_text = f"({render(right)})" if wrap else render(right)
    return f"{render(node.left)}{op}{right_text}"


def parse_scalar(text: str, field: FieldSpec = None) -> FieldScalar:
    """Parse and evaluate in ``field`` (default: the smallest field that works)."""
    node = parse_field_expr(text)
    return evaluate(node, field or FieldSpec(required_order(node)))


def root_of_unity_label(field: FieldSpec, j: int, negative: bool) -> str:
    """Label for +-zeta_N^j as used in sweep output, e.g. ``zeta(6)^2`` or ``-(zeta(6)^2)``."""
    n = field.order
    j %= n
    node: FieldExpr = Rational(1) if j == 0 or n == 1 else (Zeta(n) if j == 1 else Pow(Zeta(n), j))
    if negative:
        node = Neg(node)
    return render(node)
