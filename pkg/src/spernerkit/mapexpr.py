"""A tiny expression language for maps of the simplex, written coordinate by coordinate.

Grammar (LL(1), whitespace ignored)::

    program := expr ("," expr)*
    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := "-" unary | atom
    atom    := NUMBER | "x" DIGITS | FUNC "(" expr ("," expr)* ")" | "(" expr ")"

FUNC is one of min, max (two arguments) or abs (one argument).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence, Union

FUNCS = {"min": 2, "max": 2, "abs": 1}


class ExprError(ValueError):
    pass


class ParseError(ExprError):
    def __init__(self, position: int, message: str):
        super().__init__(f"offset {position}: {message}")
        self.position = position
        self.message = message


class ArityError(ExprError):
    pass


class UnknownVariableError(ExprError):
    def __init__(self, position: int, name: str):
        super().__init__(f"offset {position}: unknown variable {name}")
        self.position = position
        self.name = name


class EvalError(ExprError):
    def __init__(self, index: int, reason: str):
        super().__init__(f"coordinate {index}: {reason}")
        self.index = index
        self.reason = reason


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


Expr = Union[Num, Var, Neg, BinOp, Call]


@dataclass(frozen=True)
class MapProgram:
    n: int
    coords: tuple
    source: str = ""

    def __call__(self, x):
        return eval_map(self, x)


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[a-z]+\d*)
  | (?P<op>[-+*/(),])
""", re.VERBOSE)


def tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(pos, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, n: int):
        self.toks = tokenize(text)
        self.i = 0
        self.n = n

    @property
    def tok(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value: str):
        kind, text, pos = self.tok
        if text != value or kind != "op":
            raise ParseError(pos, f"expected {value!r}, found {text or 'end of input'!r}")
        self.take()

    def program(self) -> list:
        coords = [self.expr()]
        while self.tok[1] == ",":
            self.take()
            coords.append(self.expr())
        kind, text, pos = self.tok
        if kind != "end":
            raise ParseError(pos, f"unexpected {text!r}")
        return coords

    def expr(self):
        node = self.term()
        while self.tok[1] in ("+", "-") and self.tok[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.tok[1] in ("*", "/") and self.tok[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.tok[1] == "-" and self.tok[0] == "op":
            self.take()
            return Neg(self.unary())
        return self.atom()

    def atom(self):
        kind, text, pos = self.tok
        if kind == "num":
            self.take()
            return Num(float(text))
        if kind == "name":
            self.take()
            if text in FUNCS:
                self.expect("(")
                args = [self.expr()]
                while self.tok[1] == ",":
                    self.take()
                    args.append(self.expr())
                self.expect(")")
                if len(args) != FUNCS[text]:
                    raise ParseError(pos, f"{text} takes {FUNCS[text]} argument(s), got {len(args)}")
                return Call(text, tuple(args))
            m = re.fullmatch(r"x(\d+)", text)
            if m is None:
                raise ParseError(pos, f"unknown name {text!r}")
            idx = int(m.group(1))
            if idx > self.n:
                raise UnknownVariableError(pos, text)
            return Var(idx)
        if text == "(":
            self.take()
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(pos, f"unexpected {text or 'end of input'!r}")


def parse(text: str, n: int) -> MapProgram:
    coords = _Parser(text, n).program()
    if len(coords) != n + 1:
        raise ArityError(f"expected {n + 1} coordinates, got {len(coords)}")
    return MapProgram(n, tuple(coords), text)


def parse_expr(text: str, n: int) -> Expr:
    p = _Parser(text, n)
    node = p.expr()
    kind, tok, pos = p.tok
    if kind != "end":
        raise ParseError(pos, f"unexpected {tok!r}")
    return node


def _eval(node, x: Sequence[float]) -> float:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        return float(x[node.index])
    if isinstance(node, Neg):
        return -_eval(node.operand, x)
    if isinstance(node, BinOp):
        a, b = _eval(node.left, x), _eval(node.right, x)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if b == 0:
            raise ZeroDivisionError
        return a / b
    args = [_eval(a, x) for a in node.args]
    return {"min": min, "max": max, "abs": abs}[node.name](*args)


def eval_map(p: MapProgram, x: Sequence[float]) -> list[float]:
    if len(x) != p.n + 1:
        raise ValueError(f"expected {p.n + 1} coordinates, got {len(x)}")
    out = []
    for i, node in enumerate(p.coords):
        try:
            out.append(_eval(node, x))
        except ZeroDivisionError:
            raise EvalError(i, "division by zero") from None
    return out


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def to_source(node, parent: int = 0, right: bool = False) -> str:
    """Render with the fewest parentheses that reparse to the same tree."""
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return f"x{node.index}"
    if isinstance(node, Neg):
        return "-" + to_source(node.operand, 3)
    if isinstance(node, Call):
        return f"{node.name}({', '.join(to_source(a) for a in node.args)})"
    p = _PREC[node.op]
    text = f"{to_source(node.left, p)} {node.op} {to_source(node.right, p, True)}"
    if p < parent or (p == parent and right):
        return f"({text})"
    return text


def pretty(p: MapProgram) -> str:
    return ", ".join(to_source(c) for c in p.coords)
