"""Recursive descent parser for polynomial and rational-function text.

Grammar (whitespace and newlines ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | '+' unary | power
    power  := atom ('^' INT)?
    atom   := INT | VAR | '(' expr ')'

VAR is one of x, y, t, X, Y, Z, z.  z is the generator of the coefficient
field.  '^' binds tighter than unary minus, so -x^2 = -(x^2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .arith import NumberField, RationalFunctionField
from .mpoly import MPoly
from .poly import UniPoly

VARIABLES = frozenset("xytXYZz")


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{msg} at line {line}, column {col}")
        self.line = line
        self.col = col


# -- AST ----------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int


Node = Union[Num, Var, Neg, BinOp, Pow]


# -- tokenizer ----------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str  # "int", "var", "op", "eof"
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    toks = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            name = text[i:j]
            if name not in VARIABLES:
                raise ParseError(f"unknown variable {name!r}", line, col)
            toks.append(Token("var", name, line, col))
            col += j - i
            i = j
            continue
        if ch in "+-*/^()":
            toks.append(Token("op", ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    toks.append(Token("eof", "", line, col))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.pos = 0

    @property
    def cur(self) -> Token:
        return self.toks[self.pos]

    def take(self) -> Token:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.cur
        if tok.kind != "op" or tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}",
                             tok.line, tok.col)
        return self.take()

    def at(self, *ops: str) -> bool:
        return self.cur.kind == "op" and self.cur.text in ops

    def parse(self) -> Node:
        if self.cur.kind == "eof":
            raise ParseError("empty expression", self.cur.line, self.cur.col)
        node = self.expr()
        if self.cur.kind != "eof":
            raise ParseError(f"unexpected {self.cur.text!r}", self.cur.line, self.cur.col)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.at("+", "-"):
            op = self.take().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.at("*", "/"):
            op = self.take().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Node:
        if self.at("-"):
            self.take()
            return Neg(self.unary())
        if self.at("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.at("^"):
            self.take()
            tok = self.cur
            if tok.kind == "op" and tok.text == "-":
                raise ParseError("negative exponent", tok.line, tok.col)
            if tok.kind == "op" and tok.text == "(":
                self.take()
                if self.at("-"):
                    raise ParseError("negative exponent", self.cur.line, self.cur.col)
                exp = self._int()
                self.expect(")")
            else:
                exp = self._int()
            return Pow(base, exp)
        return base

    def _int(self) -> int:
        tok = self.cur
        if tok.kind != "int":
            raise ParseError("exponent must be a nonnegative integer", tok.line, tok.col)
        self.take()
        return int(tok.text)

    def atom(self) -> Node:
        tok = self.cur
        if tok.kind == "int":
            self.take()
            return Num(int(tok.text))
        if tok.kind == "var":
            self.take()
            return Var(tok.text)
        if self.at("("):
            self.take()
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.line, tok.col)


def parse_expr(text: str) -> Node:
    return _Parser(text).parse()


def variables(node: Node) -> set[str]:
    if isinstance(node, Var):
        return {node.name}
    if isinstance(node, Num):
        return set()
    if isinstance(node, Neg):
        return variables(node.arg)
    if isinstance(node, Pow):
        return variables(node.base)
    return variables(node.left) | variables(node.right)


# -- lowering -----------------------------------------------------------------

def evaluate(node: Node, env: dict, const: Callable, divide: Callable):
    """Fold the AST with env[name] for variables and const(int) for literals."""
    if isinstance(node, Num):
        return const(node.value)
    if isinstance(node, Var):
        if node.name not in env:
            raise ValueError(f"variable {node.name!r} is not allowed here")
        return env[node.name]
    if isinstance(node, Neg):
        return -evaluate(node.arg, env, const, divide)
    if isinstance(node, Pow):
        return evaluate(node.base, env, const, divide) ** node.exp
    a = evaluate(node.left, env, const, divide)
    b = evaluate(node.right, env, const, divide)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    if node.op == "*":
        return a * b
    return divide(a, b)


def _mpoly_divide(a: MPoly, b: MPoly) -> MPoly:
    if not b.is_constant() or not b:
        raise ValueError("polynomial text may only divide by nonzero constants")
    return a.scale(b.base.one / b.constant_value())


def to_constant(text: str | Node, nf: NumberField):
    """Element of k' from text in z and rationals."""
    node = parse_expr(text) if isinstance(text, str) else text

    def div(a, b):
        if not b:
            raise ZeroDivisionError("division by zero in constant")
        return a / b

    return evaluate(node, {"z": nf.gen}, nf, div)


def to_mpoly(text: str | Node, names: tuple[str, ...], nf: NumberField) -> MPoly:
    """Polynomial in the given variables (plus z) with coefficients in k'."""
    node = parse_expr(text) if isinstance(text, str) else text
    n = len(names)
    env = dict(zip(names, MPoly.gens(n, nf)))
    env["z"] = MPoly.constant(nf.gen, n, nf)
    return evaluate(node, env, lambda v: MPoly.constant(nf(v), n, nf), _mpoly_divide)


def to_ratfunc(text: str | Node, K: RationalFunctionField):
    node = parse_expr(text) if isinstance(text, str) else text
    env = {K.var: K.t, "z": K(K.nf.gen)}

    def div(a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b

    return evaluate(node, env, K, div)


def to_unipoly(text: str | Node, K: RationalFunctionField, var: str = "X") -> UniPoly:
    """Polynomial in var over K = k'(t); x is accepted as an alias of X."""
    node = parse_expr(text) if isinstance(text, str) else text
    one = UniPoly((K.one,), K)
    gen = UniPoly((K.zero, K.one), K)
    env = {var: gen, K.var: one * K.t, "z": one * K(K.nf.gen)}
    if var == "X":
        env.setdefault("x", gen)

    def div(a, b):
        if not isinstance(b, UniPoly) or b.degree > 0 or not b:
            raise ValueError("can only divide by nonzero elements of K")
        return a * b.coeff(0).inverse()

    return evaluate(node, env, lambda v: one * K(v), div)


def parse_poly(text: str, names: tuple[str, ...] = ("x", "y"), nf: NumberField | None = None) -> MPoly:
    from .arith import make_cyclotomic

    return to_mpoly(text, names, nf or make_cyclotomic(1))


def parse_point(text: str, nf: NumberField) -> tuple:
    """'(a : b : c)' with constant entries."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"projective point must look like (a : b : c), got {text!r}")
    parts = s[1:-1].split(":")
    if len(parts) != 3:
        raise ValueError("projective point needs three coordinates")
    pt = tuple(to_constant(p, nf) for p in parts)
    if not any(pt):
        raise ValueError("(0 : 0 : 0) is not a point")
    return pt


def parse_list(text: str) -> list[str]:
    """'[a, b, c]' or '(a, b, c)' split at top-level commas."""
    s = text.strip()
    if s[:1] in "[(" and s[-1:] in "])":
        s = s[1:-1]
    out, depth, cur = [], 0, []
    for ch in s:
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur.append(ch)
    if "".join(cur).strip():
        out.append("".join(cur).strip())
    return out
