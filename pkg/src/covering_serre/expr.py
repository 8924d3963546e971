"""Small expression language over Z^pi[q, q^-1].

Grammar::

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | power
    power   := atom ('^' '-'? INT)?
    atom    := INT | 'q' | 'pi' | '(' expr ')' | '[' expr ']' '!'?
             | NAME '(' expr (',' expr)* ')'

Functions: ``qbinom(m,n)``, ``q2binom(m,n)``, ``poch(a,x,n)``, ``bar(e)``.
"""
import re
from dataclasses import dataclass

from .arith import (PI, Q, QPiLaurent, bar_ring, pochhammer, q2_binom,
                    qpi_binom, qpi_factorial, qpi_int)


class ExprError(ValueError):
    """Syntax, arity or type error.  ``pos`` is a 0-based column or None."""

    def __init__(self, message, pos=None):
        self.pos = pos
        super().__init__(message if pos is None else f"{message} at column {pos + 1}")


@dataclass(frozen=True)
class Num:
    value: int
    pos: int = 0


@dataclass(frozen=True)
class Sym:
    name: str  # "q" or "pi"
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    arg: object
    pos: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int = 0


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int
    pos: int = 0


@dataclass(frozen=True)
class QInt:
    arg: object
    factorial: bool = False
    pos: int = 0


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    pos: int = 0


ARITY = {"qbinom": 2, "q2binom": 2, "poch": 3, "bar": 1}

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2):
            toks.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()[]!,":
                raise ExprError(f"unexpected character {ch!r}", start)
            toks.append(("op", ch, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, pos = self.take()
        if kind != "op" or v != value:
            shown = "end of input" if kind == "end" else repr(v)
            raise ExprError(f"expected {value!r}, found {shown}", pos)

    def is_op(self, value):
        kind, v, _ = self.peek()
        return kind == "op" and v == value

    def expr(self):
        node = self.term()
        while self.is_op("+") or self.is_op("-"):
            _, op, pos = self.take()
            node = BinOp(op, node, self.term(), pos)
        return node

    def term(self):
        node = self.unary()
        while self.is_op("*"):
            _, _, pos = self.take()
            node = BinOp("*", node, self.unary(), pos)
        return node

    def unary(self):
        if self.is_op("-"):
            _, _, pos = self.take()
            return Neg(self.unary(), pos)
        return self.power()

    def power(self):
        node = self.atom()
        if self.is_op("^"):
            _, _, pos = self.take()
            sign = 1
            if self.is_op("-"):
                self.take()
                sign = -1
            kind, v, p = self.take()
            if kind != "int":
                raise ExprError("exponent must be an integer literal", p)
            node = Pow(node, sign * v, pos)
        return node

    def atom(self):
        kind, v, pos = self.take()
        if kind == "int":
            return Num(v, pos)
        if kind == "name":
            if v in ("q", "pi"):
                return Sym(v, pos)
            if v not in ARITY:
                raise ExprError(f"unknown name {v!r}", pos)
            self.expect("(")
            args = [self.expr()]
            while self.is_op(","):
                self.take()
                args.append(self.expr())
            self.expect(")")
            if len(args) != ARITY[v]:
                raise ExprError(f"{v} takes {ARITY[v]} argument(s), got {len(args)}", pos)
            return Call(v, tuple(args), pos)
        if kind == "op" and v == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "op" and v == "[":
            inner = self.expr()
            self.expect("]")
            fact = False
            if self.is_op("!"):
                self.take()
                fact = True
            return QInt(inner, fact, pos)
        shown = "end of input" if kind == "end" else repr(v)
        raise ExprError(f"unexpected {shown}", pos)


def parse_expr(text):
    p = _Parser(text)
    node = p.expr()
    kind, v, pos = p.peek()
    if kind != "end":
        raise ExprError(f"unexpected trailing {v!r}", pos)
    return node


def _as_int(node):
    val = eval_expr(node)
    if val.is_zero():
        return 0
    terms = val.terms
    if len(terms) == 1 and 0 in terms and terms[0][1] == 0:
        return terms[0][0]
    raise ExprError("integer argument required", getattr(node, "pos", None))


def eval_expr(node):
    """Evaluate an AST (or source text) to a QPiLaurent."""
    if isinstance(node, str):
        node = parse_expr(node)
    if isinstance(node, Num):
        return QPiLaurent(node.value)
    if isinstance(node, Sym):
        return Q if node.name == "q" else PI
    if isinstance(node, Neg):
        return -eval_expr(node.arg)
    if isinstance(node, BinOp):
        a, b = eval_expr(node.left), eval_expr(node.right)
        return a + b if node.op == "+" else a - b if node.op == "-" else a * b
    if isinstance(node, Pow):
        base = eval_expr(node.base)
        if node.exp < 0 and not base.is_unit_monomial():
            raise ExprError("negative power of a non-unit", node.pos)
        return base ** node.exp
    if isinstance(node, QInt):
        n = _as_int(node.arg)
        if node.factorial:
            if n < 0:
                raise ExprError("factorial of a negative integer", node.pos)
            return qpi_factorial(n)
        return qpi_int(n)
    if isinstance(node, Call):
        if node.name == "bar":
            return bar_ring(eval_expr(node.args[0]))
        if node.name == "poch":
            n = _as_int(node.args[2])
            if n < 0:
                raise ExprError("poch needs n >= 0", node.pos)
            return pochhammer(eval_expr(node.args[0]), eval_expr(node.args[1]), n)
        m, n = _as_int(node.args[0]), _as_int(node.args[1])
        if n < 0:
            raise ExprError(f"{node.name} needs a nonnegative lower index", node.pos)
        return qpi_binom(m, n) if node.name == "qbinom" else q2_binom(m, n)
    raise TypeError(f"not an expression node: {node!r}")
