"""Expression language for rational functions in x and y.

Grammar (whitespace is ignored, no implicit multiplication)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' exponent)?
    atom   := INT | 'x' | 'y' | '(' expr ')'
    exponent := INT | '(' INT ')'
"""

from dataclasses import dataclass

from .poly import BPoly
from .ratfunc import RatFunc


class ParseError(ValueError):
    def __init__(self, offset, message):
        super().__init__(f"at offset {offset}: {message}")
        self.offset = offset
        self.message = message


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
        elif ch in "xy":
            toks.append(("var", ch, i))
            i += 1
        elif ch in "+-*/^()":
            toks.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(i, f"unexpected character {ch!r}")
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind, what):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(tok[2], f"expected {what}")
        return self.take()

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            base = Pow(base, self.exponent())
            if self.peek()[0] == "^":
                raise ParseError(self.peek()[2],
                                 "chained exponents need parentheses")
        return base

    def exponent(self):
        tok = self.peek()
        if tok[0] == "int":
            return int(self.take()[1])
        if tok[0] == "(":
            self.take()
            inner = self.peek()
            if inner[0] != "int":
                raise ParseError(inner[2], "exponent must be a nonnegative integer")
            value = int(self.take()[1])
            self.expect(")", "')'")
            return value
        raise ParseError(tok[2], "exponent must be a nonnegative integer")

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return Num(int(tok[1]))
        if tok[0] == "var":
            self.take()
            return Var(tok[1])
        if tok[0] == "(":
            self.take()
            node = self.expr()
            self.expect(")", "')'")
            return node
        raise ParseError(tok[2], "expected a number, variable or '('")


def parse(text):
    """Parse ``text`` into an expression tree."""
    p = _Parser(text)
    node = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError(tok[2], "expected an operator or end of input")
    return node


def lower(node):
    """Evaluate an expression tree to a canonical ``RatFunc``."""
    if isinstance(node, Num):
        return RatFunc(node.value)
    if isinstance(node, Var):
        return RatFunc(BPoly.x() if node.name == "x" else BPoly.y())
    if isinstance(node, Neg):
        return -lower(node.arg)
    if isinstance(node, Pow):
        return lower(node.base) ** node.exp
    left, right = lower(node.left), lower(node.right)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if right.is_zero():
        raise ZeroDivisionError("division by zero")
    return left / right


def parse_ratfunc(text):
    return lower(parse(text))
