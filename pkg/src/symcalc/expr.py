"""Expression language for the command line.

Grammar (precedence low to high):

    expr    := term (('+' | '-') term)*
    term    := pleth (('*' | '#') pleth)*
    pleth   := unary ('o' unary)*
    unary   := '-' unary | primary
    primary := number | atom | call | '(' expr ')'
    atom    := ('s'|'h'|'e'|'p'|'m'|'A'|'P'|'ts'|'th'|'tx') '[' ints ']'
    call    := name '(' expr (',' expr)* ')'
    number  := INT ('/' INT)?

'*' is the outer product, '#' the internal (Kronecker) product — stable
characters combine with '#' only.  'o' is outer plethysm.  Functions:
ihat(g, f), D(f, g), sp(f, g), shift(f, c), eval_n(x, n), charpoly(lam).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .alphabets import outer_plethysm, shift_alphabet
from .innerpleth import inner_plethysm
from .stable import (StableChar, angle, character_polynomial, dangle,
                     evaluate_at_n, stable_inner_plethysm, stable_kron,
                     tilde_h, tilde_s, tilde_x)
from .symfunc import (SymExpr, convert, foulkes_derivative, hall_scalar,
                      internal, multiply)
from .symfunc import elem, homog, mono, power, schur


class ParseError(Exception):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EvalError(Exception):
    pass


ATOMS = ("ts", "th", "tx", "s", "h", "e", "p", "m", "A", "P")
FUNCTIONS = ("ihat", "D", "sp", "shift", "eval_n", "charpoly")

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
                    r"|(?P<int>\d+)"
                    r"|(?P<sym>[\[\](),+\-*#/]))")


def tokenize(text: str):
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            break
        if m.group("name"):
            tokens.append(("name", m.group("name"), m.start("name")))
        elif m.group("int"):
            tokens.append(("int", m.group("int"), m.start("int")))
        else:
            tokens.append(("sym", m.group("sym"), m.start("sym")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.idx = 0

    def peek(self):
        return self.tokens[self.idx]

    def next(self):
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.next()
        if val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}",
                             pos)

    def parse(self):
        node = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {val!r}", pos)
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.next()[1]
            rhs = self.term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def term(self):
        node = self.pleth()
        while self.peek()[1] in ("*", "#"):
            op = self.next()[1]
            rhs = self.pleth()
            node = ("mul" if op == "*" else "inner", node, rhs)
        return node

    def pleth(self):
        node = self.unary()
        while self.peek()[1] == "o":
            self.next()
            rhs = self.unary()
            node = ("pleth", node, rhs)
        return node

    def unary(self):
        if self.peek()[1] == "-":
            self.next()
            return ("neg", self.unary())
        return self.primary()

    def primary(self):
        kind, val, pos = self.peek()
        if kind == "int":
            self.next()
            num = int(val)
            if self.peek()[1] == "/":
                self.next()
                k2, v2, p2 = self.next()
                if k2 != "int":
                    raise ParseError("expected an integer denominator", p2)
                return ("num", Fraction(num, int(v2)))
            return ("num", Fraction(num))
        if val == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        if kind == "name":
            if val in ATOMS:
                self.next()
                return ("atom", val, self.partition_literal())
            if val in FUNCTIONS:
                self.next()
                self.expect("(")
                args = [self.expr()]
                while self.peek()[1] == ",":
                    self.next()
                    args.append(self.expr())
                self.expect(")")
                return ("call", val, tuple(args))
            raise ParseError(f"unknown name {val!r}", pos)
        raise ParseError(f"expected an expression, found {val or 'end of input'!r}",
                         pos)

    def partition_literal(self) -> tuple:
        self.expect("[")
        parts = []
        if self.peek()[1] != "]":
            while True:
                kind, val, pos = self.next()
                if kind != "int":
                    raise ParseError("expected a partition part", pos)
                parts.append(int(val))
                if self.peek()[1] == ",":
                    self.next()
                    continue
                break
        self.expect("]")
        out = tuple(parts)
        if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
            raise ParseError("partition parts must be weakly decreasing",
                             self.peek()[2])
        if any(p <= 0 for p in out):
            raise ParseError("partition parts must be positive",
                             self.peek()[2])
        return out


def parse(text: str):
    return Parser(text).parse()


def render_ast(node) -> str:
    """Canonical text for an AST; parse(render_ast(x)) == x."""
    kind = node[0]
    if kind == "num":
        c = node[1]
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    if kind == "atom":
        return f"{node[1]}[{','.join(map(str, node[2]))}]"
    if kind == "neg":
        return f"-{_wrap(node[1], 3)}"
    if kind in ("add", "sub"):
        op = "+" if kind == "add" else "-"
        return f"{_wrap(node[1], 1)} {op} {_wrap(node[2], 2, right=True)}"
    if kind in ("mul", "inner"):
        op = "*" if kind == "mul" else "#"
        return f"{_wrap(node[1], 2)} {op} {_wrap(node[2], 3, right=True)}"
    if kind == "pleth":
        return f"{_wrap(node[1], 3)} o {_wrap(node[2], 4, right=True)}"
    if kind == "call":
        return f"{node[1]}({', '.join(render_ast(a) for a in node[2])})"
    raise ValueError(f"unknown node {kind!r}")


_LEVEL = {"add": 1, "sub": 1, "mul": 2, "inner": 2, "pleth": 3, "neg": 3,
          "num": 9, "atom": 9, "call": 9}


def _wrap(node, level: int, right: bool = False) -> str:
    text = render_ast(node)
    own = _LEVEL[node[0]]
    if own < level or (right and own == level and node[0] in
                       ("add", "sub", "mul", "inner", "pleth")):
        return f"({text})"
    return text


# ---------------------------------------------------------------------------
# evaluation

_ATOM_MAKERS = {
    "s": schur, "h": homog, "e": elem, "p": power, "m": mono,
    "A": angle, "P": dangle,
    "ts": lambda lam: tilde_s(tuple(lam)),
    "th": lambda lam: tilde_h(tuple(lam)),
    "tx": lambda lam: tilde_x(tuple(lam)),
}


def _as_symexpr(v, what: str) -> SymExpr:
    if isinstance(v, SymExpr):
        return v
    if isinstance(v, Fraction):
        return SymExpr("s", {(): v})
    raise EvalError(f"{what} requires a symmetric function")


def evaluate(node):
    """Evaluate an AST to a SymExpr, StableChar, CharPolynomial or scalar."""
    kind = node[0]
    if kind == "num":
        return node[1]
    if kind == "atom":
        return _ATOM_MAKERS[node[1]](node[2])
    if kind == "neg":
        return -evaluate(node[1])
    if kind in ("add", "sub"):
        a, b = evaluate(node[1]), evaluate(node[2])
        if isinstance(a, StableChar) != isinstance(b, StableChar):
            if isinstance(a, Fraction):
                a = a * angle([])
            elif isinstance(b, Fraction):
                b = b * angle([])
            else:
                raise EvalError("cannot mix stable characters with "
                                "symmetric functions in a sum")
        return a + b if kind == "add" else a - b
    if kind == "mul":
        a, b = evaluate(node[1]), evaluate(node[2])
        if isinstance(a, StableChar) and isinstance(b, StableChar):
            raise EvalError("use '#' for products of stable characters")
        if isinstance(a, StableChar) or isinstance(b, StableChar):
            sc, other = (a, b) if isinstance(a, StableChar) else (b, a)
            if isinstance(other, Fraction):
                return sc * other
            raise EvalError("stable characters only scale by numbers")
        if isinstance(a, SymExpr) and isinstance(b, SymExpr):
            return multiply(a, b)
        return a * b
    if kind == "inner":
        a, b = evaluate(node[1]), evaluate(node[2])
        if isinstance(a, StableChar) and isinstance(b, StableChar):
            return stable_kron(a, b)
        if isinstance(a, SymExpr) and isinstance(b, SymExpr):
            return internal(a, b)
        raise EvalError("'#' needs two symmetric functions or two "
                        "stable characters")
    if kind == "pleth":
        a = _as_symexpr(evaluate(node[1]), "plethysm")
        b = _as_symexpr(evaluate(node[2]), "plethysm")
        return outer_plethysm(a, b)
    if kind == "call":
        return _call(node[1], node[2])
    raise EvalError(f"unknown node {kind!r}")


def _arity(name, args, n):
    if len(args) != n:
        raise EvalError(f"{name} takes {n} arguments, got {len(args)}")


def _call(name: str, args):
    if name == "ihat":
        _arity(name, args, 2)
        g = _as_symexpr(evaluate(args[0]), "ihat")
        f = evaluate(args[1])
        if isinstance(f, StableChar):
            return stable_inner_plethysm(g, f)
        return inner_plethysm(g, _as_symexpr(f, "ihat"))
    if name == "D":
        _arity(name, args, 2)
        return foulkes_derivative(_as_symexpr(evaluate(args[0]), "D"),
                                  _as_symexpr(evaluate(args[1]), "D"))
    if name == "sp":
        _arity(name, args, 2)
        return hall_scalar(_as_symexpr(evaluate(args[0]), "sp"),
                           _as_symexpr(evaluate(args[1]), "sp"))
    if name == "shift":
        _arity(name, args, 2)
        c = evaluate(args[1])
        if not isinstance(c, Fraction) or c not in (1, -1):
            raise EvalError("shift direction must be 1 or -1")
        return shift_alphabet(_as_symexpr(evaluate(args[0]), "shift"), int(c))
    if name == "eval_n":
        _arity(name, args, 2)
        x = evaluate(args[0])
        n = evaluate(args[1])
        if not isinstance(x, StableChar):
            raise EvalError("eval_n requires a stable character")
        if not isinstance(n, Fraction) or n.denominator != 1 or n < 0:
            raise EvalError("eval_n requires a nonnegative integer")
        return evaluate_at_n(x, int(n))
    if name == "charpoly":
        _arity(name, args, 1)
        lam = args[0]
        if lam[0] != "atom" or lam[1] not in ("s", "A"):
            raise EvalError("charpoly takes a partition like charpoly(s[2,2])")
        return character_polynomial(lam[2])
    raise EvalError(f"unknown function {name!r}")
