"""Text forms of scalars and elements, and the expression parser.

Grammar (juxtaposition and ``*`` both multiply)::

    expr   := ["-"] term {("+" | "-") term}
    term   := factor {["*"] factor}
    factor := atom ["^" ["-"] INT]
    atom   := NUMBER | "i" | "z" | "mu" | "lambda" | NAME
            | "(" expr ")" | "star" "(" expr ")" | "d" "(" expr ")"

NAME may carry one bracketed suffix, e.g. ``d[z1]``.  ``mu`` and
``lambda`` are resolved against the denominator D at parse time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional

from .scalars import DeformationParams, GaussianRational, PhaseScalar

RESERVED = {"i", "z", "mu", "lambda", "star", "d"}

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*(?:\[[^\]\s]*\])?)
  | (?P<op>[-+*^()])
""", re.VERBOSE)


class ParseError(ValueError):
    def __init__(self, message: str, pos: int = 0, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at column {pos + 1}")


@dataclass
class Tok:
    kind: str
    value: str
    pos: int


def tokenize(text: str) -> List[Tok]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Tok(kind, m.group(), pos))
        pos = m.end()
    out.append(Tok("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, resolve: Callable[[str, int], object],
                 params: Optional[DeformationParams], unary: Mapping[str, Callable]):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.resolve = resolve
        self.params = params
        self.unary = unary

    def peek(self) -> Tok:
        return self.toks[self.i]

    def take(self) -> Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value: str):
        t = self.take()
        if t.value != value:
            raise ParseError(f"expected {value!r}, found {t.value or 'end of input'!r}", t.pos, self.text)
        return t

    def parse(self):
        v = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected token {t.value!r}", t.pos, self.text)
        return v

    def expr(self):
        neg = False
        if self.peek().value == "-":
            self.take()
            neg = True
        v = self.term()
        if neg:
            v = -v
        while self.peek().value in ("+", "-"):
            op = self.take().value
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def _starts_factor(self, t: Tok) -> bool:
        return t.kind in ("num", "name") or t.value == "("

    def term(self):
        v = self.factor()
        while True:
            t = self.peek()
            if t.value == "*":
                self.take()
                v = _mul(v, self.factor())
            elif self._starts_factor(t):
                v = _mul(v, self.factor())
            else:
                return v

    def factor(self):
        v = self.atom()
        if self.peek().value == "^":
            self.take()
            neg = False
            if self.peek().value == "-":
                self.take()
                neg = True
            t = self.take()
            if t.kind != "num" or "/" in t.value:
                raise ParseError("exponent must be an integer", t.pos, self.text)
            n = int(t.value)
            if neg:
                if not isinstance(v, PhaseScalar):
                    raise ParseError("negative powers apply to phases only", t.pos, self.text)
                v = v ** (-n)
            else:
                v = _pow(v, n)
        return v

    def atom(self):
        t = self.take()
        if t.kind == "num":
            a, _, b = t.value.partition("/")
            from fractions import Fraction
            return PhaseScalar.coerce(GaussianRational(Fraction(int(a), int(b or 1))))
        if t.value == "(":
            v = self.expr()
            self.expect(")")
            return v
        if t.kind == "name":
            n = t.value
            if n == "i":
                return PhaseScalar.coerce(GaussianRational(0, 1))
            if n == "z":
                return PhaseScalar.monomial(1)
            if n in ("mu", "lambda"):
                if self.params is None:
                    raise ParseError(f"{n!r} needs a deformation denominator", t.pos, self.text)
                return self.params.aliases()[n]
            if n in self.unary and self.peek().value == "(":
                self.take()
                v = self.expr()
                self.expect(")")
                return self.unary[n](v)
            return self.resolve(n, t.pos)
        raise ParseError(f"unexpected token {t.value or 'end of input'!r}", t.pos, self.text)


def _mul(a, b):
    if isinstance(a, PhaseScalar) and not isinstance(b, PhaseScalar):
        return b.scale(a) if hasattr(b, "scale") else b * a
    return a * b


def _pow(v, n):
    if isinstance(v, PhaseScalar):
        return v ** n
    return v ** n


def parse_scalar(text: str, params: Optional[DeformationParams] = None) -> PhaseScalar:
    def resolve(name, pos):
        raise ParseError(f"unknown symbol {name!r}", pos, text)
    v = _Parser(text, resolve, params, {}).parse()
    return PhaseScalar.coerce(v)


def parse_expression(text: str, names: Mapping[str, object],
                     params: Optional[DeformationParams] = None,
                     unary: Optional[Mapping[str, Callable]] = None):
    """Evaluate an expression; NAME tokens are looked up in ``names``."""
    def resolve(name, pos):
        try:
            return names[name]
        except KeyError:
            raise ParseError(f"undeclared name {name!r}", pos, text) from None
    return _Parser(text, resolve, params, unary or {}).parse()


def parse_element(A, text: str):
    """Parse an element of presentation A from its text form."""
    names = {g.name: A.gen(g.name) for g in A.gens}
    v = parse_expression(text, names, A.cocycle.params, {"star": lambda x: x.star()})
    if isinstance(v, PhaseScalar):
        return A.scalar(v)
    return v


def render_element(e) -> str:
    A = e.alg
    terms = e.terms
    if not terms:
        return "0"
    parts = []
    for w in sorted(terms, key=lambda w: (len(w), w)):
        s = terms[w]
        word = " ".join(A.gens[i].name for i in w)
        if not w:
            parts.append(f"({s.render()})")
        elif s == 1:
            parts.append(word)
        else:
            parts.append(f"({s.render()}) * {word}")
    return " + ".join(parts)
