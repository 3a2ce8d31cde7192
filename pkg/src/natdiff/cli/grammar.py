"""Polynomial and operator-word syntax.

    poly     := ["+"|"-"] term (("+"|"-") term)*
    term     := factor ("*" factor)*
    factor   := rational | ident ["^" nat] | "(" poly ")" ["^" nat]
    rational := int | int "/" nat

A leading sign is accepted so that printed polynomials round-trip, and a
parenthesised group may carry an exponent. Implicit multiplication is
rejected.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

from ..polyring import MonomialOrder, PolyRing, Polynomial, format_terms

if TYPE_CHECKING:
    from ..relgen import OperatorExpr

IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            toks.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            toks.append(("ident", m.group(2), start))
        elif m.group(3) is not None:
            if m.group(3).isspace():
                pos = m.end()
                continue
            toks.append(("op", m.group(3), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.index = {name: k for k, name in enumerate(ring.names, start=1)}
        self.toks = _tokenize(text)
        self.at = 0

    def peek(self):
        return self.toks[self.at]

    def take(self):
        tok = self.toks[self.at]
        self.at += 1
        return tok

    def expect(self, kind, value=None):
        tok = self.take()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            raise ParseError(f"expected {want!r}, found {tok[1] or 'end of input'!r}", self.text, tok[2])
        return tok

    def poly(self) -> Polynomial:
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        acc = self.term() * sign
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                t = self.term()
                acc = acc + t if tok[1] == "+" else acc - t
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            acc = acc * self.factor()
        tok = self.peek()
        if tok[0] in ("int", "ident") or (tok[0] == "op" and tok[1] == "("):
            raise ParseError("implicit multiplication is not allowed", self.text, tok[2])
        return acc

    def power(self, base: Polynomial) -> Polynomial:
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            return base ** int(self.expect("int")[1])
        return base

    def factor(self) -> Polynomial:
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            num = int(val)
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                den = int(self.expect("int")[1])
                if den == 0:
                    raise ParseError("zero denominator", self.text, pos)
                return self.ring.constant(Fraction(num, den))
            return self.ring.constant(num)
        if kind == "ident":
            if val not in self.index:
                raise ParseError(f"unknown identifier {val!r}", self.text, pos)
            return self.power(self.ring.gen(self.index[val]))
        if kind == "op" and val == "(":
            inner = self.poly()
            self.expect("op", ")")
            return self.power(inner)
        raise ParseError(f"unexpected {val or 'end of input'!r}", self.text, pos)


def parse_polynomial(s: str, variables, order="degrevlex") -> Polynomial:
    """Parse ``s`` in the given variables (a PolyRing or a list of names)."""
    ring = variables if isinstance(variables, PolyRing) else PolyRing(variables, order)
    p = _Parser(s, ring)
    if p.peek()[0] == "end":
        raise ParseError("empty polynomial", s, 0)
    out = p.poly()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError(f"unexpected {tok[1]!r}", s, tok[2])
    return out


def format_polynomial(p: Polynomial, order="degrevlex") -> str:
    """Canonical string: terms descending in ``order`` (degrevlex by default)."""
    key = MonomialOrder.coerce(order).key
    terms = sorted(p.as_dict().items(), key=lambda t: key(t[0]), reverse=True)
    return format_terms(terms, p.ring.names)


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", s):
        raise ParseError("expected a rational number", s, 0)
    return Fraction(s)


def parse_index_list(s: str) -> tuple:
    s = s.strip()
    if not s:
        return ()
    return tuple(int(x) for x in s.split(","))


def split_top_level(s: str, sep: str) -> list:
    """Split on ``sep`` outside parentheses and brackets."""
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


_GEN = re.compile(r"\s*d\[\s*([\d,\s]*);([\d,\s]*)\]\s*")


def parse_word(s: str, A) -> "OperatorExpr":
    """Parse a word such as ``x*d[1;1,2]*(y+1)`` into an operator on A.

    Atoms are separated by top-level ``*``. ``d[i;j]`` is the natural
    derivation for row tuple i and column tuple j; any other atom is a
    polynomial acting by multiplication.
    """
    from ..relgen import Gen, Mul, OperatorExpr

    atoms = []
    for piece in split_top_level(s, "*"):
        m = _GEN.fullmatch(piece)
        if m:
            atoms.append(Gen(parse_index_list(m.group(1)), parse_index_list(m.group(2))))
        else:
            atoms.append(Mul(A.project(parse_polynomial(piece, A.ring))))
    return OperatorExpr.word(*atoms)


def parse_polynomial_list(s: str, ring: PolyRing) -> list:
    return [parse_polynomial(piece, ring) for piece in split_top_level(s, ",")]


def is_identifier(name: str) -> bool:
    return IDENT.fullmatch(name) is not None


def check_variables(names: Sequence[str]):
    for name in names:
        if not is_identifier(name):
            raise ValueError(f"invalid variable name {name!r}")
    if len(set(names)) != len(names):
        raise ValueError("variable names must be unique")
