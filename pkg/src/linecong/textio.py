"""Plain-text polynomial grammar used by fixture files and the CLI.

Grammar (one polynomial per line, ``#`` starts a comment line)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

Names are ``[a-z][0-9]*``.  Plücker names ``pij`` with ``j < i`` are read as
``-pji``.  A file may declare its ring on a line ``#ring: NAME ...`` where
the names are variables, or the shorthand ``plucker`` / ``P5``.
"""

from __future__ import annotations

import re
from typing import Iterator

from .algebra.poly import Polynomial
from .algebra.ring import PolyRing, UsageError, make_ring


class ParseError(UsageError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


_TOKEN = re.compile(r"\s*(?:(\d+)|([a-z][0-9]*)|(.))")
_PLUCKER = re.compile(r"p([0-9])([0-9])$")


def _tokens(text: str, line: int) -> Iterator[tuple[str, str, int]]:
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # pragma: no cover - regex always matches a char
            break
        col = m.start(m.lastindex) + 1 if m.lastindex else pos + 1
        if m.group(1) is not None:
            yield "int", m.group(1), col
        elif m.group(2) is not None:
            yield "name", m.group(2), col
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise ParseError(f"unexpected character {ch!r}", line, col)
            yield "op", ch, col
        pos = m.end()
    yield "end", "", len(text) + 1


class _Parser:
    def __init__(self, text: str, ring: PolyRing, line: int):
        self.toks = list(_tokens(text, line))
        self.i = 0
        self.ring = ring
        self.line = line

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg):
        _, _, col = self.peek()
        raise ParseError(msg, self.line, col)

    def parse(self) -> Polynomial:
        f = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return f

    def expr(self) -> Polynomial:
        f = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            _, op, _ = self.take()
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self) -> Polynomial:
        f = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            f = f * self.unary()
        return f

    def unary(self) -> Polynomial:
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            f = self.unary()
            return -f if val == "-" else f
        return self.power()

    def power(self) -> Polynomial:
        f = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, val, _ = self.peek()
            if kind != "int":
                self.error("exponent must be a nonnegative integer")
            self.take()
            f = f ** int(val)
        return f

    def atom(self) -> Polynomial:
        kind, val, col = self.peek()
        if kind == "int":
            self.take()
            return Polynomial.constant(self.ring, int(val))
        if kind == "name":
            self.take()
            return self.variable(val, col)
        if (kind, val) == ("op", "("):
            self.take()
            f = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.error("expected ')'")
            self.take()
            return f
        self.error("expected a number, a variable or '('")

    def variable(self, name: str, col: int) -> Polynomial:
        ring = self.ring
        if name in ring.variables:
            return ring(name)
        m = _PLUCKER.match(name)
        if m and any(_PLUCKER.match(v) for v in ring.variables):
            i, j = int(m.group(1)), int(m.group(2))
            if i == j or i > 5 or j > 5:
                raise ParseError(f"Plücker index out of range in {name!r}", self.line, col)
            swapped = f"p{j}{i}"
            if i > j and swapped in ring.variables:
                return -ring(swapped)
        raise ParseError(f"unknown variable {name!r}", self.line, col)


def parse_polynomial(text: str, ring: PolyRing, line: int = 1) -> Polynomial:
    return _Parser(text, ring, line).parse()


def parse_polynomials(text: str, ring: PolyRing):
    """Parse one polynomial per non-comment line into an ideal of ``ring``."""
    from .algebra.ideal import Ideal

    gens = []
    for n, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        gens.append(parse_polynomial(s, ring, n))
    return Ideal(ring, gens)


def declared_ring(text: str, characteristic: int) -> PolyRing | None:
    """Ring named by a ``#ring:`` directive, if any."""
    for raw in text.splitlines():
        s = raw.strip()
        if s.lower().startswith("#ring:"):
            spec = s.split(":", 1)[1].split()
            if spec == ["plucker"]:
                from .grassmann import plucker_ring

                return plucker_ring(characteristic)
            if spec == ["P5"]:
                from .grassmann import p5_ring

                return p5_ring(characteristic)
            return make_ring(spec, characteristic)
    return None


def read_ideal(text: str, characteristic: int, ring: PolyRing | None = None):
    ring = ring or declared_ring(text, characteristic)
    if ring is None:
        raise UsageError("no ring given and no '#ring:' directive in the file")
    return parse_polynomials(text, ring)


def _format_coef(c: int, first: bool, is_one: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    if is_one:
        return f"{sign}{a}"
    if a == 1:
        return sign
    return f"{sign}{a}*"


def format_polynomial(f: Polynomial) -> str:
    """Canonical text form: terms in decreasing monomial order, no spaces."""
    if not f.terms:
        return "0"
    ring = f.ring
    names = ring.variables
    out = []
    for exps, c in f.items():
        c = ring.field.to_int(c)
        mono = "*".join(
            names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exps) if e
        )
        if not mono:
            out.append(_format_coef(c, not out, True))
        elif isinstance(c, int):
            out.append(_format_coef(c, not out, False) + mono)
        else:  # rational coefficient
            sign = "-" if c < 0 else ("" if not out else "+")
            a = abs(c)
            out.append(f"{sign}{mono}" if a == 1 else f"{sign}({a})*{mono}")
    return "".join(out)


def format_ideal(I, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.append("#ring: " + " ".join(I.ring.variables))
    lines.extend(format_polynomial(g) for g in I.gens)
    return "\n".join(lines) + "\n"
