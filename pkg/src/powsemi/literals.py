"""Text syntax for coefficients and series.

Coefficients are built from integers, ``p/q`` and ``zeta(m)`` with
``+ - * / ^`` and parentheses.  A series literal is such an expression in
the variable ``z``; a trailing ``+ O(z^N)`` marks the series as truncated,
with coefficients beyond index ``N`` unknown.

    >>> str(parse_series("(1/2)*z^2 - z^4"))
    '(1/2)*z^2 - z^4'
"""

from __future__ import annotations

import re
from fractions import Fraction

from .cyclo import CycloNum
from .errors import ParseError, SemanticError
from .series import Series, order

__all__ = ["parse_series", "parse_cyclo", "render_cyclo", "render_series", "parse_series_file"]

_TOKEN = re.compile(r"\s*(?:(\d+)|(zeta|z|O)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


# polynomial values are dicts exponent -> CycloNum

def _padd(a, b, sign=1):
    out = dict(a)
    for n, c in b.items():
        c = c if sign > 0 else -c
        out[n] = out[n] + c if n in out else c
    return {n: c for n, c in out.items() if not c.is_zero()}


def _pmul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            v = x * y
            out[i + j] = out[i + j] + v if i + j in out else v
    return {n: c for n, c in out.items() if not c.is_zero()}


def _const(c):
    return {0: CycloNum.coerce(c)} if not CycloNum.coerce(c).is_zero() else {}


class _Parser:
    def __init__(self, text: str, allow_z: bool):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.allow_z = allow_z
        self.big_o = None

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.i]
        if (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {want!r}, found {got}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        value = self.expr(top=True)
        self.take("end")
        return value

    def expr(self, top=False):
        value = self.signed_term(top)
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = 1 if self.take()[1] == "+" else -1
            if top and self.peek() == ("name", "O", self.peek()[2]):
                if sign < 0:
                    raise ParseError("big-O term must be added", self.peek()[2])
                self.big_o_term()
                break
            value = _padd(value, self.term(), sign)
        return value

    def signed_term(self, top):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            v = self.term()
            return v if tok[1] == "+" else {n: -c for n, c in v.items()}
        if top and tok[0] == "name" and tok[1] == "O":
            self.big_o_term()
            return {}
        return self.term()

    def big_o_term(self):
        start = self.take("name", "O")[2]
        if not self.allow_z:
            raise ParseError("big-O term in a coefficient literal", start)
        self.take("op", "(")
        self.take("name", "z")
        n = 1
        if self.peek()[:2] == ("op", "^"):
            self.take()
            n = self.take("int")[1]
        self.take("op", ")")
        self.big_o = n
        if self.peek()[0] != "end":
            raise ParseError("big-O term must come last", self.peek()[2])

    def term(self):
        value = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()
            rhs = self.unary()
            if op[1] == "*":
                value = _pmul(value, rhs)
            else:
                if set(rhs) - {0} or not rhs:
                    raise ParseError("division by a non-constant or zero", op[2])
                inv = rhs[0].inverse()
                value = {n: c * inv for n, c in value.items()}
        return value

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            v = self.unary()
            return v if tok[1] == "+" else {n: -c for n, c in v.items()}
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            tok = self.take()
            sign = 1
            if self.peek()[:2] == ("op", "-"):
                self.take()
                sign = -1
            e = sign * self.take("int")[1]
            if e < 0:
                if set(base) - {0} or not base:
                    raise ParseError("negative power of a non-constant", tok[2])
                return {0: base[0] ** e}
            out = {0: CycloNum.rational(1)}
            for _ in range(e):
                out = _pmul(out, base)
            return out
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return _const(tok[1])
        if tok[0] == "name" and tok[1] == "z":
            if not self.allow_z:
                raise ParseError("variable z in a coefficient literal", tok[2])
            self.take()
            return {1: CycloNum.rational(1)}
        if tok[0] == "name" and tok[1] == "zeta":
            self.take()
            self.take("op", "(")
            m_tok = self.take("int")
            if m_tok[1] < 1:
                raise ParseError("zeta conductor must be positive", m_tok[2])
            self.take("op", ")")
            return {0: CycloNum.zeta(m_tok[1])}
        if tok[:2] == ("op", "("):
            self.take()
            v = self.expr()
            self.take("op", ")")
            return v
        got = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"unexpected {got}", tok[2])


def parse_cyclo(text: str) -> CycloNum:
    """Parse a coefficient literal such as ``(1/2)*zeta(3)^2``."""
    value = _Parser(text, allow_z=False).parse()
    return value.get(0, CycloNum.rational(0))


def parse_series(text: str, semigroup: bool = False) -> Series:
    """Parse a series literal.

    With ``semigroup=True`` the value must be an element of the composition
    semigroup: zero constant term and order at least 2.
    """
    p = _Parser(text, allow_z=True)
    coeffs = p.parse()
    if p.big_o is None:
        s = Series(coeffs)
    else:
        if any(n > p.big_o for n in coeffs):
            raise ParseError(f"term beyond O(z^{p.big_o})")
        s = Series(coeffs, p.big_o, exact=False)
    if semigroup:
        if 0 in s.coeffs:
            raise SemanticError(f"{text!r}: nonzero constant term")
        n = order(s)
        if n < 2:
            raise SemanticError(f"{text!r}: order {n} < 2, not an element of z^2 k[[z]]")
    return s


def parse_series_file(text: str, semigroup: bool = True) -> list[Series]:
    """One series per line; ``#`` starts a comment."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(parse_series(line, semigroup=semigroup))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    return out


# -- rendering ------------------------------------------------------------------

def _render_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _zeta_power(m: int, i: int) -> str:
    if i == 0:
        return "1"
    return f"zeta({m})" if i == 1 else f"zeta({m})^{i}"


def render_cyclo(x: CycloNum) -> str:
    """Canonical text: the value is written in the smallest cyclotomic field containing it."""
    m, num, den = x.canonical_key()
    x = CycloNum(m, num, den)
    if x.m == 1:
        return _render_fraction(x.to_fraction())
    parts = []
    for i, q in enumerate(x.coeffs):
        if q == 0:
            continue
        basis = _zeta_power(x.m, i)
        neg = q < 0
        a = -q if neg else q
        if basis == "1":
            body = _render_fraction(a)
        elif a == 1:
            body = basis
        elif a.denominator == 1:
            body = f"{a.numerator}*{basis}"
        else:
            body = f"({_render_fraction(a)})*{basis}"
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def _coefficient_prefix(c: CycloNum) -> tuple[bool, str]:
    """(negative, text) for writing ``c*z^n``; text is empty for unit coefficients."""
    if c.m == 1:
        q = c.to_fraction()
        neg = q < 0
        a = -q if neg else q
        if a == 1:
            return neg, ""
        return neg, (str(a.numerator) if a.denominator == 1 else f"({_render_fraction(a)})")
    body = render_cyclo(c)
    if " " not in body:
        if body.startswith("-"):
            return True, body[1:]
        return False, body
    return False, f"({body})"


def render_series(s: Series) -> str:
    parts = []
    for n, c in s.coeffs.items():
        neg, text = _coefficient_prefix(c)
        if n == 0:
            term = text or "1"
        else:
            zp = "z" if n == 1 else f"z^{n}"
            term = f"{text}*{zp}" if text else zp
        if not parts:
            parts.append("-" + term if neg else term)
        else:
            parts.append(("- " if neg else "+ ") + term)
    if not s.exact:
        parts.append(f"+ O(z^{s.precision})" if parts else f"O(z^{s.precision})")
    return " ".join(parts) if parts else "0"
