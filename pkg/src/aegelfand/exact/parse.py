"""Text grammar for rational-function expressions.

::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | '+' unary | power
    power   := atom ('^' unary)?
    atom    := INTEGER | 'x' | '(' expr ')'

Fractions such as ``-7/2`` are ordinary division.  Exponents must evaluate to
integer constants; negative exponents invert.  A piecewise literal reads
``piecewise{ (-inf,0): -x; (0,inf): x }``; a breakpoint may also be an
algebraic number written ``root(x^2 - 2; 1..2)``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError
from .ratfun import RatFun
from .roots import NEG_INF, POS_INF, Infinity

__all__ = ["parse_ratfun", "parse_poly", "parse_rational", "parse_point", "parse_piecewise", "parse_interval"]

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|(\*\*|[-+*/^(),;:{}\[\]])|(inf)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        num, var, op, inf, bad = m.groups()
        if num is not None:
            toks.append(("num", num))
        elif var is not None:
            toks.append(("x", var))
        elif op is not None:
            toks.append(("op", "^" if op == "**" else op))
        elif inf is not None:
            toks.append(("inf", inf))
        elif bad is not None:
            raise ParseError(f"unexpected character {bad!r} at position {m.start(5)}")
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str] | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, value: str | None = None) -> tuple[str, str]:
        t = self.peek()
        if t is None:
            raise ParseError(f"unexpected end of input in {self.text!r}")
        if value is not None and t[1] != value:
            raise ParseError(f"expected {value!r}, found {t[1]!r} in {self.text!r}")
        self.i += 1
        return t

    def at(self, value: str) -> bool:
        t = self.peek()
        return t is not None and t[0] == "op" and t[1] == value

    def expr(self) -> RatFun:
        v = self.term()
        while self.at("+") or self.at("-"):
            op = self.take()[1]
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def term(self) -> RatFun:
        v = self.unary()
        while self.at("*") or self.at("/"):
            op = self.take()[1]
            rhs = self.unary()
            if op == "*":
                v = v * rhs
            else:
                if not rhs:
                    raise ParseError(f"division by zero in {self.text!r}")
                v = v / rhs
        return v

    def unary(self) -> RatFun:
        if self.at("-"):
            self.take()
            return -self.unary()
        if self.at("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RatFun:
        base = self.atom()
        if self.at("^"):
            self.take()
            e = self.unary()
            if not e.is_constant() or e.num.lc.denominator != 1:
                raise ParseError(f"exponent must be an integer constant in {self.text!r}")
            n = int(e.num[0])
            if n < 0 and not base:
                raise ParseError(f"zero raised to a negative power in {self.text!r}")
            return base**n
        return base

    def atom(self) -> RatFun:
        t = self.take()
        if t[0] == "num":
            return RatFun.const(int(t[1]))
        if t[0] == "x":
            return RatFun.x()
        if t == ("op", "("):
            v = self.expr()
            self.take(")")
            return v
        raise ParseError(f"unexpected token {t[1]!r} in {self.text!r}")

    def done(self) -> None:
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()[1]!r} in {self.text!r}")


def parse_ratfun(text: str) -> RatFun:
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty expression")
    p = _Parser(text)
    v = p.expr()
    p.done()
    return v


def parse_poly(text: str):
    v = parse_ratfun(text)
    if not v.is_poly():
        raise ParseError(f"{text!r} is not a polynomial")
    return v.num


def parse_rational(text: str) -> Fraction:
    v = parse_ratfun(text)
    if not v.is_constant():
        raise ParseError(f"{text!r} is not a rational constant")
    return v.num[0]


_ROOT = re.compile(r"^root\((.+);(.+)\.\.(.+)\)$", re.S)


def parse_point(text: str):
    """A rational number, ``inf``/``+inf``/``-inf``, or ``root(poly; lo..hi)``."""
    s = text.strip().replace(" ", "")
    if s in ("inf", "+inf", "oo"):
        return POS_INF
    if s == "-inf":
        return NEG_INF
    m = _ROOT.match(s)
    if m:
        from .roots import AlgebraicPoint

        try:
            pt = AlgebraicPoint(parse_poly(m.group(1)).squarefree_part(), parse_rational(m.group(2)), parse_rational(m.group(3)))
        except ValueError as e:
            raise ParseError(f"bad algebraic point {text!r}: {e}") from None
        return pt.rational if pt.rational is not None else pt
    return parse_rational(s)


def parse_interval(text: str) -> tuple:
    """``[a,b]`` or ``(a,b)`` with rational or infinite ends."""
    s = text.strip()
    if len(s) < 2 or s[0] not in "[(" or s[-1] not in "])":
        raise ParseError(f"bad interval {text!r}")
    parts = s[1:-1].split(",")
    if len(parts) != 2:
        raise ParseError(f"bad interval {text!r}")
    return parse_point(parts[0]), parse_point(parts[1])


_PIECEWISE = re.compile(r"^\s*piecewise\s*\{(.*)\}\s*$", re.S)


def _split_top(text: str, sep: str) -> list[str]:
    """Split at ``sep`` outside parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


def _parse_piece(chunk: str):
    c = chunk.strip()
    if not c.startswith("("):
        raise ParseError(f"bad piece {c!r}")
    depth = 0
    for i, ch in enumerate(c):
        depth += (ch == "(") - (ch == ")")
        if depth == 0:
            break
    else:
        raise ParseError(f"unbalanced piece {c!r}")
    ends = _split_top(c[1:i], ",")
    rest = c[i + 1 :].lstrip()
    if len(ends) != 2 or not rest.startswith(":"):
        raise ParseError(f"bad piece {c!r}")
    return parse_point(ends[0]), parse_point(ends[1]), parse_ratfun(rest[1:])


def parse_piecewise(text: str) -> list[tuple[object, object, RatFun]]:
    """Parse a piecewise literal into ``[(lo, hi, ratfun), ...]``."""
    m = _PIECEWISE.match(text)
    if m is None:
        raise ParseError(f"not a piecewise literal: {text!r}")
    out = [_parse_piece(chunk) for chunk in _split_top(m.group(1), ";") if chunk.strip()]
    if not out:
        raise ParseError("piecewise literal without pieces")
    for lo, hi, _ in out:
        if isinstance(lo, Infinity) and lo.sign > 0 or isinstance(hi, Infinity) and hi.sign < 0:
            raise ParseError("piece with reversed infinite end")
    return out
