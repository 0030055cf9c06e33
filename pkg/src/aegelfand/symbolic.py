"""Sparse multivariate polynomials with rational coefficients.

Only what the identity verifier needs: ring operations and equality over a
fixed, named variable set.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class MPoly:
    __slots__ = ("names", "terms")

    def __init__(self, names: tuple[str, ...], terms: dict | None = None):
        self.names = names
        self.terms: dict[tuple[int, ...], Fraction] = {}
        for k, v in (terms or {}).items():
            if v:
                self.terms[k] = Fraction(v)

    @classmethod
    def var(cls, names: tuple[str, ...], name: str) -> "MPoly":
        e = tuple(1 if n == name else 0 for n in names)
        return cls(names, {e: Fraction(1)})

    @classmethod
    def const(cls, names: tuple[str, ...], c) -> "MPoly":
        return cls(names, {(0,) * len(names): Fraction(c)})

    def _lift(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.names != self.names:
                raise ValueError("variable sets differ")
            return other
        if isinstance(other, (int, Rational)):
            return MPoly.const(self.names, other)
        raise TypeError(f"cannot combine MPoly with {type(other).__name__}")

    def __add__(self, other) -> "MPoly":
        o = self._lift(other)
        t = dict(self.terms)
        for k, v in o.terms.items():
            t[k] = t.get(k, 0) + v
        return MPoly(self.names, t)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.names, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "MPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "MPoly":
        o = self._lift(other)
        t: dict[tuple[int, ...], Fraction] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in o.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                t[k] = t.get(k, 0) + v1 * v2
        return MPoly(self.names, t)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative exponent")
        out = MPoly.const(self.names, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=-1)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda e: (-sum(e), tuple(-a for a in e))):
            c = self.terms[k]
            mon = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(self.names, k) if e)
            if not mon:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mon
            else:
                body = f"{abs(c)}*{mon}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sgn, body in parts[1:]:
            out += f" {sgn} {body}"
        return out

    __repr__ = __str__


def symbols(*names: str) -> tuple[MPoly, ...]:
    t = tuple(names)
    return tuple(MPoly.var(t, n) for n in names)
