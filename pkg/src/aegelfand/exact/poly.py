"""Exact univariate polynomials over the rationals.

A :class:`Poly` stores its coefficients as a tuple of :class:`fractions.Fraction`
in ascending degree; the zero polynomial is the empty tuple.  Instances are
immutable and hashable.  Heavy lifting (products, evaluation, gcds) is done on
a cached integer form ``(int coefficients, positive denominator)`` through the
kernels in :mod:`aegelfand.exact.kernels`.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable, Sequence

from . import kernels as K

__all__ = ["Poly", "X", "as_fraction"]


def as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot interpret {v!r} as a rational number")


class Poly:
    __slots__ = ("coeffs", "_int", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._int = None
        self._hash = None

    @classmethod
    def _from_int(cls, ic: Sequence[int], den: int = 1) -> "Poly":
        p = cls.__new__(cls)
        ic = K.trim(list(ic))
        if den == 1:
            p.coeffs = tuple(Fraction(v) for v in ic)
        else:
            p.coeffs = tuple(Fraction(v, den) for v in ic)
        p._int = None
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, n: int, c=1) -> "Poly":
        return cls([0] * n + [c])

    # -- integer form -------------------------------------------------------

    def int_form(self) -> tuple[list[int], int]:
        """Return ``(c, d)`` with ``self == Poly(c) / d`` and ``d > 0``."""
        if self._int is None:
            d = 1
            for c in self.coeffs:
                d = lcm(d, c.denominator)
            self._int = ([int(c * d) for c in self.coeffs], d)
        return self._int

    def primitive_int(self) -> list[int]:
        """Primitive integer polynomial that is a positive multiple of self."""
        return K.primitive(self.int_form()[0])

    # -- basic properties ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def order(self) -> int:
        """Index of the lowest nonzero coefficient (``-1`` for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if len(self.coeffs) <= 1:
                self._hash = hash(self.coeffs[0] if self.coeffs else Fraction(0))
            else:
                self._hash = hash(self.coeffs)
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Rational)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __pos__(self) -> "Poly":
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self[i] - o[i] for i in range(n))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            c = as_fraction(other)
            return Poly(c * v for v in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        if len(self.coeffs) == 1:
            return other * self.coeffs[0]
        if len(other.coeffs) == 1:
            return self * other.coeffs[0]
        a, da = self.int_form()
        b, db = other.int_form()
        return Poly._from_int(K.mul(a, b), da * db)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            c = as_fraction(other)
            if c == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return Poly(v / c for v in self.coeffs)
        return NotImplemented

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dq = len(r) - len(o.coeffs)
        if dq < 0:
            return Poly(), self
        q = [Fraction(0)] * (dq + 1)
        lc = o.coeffs[-1]
        m = len(o.coeffs) - 1
        for k in range(dq, -1, -1):
            f = r[k + m] / lc
            q[k] = f
            if f:
                for j, c in enumerate(o.coeffs):
                    r[k + j] -= f * c
        return Poly(q), Poly(r[:m])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # -- calculus / composition ---------------------------------------------

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, inner: "Poly") -> "Poly":
        """Return ``self(inner(x))``."""
        inner = self._coerce(inner)
        result = Poly()
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def __call__(self, t) -> Fraction:
        t = as_fraction(t)
        if not self.coeffs:
            return Fraction(0)
        c, d = self.int_form()
        v = K.eval_homog(c, t.numerator, t.denominator)
        return Fraction(v, d * t.denominator ** (len(c) - 1))

    def sign_at(self, t) -> int:
        t = as_fraction(t)
        return K.sign_at(self.int_form()[0], t.numerator, t.denominator)

    def sign_at_infinity(self, positive: bool = True) -> int:
        return K.sign_at_inf(self.int_form()[0], positive)

    # -- gcd and friends ----------------------------------------------------

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self / self.coeffs[-1]

    @staticmethod
    def gcd(a: "Poly", b: "Poly") -> "Poly":
        """Monic gcd (zero only if both inputs are zero)."""
        if not a.coeffs:
            return b.monic()
        if not b.coeffs:
            return a.monic()
        g = K.gcd_poly(a.int_form()[0], b.int_form()[0])
        return Poly._from_int(g).monic()

    def squarefree_part(self) -> "Poly":
        """Monic product of the distinct irreducible factors."""
        if self.degree <= 0:
            return Poly.const(1) if self.coeffs else Poly()
        g = Poly.gcd(self, self.derivative())
        return self.exact_div(g).monic()

    def content_free(self) -> "Poly":
        """Positive rational multiple with coprime integer coefficients."""
        return Poly._from_int(self.primitive_int())

    # -- presentation -------------------------------------------------------

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if i == 0:
                body = str(a)
            else:
                mon = "x" if i == 1 else f"x^{i}"
                if a == 1:
                    body = mon
                elif a.denominator == 1:
                    body = f"{a}*{mon}"
                else:
                    body = f"({a})*{mon}"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        return cls(Fraction(s) for s in data)


X = Poly.x()

