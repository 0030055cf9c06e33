"""Reduced rational functions ``num/den`` over the rationals."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .poly import Poly, as_fraction

__all__ = ["RatFun"]


class RatFun:
    """A rational function in lowest terms with monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _reduced: bool = False):
        num = _as_poly(num)
        den = Poly.const(1) if den is None else _as_poly(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if not num:
                den = Poly.const(1)
            elif den.degree > 0:
                g = Poly.gcd(num, den)
                if g.degree > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            lc = den.lc
            if lc != 1:
                num = num / lc
                den = den / lc
        self.num: Poly = num
        self.den: Poly = den
        self._hash = None

    @classmethod
    def const(cls, c) -> "RatFun":
        return cls(Poly.const(c), _reduced=True, den=Poly.const(1))

    @classmethod
    def x(cls) -> "RatFun":
        return cls(Poly.x(), Poly.const(1), _reduced=True)

    # -- predicates ---------------------------------------------------------

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return self.is_poly() and self.num.degree <= 0

    def __bool__(self) -> bool:
        return bool(self.num)

    def as_poly(self) -> Poly:
        if not self.is_poly():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    # -- equality -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.num) if self.is_poly() else hash((self.num, self.den))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "RatFun":
        if not isinstance(n, int):
            raise TypeError("integer exponent required")
        if n < 0:
            return self.inverse() ** (-n)
        return RatFun(self.num**n, self.den**n, _reduced=True)

    # -- analysis -----------------------------------------------------------

    def __call__(self, t) -> Fraction:
        t = as_fraction(t)
        d = self.den(t)
        if d == 0:
            raise ZeroDivisionError(f"{self} has a pole at {t}")
        return self.num(t) / d

    def has_pole_at(self, t) -> bool:
        return self.den.sign_at(as_fraction(t)) == 0

    def limit_at_infinity(self, positive: bool = True) -> Fraction | None:
        """Limit as t -> +inf (or -inf); ``None`` when it is infinite."""
        dn, dd = self.num.degree, self.den.degree
        if dn < dd:
            return Fraction(0)
        if dn == dd:
            return self.num.lc / self.den.lc
        return None

    def bounded_at_infinity(self) -> bool:
        return self.num.degree <= self.den.degree

    def sign_poly(self) -> Poly:
        """``num*den``: has the sign of self away from poles."""
        return self.num * self.den

    def derivative(self) -> "RatFun":
        return RatFun(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def compose(self, inner: "RatFun") -> "RatFun":
        inner = _coerce(inner)
        res = RatFun.const(0)
        for c in reversed(self.num.coeffs):
            res = res * inner + c
        dres = RatFun.const(0)
        for c in reversed(self.den.coeffs):
            dres = dres * inner + c
        return res / dres

    # -- presentation -------------------------------------------------------

    def __repr__(self) -> str:
        return f"RatFun({self})"

    def __str__(self) -> str:
        if self.is_poly():
            return str(self.num)
        n = str(self.num)
        if len([c for c in self.num.coeffs if c]) > 1:
            n = f"({n})"
        d = str(self.den)
        if len([c for c in self.den.coeffs if c]) > 1 or "*" in d or "^" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RatFun":
        if isinstance(data, list):
            return cls(Poly.from_json(data))
        return cls(Poly.from_json(data["num"]), Poly.from_json(data["den"]))


def _as_poly(v) -> Poly:
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Rational, str)):
        return Poly.const(as_fraction(v))
    raise TypeError(f"cannot interpret {v!r} as a polynomial")


def _coerce(v) -> RatFun | None:
    if isinstance(v, RatFun):
        return v
    if isinstance(v, Poly):
        return RatFun(v, Poly.const(1), _reduced=True)
    if isinstance(v, (int, Rational)):
        return RatFun(Poly.const(v), Poly.const(1), _reduced=True)
    return None
