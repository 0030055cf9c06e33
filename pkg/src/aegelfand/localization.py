"""Localization at Loc(R) and the bounded subring.

A :class:`LocPair` is a fraction ``num/den`` with ``den`` in Loc(R), stored in
an instance-specific canonical form so that equal classes have equal fields:

* ``Q``, ``Q(x)``, ``ae``: every denominator is invertible, so ``(num/den, 1)``;
* ``Q[x]``: reduced fraction, denominator scaled by the power of two ``2^k``
  (``k`` an integer) that is smallest with ``den >= 1`` after making it monic;
* ``germ0``: reduced fraction with ``den(0) = 2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .errors import NotLocalizable, PreconditionFailed, UnsupportedInstance
from .exact import Poly, RatFun, poly_nonneg
from .poring import (
    AeRing,
    Elem,
    GermRing,
    PolyRing,
    QRing,
    RatFunRing,
    RingInstance,
    _same,
    get_instance,
    leq,
    loc_member,
)

__all__ = [
    "LocPair",
    "BddElem",
    "Bounded",
    "Unbounded",
    "make_loc",
    "loc_eq",
    "loc_add",
    "loc_mul",
    "loc_neg",
    "loc_sub",
    "loc_leq",
    "loc_in_cone",
    "iota",
    "iota_order_check",
    "bdd_member",
    "is_bounded",
    "make_bdd",
    "germ_bound",
]


@dataclass(frozen=True, eq=False)
class LocPair:
    num: Elem
    den: Elem

    @property
    def ring(self) -> RingInstance:
        return self.num.ring

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"LocPair[{self.ring.name}]({self})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, LocPair):
            return NotImplemented
        return loc_eq(self, other)

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other):
        return loc_add(self, _lift(self.ring, other))

    __radd__ = __add__

    def __sub__(self, other):
        return loc_sub(self, _lift(self.ring, other))

    def __rsub__(self, other):
        return loc_sub(_lift(self.ring, other), self)

    def __neg__(self):
        return loc_neg(self)

    def __mul__(self, other):
        return loc_mul(self, _lift(self.ring, other))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = iota(self.ring.one())
        for _ in range(n):
            out = out * self
        return out

    def as_ratfun(self) -> RatFun:
        """The fraction as a rational function (function-valued instances)."""
        n, d = self.num.payload, self.den.payload
        if isinstance(n, Fraction):
            return RatFun.const(n / d)
        if isinstance(n, RatFun):
            return n / d
        return RatFun(n, d)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def _lift(R: RingInstance, v) -> LocPair:
    if isinstance(v, LocPair):
        return v
    return iota(R.elem(v))


def _canonical(R: RingInstance, p, q) -> LocPair:
    if isinstance(R, QRing):
        return LocPair(R.elem(p / q), R.one())
    if isinstance(R, RatFunRing):
        return LocPair(R.elem(p / q), R.one())
    if isinstance(R, AeRing):
        return LocPair(R.elem(p * q.inverse()), R.one())
    if isinstance(R, PolyRing):
        if not p:
            return LocPair(R.zero(), R.one())
        g = Poly.gcd(p, q)
        p1, q1 = p.exact_div(g), q.exact_div(g)
        c = q1.lc
        p1, q1 = p1 / c, q1 / c
        # smallest integer k with 2^k q1 >= 1; q1 is positive definite
        if poly_nonneg(q1 - 1):
            while poly_nonneg(q1 / 2 - 1):
                q1, p1 = q1 / 2, p1 / 2
        else:
            while not poly_nonneg(q1 - 1):
                q1, p1 = q1 * 2, p1 * 2
        return LocPair(R.elem(p1), R.elem(q1))
    if isinstance(R, GermRing):
        if not p:
            return LocPair(R.zero(), R.elem(2))
        g = Poly.gcd(p, q)
        p1, q1 = p.exact_div(g), q.exact_div(g)
        c = q1[0] / 2
        return LocPair(R.elem(p1 / c), R.elem(q1 / c))
    raise UnsupportedInstance(f"no localization for {R.name}")


def make_loc(R, num, den=1) -> LocPair:
    """The class of ``num/den``; raises :class:`NotLocalizable` unless ``den`` is in Loc(R)."""
    R = get_instance(R)
    n, d = R.elem(num), R.elem(den)
    if not loc_member(R, d):
        raise NotLocalizable(f"{d} is not in Loc({R.name})")
    return _canonical(R, n.payload, d.payload)


def _pair_check(a: LocPair, b: LocPair) -> RingInstance:
    _same(a.ring, b.ring)
    return a.ring


def loc_eq(a: LocPair, b: LocPair) -> bool:
    _pair_check(a, b)
    return a.num * b.den == a.den * b.num


def loc_add(a: LocPair, b: LocPair) -> LocPair:
    R = _pair_check(a, b)
    return _canonical(R, (a.num * b.den + a.den * b.num).payload, (a.den * b.den).payload)


def loc_neg(a: LocPair) -> LocPair:
    return LocPair(-a.num, a.den)


def loc_sub(a: LocPair, b: LocPair) -> LocPair:
    return loc_add(a, loc_neg(b))


def loc_mul(a: LocPair, b: LocPair) -> LocPair:
    R = _pair_check(a, b)
    return _canonical(R, (a.num * b.num).payload, (a.den * b.den).payload)


def loc_leq(a: LocPair, b: LocPair) -> bool:
    """``p/q <= r/s`` iff ``ps <= rq``."""
    R = _pair_check(a, b)
    return leq(R, a.num * b.den, b.num * a.den)


def loc_in_cone(a: LocPair) -> bool:
    return loc_leq(iota(a.ring.zero()), a)


def iota(r: Elem) -> LocPair:
    R = r.ring
    return _canonical(R, r.payload, R.one().payload)


def iota_order_check(r: Elem, r2: Elem) -> tuple[bool, bool]:
    """``(r <= r2, iota(r) <= iota(r2))``; the two must agree."""
    return leq(r.ring, r, r2), loc_leq(iota(r), iota(r2))


# ---------------------------------------------------------------------------
# bounded subring


@dataclass(frozen=True)
class Bounded:
    n: int
    name: str = field(default="Bounded", init=False)


@dataclass(frozen=True)
class Unbounded:
    name: str = field(default="Unbounded", init=False)


@dataclass(frozen=True)
class BddElem:
    value: LocPair
    bound: int

    def __post_init__(self):
        if self.bound < 0:
            raise ValueError("bound must be nonnegative")
        R = self.value.ring
        n = iota(R.elem(self.bound))
        if not (loc_leq(-n, self.value) and loc_leq(self.value, n)):
            raise PreconditionFailed(f"{self.value} is not bounded by {self.bound}")


def _abs_sum(p: Poly) -> Fraction:
    return sum((abs(c) for c in p.coeffs), Fraction(0))


def _sup_ceiling(m: Poly, d: Poly) -> int:
    """An integer at least ``sup |m/d|`` for positive definite ``d``, ``deg m <= deg d``."""
    lcd = abs(d.lc)
    T = 1 + 2 * sum((abs(c) for c in d.coeffs[:-1]), Fraction(0)) / lcd
    tail = 2 * _abs_sum(m) / lcd
    low = Fraction(1)
    while not poly_nonneg(d - low):
        low /= 2
    head = sum((abs(c) * T**i for i, c in enumerate(m.coeffs)), Fraction(0)) / low
    return ceil(max(tail, head, Fraction(0)))


def _fits(m: Poly, d: Poly, n: int) -> bool:
    return poly_nonneg(d * n - m) and poly_nonneg(d * n + m)


def _bounded_parts(a: LocPair):
    """``(m, d)`` with ``d`` positive definite when ``a`` is bounded, else ``None``."""
    R = a.ring
    if isinstance(R, PolyRing):
        m, d = a.num.payload, a.den.payload
    elif isinstance(R, RatFunRing):
        f = a.as_ratfun()
        m, d = f.num, f.den
        if any(True for _ in _real_roots(d)):
            return None
    else:
        raise UnsupportedInstance(f"bd_member has no decision procedure for {R.name}; see germ_bound")
    if m.degree > d.degree:
        return None
    if d.lc < 0:
        m, d = -m, -d
    return m, d


def is_bounded(a: LocPair) -> bool:
    """Membership in the bounded subring without computing the least bound."""
    if isinstance(a.ring, QRing):
        return True
    parts = _bounded_parts(a)
    if parts is None:
        return False
    m, d = parts
    return not m or _fits(m, d, _sup_ceiling(m, d))


def bdd_member(a: LocPair):
    """``Bounded(n)`` with the least ``n`` such that ``-n <= a <= n``, or ``Unbounded``."""
    if isinstance(a.ring, QRing):
        return Bounded(ceil(abs(a.num.payload / a.den.payload)))
    parts = _bounded_parts(a)
    if parts is None:
        return Unbounded()
    m, d = parts
    if not m:
        return Bounded(0)
    hi = _sup_ceiling(m, d)
    if not _fits(m, d, hi):
        raise RuntimeError(f"a-priori ceiling {hi} fails for {a}; bound computation is wrong")
    lo = -1  # invariant: lo fails (or is -1), hi fits
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _fits(m, d, mid):
            hi = mid
        else:
            lo = mid
    return Bounded(hi)


def _real_roots(p: Poly):
    from .exact import isolate_roots

    return isolate_roots(p) if p.degree > 0 else ()


def make_bdd(a: LocPair) -> BddElem:
    v = bdd_member(a)
    if isinstance(v, Unbounded):
        raise PreconditionFailed(f"{a} is not bounded")
    return BddElem(a, v.n)


def germ_bound(a: LocPair) -> int:
    """A bound valid for a germ fraction: one more than the ceiling of its value at 0."""
    R = a.ring
    if not isinstance(R, GermRing):
        raise UnsupportedInstance("germ_bound applies to germ0 only")
    v = a.num.payload[0] / a.den.payload[0]
    return ceil(abs(v)) + 1
