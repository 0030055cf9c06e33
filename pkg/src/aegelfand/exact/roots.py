"""Real roots, algebraic points and exact sign decisions.

Points on the (affine) real line are represented by one of

* :class:`fractions.Fraction` -- a rational point,
* :class:`AlgebraicPoint` -- a root of a square-free polynomial isolated by a
  rational interval,
* :data:`NEG_INF` / :data:`POS_INF` -- the two ends of the line.

Every comparison between points and every sign query is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from ..errors import UnresolvedInterval, ZeroPolynomial
from . import kernels as K
from .poly import Poly, as_fraction

__all__ = [
    "Infinity",
    "NEG_INF",
    "POS_INF",
    "AlgebraicPoint",
    "Point",
    "WHOLE_LINE",
    "DEFAULT_REFINE_BUDGET",
    "sturm_count",
    "isolate_roots",
    "roots_between",
    "compare_points",
    "rational_between",
    "poly_nonneg",
    "algebraic_sign",
    "as_point",
]

DEFAULT_REFINE_BUDGET = 64


class Infinity:
    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = 1 if sign > 0 else -1

    def __repr__(self) -> str:
        return "POS_INF" if self.sign > 0 else "NEG_INF"

    def __str__(self) -> str:
        return "inf" if self.sign > 0 else "-inf"

    def __eq__(self, other) -> bool:
        return isinstance(other, Infinity) and other.sign == self.sign

    def __hash__(self) -> int:
        return hash(("inf", self.sign))


NEG_INF = Infinity(-1)
POS_INF = Infinity(1)


def _cauchy_bound(ic: list[int]) -> Fraction:
    """A power of two strictly exceeding every root's absolute value."""
    lc = abs(ic[-1])
    b = 1 + Fraction(max(abs(c) for c in ic[:-1]), lc) if len(ic) > 1 else Fraction(1)
    p = Fraction(1)
    while p < b:
        p *= 2
    return p


def _variations_at(seq: list[list[int]], t) -> int:
    if isinstance(t, Infinity):
        return K.variations_inf(seq, t.sign > 0)
    return K.variations(seq, t.numerator, t.denominator)


class AlgebraicPoint:
    """The unique root of ``poly`` inside the isolating interval.

    Either ``lo == hi`` (the root is the rational ``lo``), or ``lo < hi`` and
    ``poly`` takes nonzero values of opposite signs at ``lo`` and ``hi`` with
    exactly one root strictly in between.  ``poly`` is square-free.
    """

    __slots__ = ("poly", "lo", "hi", "_ic")

    def __init__(self, poly: Poly, lo, hi, _check: bool = True):
        self.poly = poly
        self.lo = as_fraction(lo)
        self.hi = as_fraction(hi)
        self._ic = poly.primitive_int()
        if _check:
            if self.lo > self.hi:
                raise ValueError("empty isolating interval")
            if self.lo == self.hi:
                if poly.sign_at(self.lo) != 0:
                    raise ValueError("pinned point is not a root")
            else:
                sl = K.sign_at(self._ic, self.lo.numerator, self.lo.denominator)
                sh = K.sign_at(self._ic, self.hi.numerator, self.hi.denominator)
                if sl == 0 or sh == 0 or sl == sh:
                    raise ValueError("interval does not bracket a simple sign change")
                seq = K.sturm_sequence(self._ic)
                if _variations_at(seq, self.lo) - _variations_at(seq, self.hi) != 1:
                    raise ValueError("interval does not isolate exactly one root")

    @property
    def rational(self) -> Fraction | None:
        return self.lo if self.lo == self.hi else None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def _sign(self, t: Fraction) -> int:
        return K.sign_at(self._ic, t.numerator, t.denominator)

    def refine(self, steps: int = 1) -> "AlgebraicPoint":
        lo, hi = self.lo, self.hi
        if lo == hi:
            return self
        slo = self._sign(lo)
        for _ in range(steps):
            m = (lo + hi) / 2
            sm = self._sign(m)
            if sm == 0:
                lo = hi = m
                break
            if sm == slo:
                lo = m
            else:
                hi = m
        return AlgebraicPoint(self.poly, lo, hi, _check=False)

    def refine_to(self, width) -> "AlgebraicPoint":
        p = self
        width = as_fraction(width)
        while p.lo != p.hi and p.hi - p.lo > width:
            p = p.refine()
        return p

    def sign_of(self, q: Poly, budget: int = DEFAULT_REFINE_BUDGET) -> int:
        """Exact sign of ``q`` at this point."""
        if not q:
            return 0
        if self.lo == self.hi:
            return q.sign_at(self.lo)
        g = Poly.gcd(self.poly, q)
        if g.degree >= 1 and sturm_count(g, self.lo, self.hi) > 0:
            return 0
        qi = q.primitive_int()
        seq = K.sturm_sequence(K.primitive(_squarefree_int(q)))
        p = self
        for _ in range(budget + 1):
            if p.lo == p.hi:
                return q.sign_at(p.lo)
            s_lo = K.sign_at(qi, p.lo.numerator, p.lo.denominator)
            if s_lo != 0 and _variations_at(seq, p.lo) == _variations_at(seq, p.hi):
                return s_lo
            p = p.refine()
        raise UnresolvedInterval(f"could not certify the sign of {q} at {self}")

    def approx(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __repr__(self) -> str:
        if self.lo == self.hi:
            return f"AlgebraicPoint({self.lo})"
        return f"AlgebraicPoint(root of {self.poly} in ({self.lo}, {self.hi}))"

    def __eq__(self, other) -> bool:
        if isinstance(other, (AlgebraicPoint, Fraction, int)):
            return compare_points(self, other) == 0
        return NotImplemented

    def __hash__(self) -> int:
        # must agree for equal points given by different polynomials, so the
        # irrational case hashes the exact integer part only
        if self.lo == self.hi:
            return hash(self.lo)
        return hash(("algebraic", self.floor()))

    def floor(self) -> int:
        p = self
        while True:
            if p.lo == p.hi:
                return p.lo.numerator // p.lo.denominator
            a, b = p.lo.numerator // p.lo.denominator, p.hi.numerator // p.hi.denominator
            if a == b or Fraction(b) == p.hi:
                return a
            p = p.refine()

    def to_json(self):
        if self.lo == self.hi:
            return f"{self.lo.numerator}/{self.lo.denominator}"
        return {
            "poly": self.poly.to_json(),
            "lo": f"{self.lo.numerator}/{self.lo.denominator}",
            "hi": f"{self.hi.numerator}/{self.hi.denominator}",
        }


Point = Union[Fraction, AlgebraicPoint, Infinity]


def as_point(t) -> Point:
    if isinstance(t, (AlgebraicPoint, Infinity)):
        return t
    return as_fraction(t)


def _squarefree_int(p: Poly) -> list[int]:
    return p.squarefree_part().primitive_int()


def sturm_count(p: Poly, a=NEG_INF, b=POS_INF) -> int:
    """Number of distinct real roots of ``p`` in ``(a, b]``."""
    if not p:
        raise ZeroPolynomial("sturm_count of the zero polynomial")
    if p.degree == 0:
        return 0
    a = as_point(a)
    b = as_point(b)
    seq = K.sturm_sequence(_squarefree_int(p))
    if isinstance(b, Infinity) and b.sign < 0 or isinstance(a, Infinity) and a.sign > 0:
        return 0
    return max(0, _variations_at(seq, a) - _variations_at(seq, b))


def isolate_roots(p: Poly) -> tuple[AlgebraicPoint, ...]:
    """Isolating intervals for the distinct real roots of ``p``, ascending.

    Closed intervals are pairwise disjoint.
    """
    if not p:
        raise ZeroPolynomial("isolate_roots of the zero polynomial")
    if p.degree == 0:
        return ()
    sq = p.squarefree_part()
    ic = sq.primitive_int()
    seq = K.sturm_sequence(ic)
    bound = _cauchy_bound(ic)

    def sign(t: Fraction) -> int:
        return K.sign_at(ic, t.numerator, t.denominator)

    found: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound, _variations_at(seq, -bound) - _variations_at(seq, bound))]
    while stack:
        lo, hi, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            if sign(hi) == 0:
                found.append((hi, hi))
                continue
            m = (lo + hi) / 2
            if sign(m) == 0:
                found.append((m, m))
                continue
            if sign(lo) != 0:
                found.append((lo, hi))
                continue
        m = (lo + hi) / 2
        vm = _variations_at(seq, m)
        k_left = _variations_at(seq, lo) - vm
        stack.append((m, hi, k - k_left))
        stack.append((lo, m, k_left))
    found.sort()
    points = [_pin_rational(AlgebraicPoint(sq, lo, hi, _check=False), ic) for lo, hi in found]
    # separate touching closed intervals
    for i in range(len(points) - 1):
        while points[i].hi >= points[i + 1].lo:
            points[i] = points[i].refine()
            points[i + 1] = points[i + 1].refine()
    return tuple(points)


def _pin_rational(p: AlgebraicPoint, ic: list[int]) -> AlgebraicPoint:
    """Pin ``p`` to an exact rational if it is one.

    A rational root of a primitive integer polynomial has denominator at most
    ``|lc|``; two such fractions are at least ``1/lc^2`` apart.
    """
    if p.lo == p.hi:
        return p
    lc = abs(ic[-1])
    limit = Fraction(1, 2 * lc * lc)
    while p.lo != p.hi and p.hi - p.lo >= limit:
        p = p.refine()
    if p.lo == p.hi:
        return p
    cand = p.approx().limit_denominator(lc)
    if p.lo < cand < p.hi and K.sign_at(ic, cand.numerator, cand.denominator) == 0:
        return AlgebraicPoint(p.poly, cand, cand, _check=False)
    return p


def _interval(p: Point) -> tuple[Fraction, Fraction, bool]:
    """Rational enclosure ``(l, h, exact)`` of a finite point."""
    if isinstance(p, AlgebraicPoint):
        return p.lo, p.hi, p.lo == p.hi
    return p, p, True


def compare_points(a, b) -> int:
    """Exact three-way comparison of two points."""
    a = as_point(a)
    b = as_point(b)
    if isinstance(a, Infinity) or isinstance(b, Infinity):
        sa = a.sign if isinstance(a, Infinity) else 0
        sb = b.sign if isinstance(b, Infinity) else 0
        return (sa > sb) - (sa < sb)
    if isinstance(a, AlgebraicPoint) and a.rational is not None:
        a = a.rational
    if isinstance(b, AlgebraicPoint) and b.rational is not None:
        b = b.rational
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return (a > b) - (a < b)
    if isinstance(a, Fraction):
        return -compare_points(b, a)
    # a is an irrational AlgebraicPoint
    if isinstance(b, Fraction):
        if b <= a.lo:
            return 1
        if b >= a.hi:
            return -1
        sb = a._sign(b)
        if sb == 0:
            return 0
        # a < b iff the sign change happens in (lo, b)
        return -1 if sb != a._sign(a.lo) else 1
    lo = max(a.lo, b.lo)
    hi = min(a.hi, b.hi)
    if lo < hi:
        g = Poly.gcd(a.poly, b.poly)
        if g.degree >= 1 and sturm_count(g, lo, hi) > 0:
            return 0
    while True:
        if a.hi <= b.lo:
            return -1
        if b.hi <= a.lo:
            return 1
        a = a.refine()
        b = b.refine()
        if a.rational is not None or b.rational is not None:
            return compare_points(a, b)


def rational_between(a, b) -> Fraction:
    """A rational strictly between the points ``a < b``."""
    a = as_point(a)
    b = as_point(b)
    if compare_points(a, b) >= 0:
        raise ValueError(f"rational_between needs a < b, got {a}, {b}")
    if isinstance(a, Infinity) and isinstance(b, Infinity):
        return Fraction(0)
    if isinstance(a, Infinity):
        lb, _, exact = _interval(b)
        return lb - 1 if exact else lb
    if isinstance(b, Infinity):
        _, ha, exact = _interval(a)
        return ha + 1 if exact else ha
    while True:
        la, ha, ea = _interval(a)
        lb, hb, eb = _interval(b)
        if ha < lb:
            return (ha + lb) / 2
        if ha == lb and not ea and not eb:
            return ha
        if isinstance(a, AlgebraicPoint) and not ea:
            a = a.refine()
        if isinstance(b, AlgebraicPoint) and not eb:
            b = b.refine()


def roots_between(p: Poly, a=NEG_INF, b=POS_INF) -> list[AlgebraicPoint]:
    """Distinct real roots of ``p`` strictly inside ``(a, b)``, ascending."""
    if not p or p.degree <= 0:
        return []
    out = []
    for r in isolate_roots(p):
        if compare_points(a, r) < 0 and compare_points(r, b) < 0:
            out.append(r)
    return out


class _WholeLine:
    def __repr__(self) -> str:
        return "WHOLE_LINE"


WHOLE_LINE = _WholeLine()


def _sample_points(roots: list[AlgebraicPoint], a: Point, b: Point) -> Iterable[Fraction]:
    pts: list[Point] = [a, *roots, b]
    for left, right in zip(pts, pts[1:]):
        yield rational_between(left, right)


def poly_nonneg(p: Poly, region=WHOLE_LINE) -> bool:
    """Whether ``p(t) >= 0`` for every ``t`` in the region.

    ``region`` is :data:`WHOLE_LINE` or a pair ``(a, b)`` of points with
    ``a <= b`` (either end may be infinite).
    """
    if region is WHOLE_LINE:
        a, b = NEG_INF, POS_INF
    else:
        a, b = (as_point(t) for t in region)
    c = compare_points(a, b)
    if c > 0:
        raise ValueError("empty region")
    if not p:
        return True
    if p.degree == 0:
        return p.lc > 0
    if c == 0:
        return algebraic_sign(p, a) >= 0
    if isinstance(a, AlgebraicPoint) or isinstance(b, AlgebraicPoint):
        return poly_nonneg_isolating(p, (a, b))
    # no sign change inside (a, b) and a positive sign somewhere there
    odd = odd_multiplicity_part(p)
    if odd.degree > 0:
        inside = sturm_count(odd, a, b) - (0 if isinstance(b, Infinity) or odd.sign_at(b) else 1)
        if inside:
            return False
    return _interior_sign(p, a, b) > 0


def poly_nonneg_isolating(p: Poly, region=WHOLE_LINE) -> bool:
    """Same verdict as :func:`poly_nonneg`, by sampling between isolated roots."""
    a, b = (NEG_INF, POS_INF) if region is WHOLE_LINE else (as_point(t) for t in region)
    if compare_points(a, b) > 0:
        raise ValueError("empty region")
    if not p:
        return True
    if compare_points(a, b) == 0:
        return algebraic_sign(p, a) >= 0
    roots = roots_between(p, a, b)
    return all(p.sign_at(t) > 0 for t in _sample_points(roots, a, b))


def odd_multiplicity_part(p: Poly) -> Poly:
    """Product of the square-free factors of ``p`` whose multiplicity is odd (monic)."""
    g = Poly.gcd(p, p.derivative())
    w = p.exact_div(g)
    out, i = Poly.const(1), 1
    while w.degree > 0:
        y = Poly.gcd(w, g)
        z = w.exact_div(y)
        if i % 2:
            out = out * z
        g = g.exact_div(y)
        w = y
        i += 1
    return out.monic() if out.degree > 0 else Poly.const(1)


def _interior_sign(p: Poly, a: Point, b: Point) -> int:
    """Sign of ``p`` on (a, b) away from its roots; ``p`` has no sign change there."""
    if isinstance(a, Infinity):
        return p.sign_at_infinity(False)
    if isinstance(b, Infinity):
        return p.sign_at_infinity(True)
    n = p.degree + 2
    for k in range(1, n):
        sgn = p.sign_at(a + (b - a) * Fraction(k, n))
        if sgn:
            return sgn
    raise AssertionError("more roots than the degree")


def algebraic_sign(p: Poly, pt) -> int:
    """Exact sign of ``p`` at a rational, algebraic, or infinite point."""
    pt = as_point(pt)
    if isinstance(pt, Infinity):
        return p.sign_at_infinity(pt.sign > 0)
    if isinstance(pt, AlgebraicPoint):
        return pt.sign_of(p)
    return p.sign_at(pt)
