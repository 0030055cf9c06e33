"""Almost-everywhere defined continuous functions on the compactified line.

An element is stored as its maximal continuous representative: a piecewise
rational function with finitely many breakpoints.  Two classes are equal iff
their canonical forms coincide, so class equality is structural.

Canonical form
    * ``breakpoints`` strictly ascending finite points (rational or algebraic);
    * ``pieces[i]`` is the rational function on the open interval between
      ``breakpoints[i-1]`` and ``breakpoints[i]`` and has no pole inside it;
    * a breakpoint separates two equal pieces only if it is a pole.

The exceptional set (complement of the maximal domain) consists of the
breakpoints where the one-sided limits are infinite or disagree, plus the
point at infinity unless both end limits are finite and equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParseError, PreconditionFailed
from .exact import RatFun, parse_piecewise, parse_ratfun
from .exact.poly import Poly, as_fraction
from .exact.roots import (
    NEG_INF,
    POS_INF,
    AlgebraicPoint,
    Infinity,
    Point,
    algebraic_sign,
    as_point,
    compare_points,
    poly_nonneg,
    rational_between,
    roots_between,
)

__all__ = [
    "ExceptionalSet",
    "PiecewiseRat",
    "AeClass",
    "ae_add",
    "ae_mul",
    "ae_leq",
    "max_domain",
    "sup",
    "inf",
    "f_ring_condition_check",
    "strong_loc_check_ae",
    "parse_ae",
]


def _norm_point(p) -> Point:
    p = as_point(p)
    if isinstance(p, AlgebraicPoint) and p.rational is not None:
        return p.rational
    return p


def _point_json(p):
    if isinstance(p, AlgebraicPoint):
        return p.to_json()
    return f"{p.numerator}/{p.denominator}"


def _point_from_json(d):
    if isinstance(d, str):
        return Fraction(d)
    return AlgebraicPoint(Poly.from_json(d["poly"]), Fraction(d["lo"]), Fraction(d["hi"]))


def _point_str(p) -> str:
    if isinstance(p, AlgebraicPoint):
        return f"root({p.poly}; {p.lo}..{p.hi})"
    return str(p)


@dataclass(frozen=True)
class ExceptionalSet:
    points: tuple
    infinity: bool

    def __len__(self) -> int:
        return len(self.points) + int(self.infinity)

    def is_empty(self) -> bool:
        return len(self) == 0

    def contains(self, t) -> bool:
        if isinstance(t, Infinity) or t == "inf":
            return self.infinity
        return any(compare_points(p, t) == 0 for p in self.points)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExceptionalSet):
            return NotImplemented
        return (
            self.infinity == other.infinity
            and len(self.points) == len(other.points)
            and all(compare_points(a, b) == 0 for a, b in zip(self.points, other.points))
        )

    def __hash__(self) -> int:
        return hash((len(self.points), self.infinity))

    def to_json(self) -> dict:
        return {"points": [_point_json(p) for p in self.points], "infinity": self.infinity}

    def __str__(self) -> str:
        items = [_point_str(p) for p in self.points] + (["inf"] if self.infinity else [])
        return "{" + ", ".join(items) + "}"


def _is_pole(f: RatFun, b) -> bool:
    return f.den.degree > 0 and algebraic_sign(f.den, b) == 0


def _merge_points(a: Sequence, b: Sequence) -> list:
    out: list = []
    i = j = 0
    while i < len(a) or j < len(b):
        if j == len(b):
            nxt = a[i]
            i += 1
        elif i == len(a):
            nxt = b[j]
            j += 1
        else:
            c = compare_points(a[i], b[j])
            if c <= 0:
                nxt = a[i]
                i += 1
                if c == 0:
                    j += 1
            else:
                nxt = b[j]
                j += 1
        if out and compare_points(out[-1], nxt) == 0:
            continue
        out.append(nxt)
    return out


class PiecewiseRat:
    """Canonical maximal-domain representative of an a.e. class."""

    __slots__ = ("breakpoints", "pieces", "_exc")

    def __init__(self, breakpoints: Iterable, pieces: Iterable[RatFun]):
        bps = [_norm_point(b) for b in breakpoints]
        ps = [p if isinstance(p, RatFun) else RatFun(p) for p in pieces]
        if len(ps) != len(bps) + 1:
            raise ValueError("need exactly one piece per interval")
        for u, v in zip(bps, bps[1:]):
            if compare_points(u, v) >= 0:
                raise ValueError("breakpoints must be strictly ascending")
        bps, ps = _canonical(bps, ps)
        self.breakpoints: tuple = tuple(bps)
        self.pieces: tuple[RatFun, ...] = tuple(ps)
        self._exc = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c) -> "PiecewiseRat":
        return cls((), (RatFun.const(c),))

    @classmethod
    def from_ratfun(cls, f) -> "PiecewiseRat":
        if isinstance(f, str):
            f = parse_ratfun(f)
        elif not isinstance(f, RatFun):
            f = RatFun(f)
        return cls((), (f,))

    @classmethod
    def from_pieces(cls, pieces: Sequence[tuple]) -> "PiecewiseRat":
        """From ``[(lo, hi, f), ...]`` tiling the line left to right."""
        if not pieces:
            raise ValueError("no pieces")
        pieces = sorted(pieces, key=lambda t: _sort_key(t[0]))
        if not (isinstance(pieces[0][0], Infinity) and pieces[0][0].sign < 0):
            raise ValueError("first piece must start at -inf")
        if not (isinstance(pieces[-1][1], Infinity) and pieces[-1][1].sign > 0):
            raise ValueError("last piece must end at +inf")
        bps = []
        for (lo, hi, _), (lo2, _, _) in zip(pieces, pieces[1:]):
            if compare_points(hi, lo2) != 0:
                raise ValueError(f"pieces do not tile the line at {hi} / {lo2}")
            bps.append(hi)
        for lo, hi, _ in pieces:
            if compare_points(lo, hi) >= 0:
                raise ValueError(f"empty piece ({lo}, {hi})")
        return cls(bps, [f if isinstance(f, RatFun) else RatFun(f) for _, _, f in pieces])

    # -- structure ----------------------------------------------------------

    def intervals(self) -> list[tuple[Point, Point, RatFun]]:
        ends = [NEG_INF, *self.breakpoints, POS_INF]
        return [(ends[i], ends[i + 1], f) for i, f in enumerate(self.pieces)]

    def exceptional(self) -> ExceptionalSet:
        if self._exc is None:
            pts = []
            for i, b in enumerate(self.breakpoints):
                left, right = self.pieces[i], self.pieces[i + 1]
                if _is_pole(left, b) or _is_pole(right, b):
                    pts.append(b)
                elif algebraic_sign((left - right).num, b) != 0:
                    pts.append(b)
            lo = self.pieces[0].limit_at_infinity(False)
            hi = self.pieces[-1].limit_at_infinity(True)
            self._exc = ExceptionalSet(tuple(pts), lo is None or hi is None or lo != hi)
        return self._exc

    def is_ratfun(self) -> bool:
        return len(set(self.pieces)) == 1

    def value_at(self, t) -> Fraction | None:
        """Value of the maximal representative at a rational point or ``inf``.

        ``None`` if the point is exceptional.
        """
        if isinstance(t, Infinity) or t == "inf":
            if self.exceptional().infinity:
                return None
            return self.pieces[-1].limit_at_infinity()
        t = as_fraction(t)
        for i, b in enumerate(self.breakpoints):
            c = compare_points(t, b)
            if c < 0:
                return self.pieces[i](t)
            if c == 0:
                if self.exceptional().contains(t):
                    return None
                return self.pieces[i](t)
        return self.pieces[-1](t)

    def sample_points(self) -> list[Fraction]:
        """One rational point inside every open interval of the partition."""
        return [rational_between(lo, hi) for lo, hi, _ in self.intervals()]

    def negativity_witness(self) -> Fraction | None:
        """A rational point where the function is negative, if any."""
        for lo, hi, f in self.intervals():
            sp = f.sign_poly()
            if poly_nonneg(sp, (lo, hi)):
                continue
            pts = [lo, *roots_between(sp, lo, hi), hi]
            for u, v in zip(pts, pts[1:]):
                m = rational_between(u, v)
                if f(m) < 0:
                    return m
        return None

    # -- equality -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, RatFun, Poly)):
            other = PiecewiseRat.from_ratfun(RatFun(other) if not isinstance(other, RatFun) else other)
        if not isinstance(other, PiecewiseRat):
            return NotImplemented
        return (
            self.pieces == other.pieces
            and len(self.breakpoints) == len(other.breakpoints)
            and all(compare_points(a, b) == 0 for a, b in zip(self.breakpoints, other.breakpoints))
        )

    def __hash__(self) -> int:
        return hash(self.pieces)

    # -- arithmetic ---------------------------------------------------------

    def _combine(self, other: "PiecewiseRat", op) -> "PiecewiseRat":
        bps = _merge_points(self.breakpoints, other.breakpoints)
        return PiecewiseRat(bps, [op(f, g) for f, g in _aligned(self, other, bps)])

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._combine(other, lambda f, g: f + g)

    __radd__ = __add__

    def __neg__(self) -> "PiecewiseRat":
        return PiecewiseRat(self.breakpoints, [-f for f in self.pieces])

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._combine(other, lambda f, g: f - g)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._combine(other, lambda f, g: f * g)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PiecewiseRat":
        if n < 0:
            raise ValueError("negative exponent")
        return PiecewiseRat(self.breakpoints, [f**n for f in self.pieces])

    def inverse(self) -> "PiecewiseRat":
        """Pointwise reciprocal; zeros of the pieces become exceptional points."""
        if any(not f for f in self.pieces):
            raise ZeroDivisionError("class vanishes on an interval")
        return PiecewiseRat(self.breakpoints, [f.inverse() for f in self.pieces])

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def _select(self, other: "PiecewiseRat", want_max: bool) -> "PiecewiseRat":
        bps = _merge_points(self.breakpoints, other.breakpoints)
        ends = [NEG_INF, *bps, POS_INF]
        out_b: list = []
        out_p: list[RatFun] = []
        for i, (f, g) in enumerate(_aligned(self, other, bps)):
            lo, hi = ends[i], ends[i + 1]
            d = f - g
            cuts = roots_between(d.num, lo, hi) if d else []
            sub = [lo, *cuts, hi]
            for k, (u, v) in enumerate(zip(sub, sub[1:])):
                if k:
                    out_b.append(u)
                if not d:
                    out_p.append(f)
                    continue
                pos = d(rational_between(u, v)) > 0
                out_p.append(f if pos == want_max else g)
            if i < len(bps):
                out_b.append(bps[i])
        return PiecewiseRat(out_b, out_p)

    # -- presentation -------------------------------------------------------

    def __repr__(self) -> str:
        return f"AeClass({self})"

    def __str__(self) -> str:
        if self.is_ratfun():
            return str(self.pieces[0])
        parts = [f"({_point_str(lo)},{_point_str(hi)}): {f}" for lo, hi, f in self.intervals()]
        return "piecewise{ " + "; ".join(parts) + " }"

    def to_json(self) -> dict:
        return {
            "breakpoints": [_point_json(b) for b in self.breakpoints],
            "pieces": [f.to_json() for f in self.pieces],
            "exceptional": self.exceptional().to_json(),
        }

    @classmethod
    def from_json(cls, data) -> "PiecewiseRat":
        return cls([_point_from_json(b) for b in data["breakpoints"]], [RatFun.from_json(p) for p in data["pieces"]])


AeClass = PiecewiseRat


def _sort_key(p):
    if isinstance(p, Infinity):
        return (p.sign, Fraction(0))
    if isinstance(p, AlgebraicPoint):
        return (0, p.lo)
    return (0, as_fraction(p))


def _aligned(a: PiecewiseRat, b: PiecewiseRat, bps: Sequence) -> list[tuple[RatFun, RatFun]]:
    """Pieces of ``a`` and ``b`` over the refinement ``bps`` of both partitions."""
    out = []
    ia = ib = 0
    for i in range(len(bps) + 1):
        out.append((a.pieces[ia], b.pieces[ib]))
        if i < len(bps):
            if ia < len(a.breakpoints) and compare_points(a.breakpoints[ia], bps[i]) == 0:
                ia += 1
            if ib < len(b.breakpoints) and compare_points(b.breakpoints[ib], bps[i]) == 0:
                ib += 1
    return out


def _canonical(bps: list, pieces: list[RatFun]) -> tuple[list, list[RatFun]]:
    ends = [NEG_INF, *bps, POS_INF]
    nb: list = []
    np_: list[RatFun] = []
    for i, f in enumerate(pieces):
        if f.den.degree > 0:
            for r in roots_between(f.den, ends[i], ends[i + 1]):
                np_.append(f)
                nb.append(_norm_point(r))
        np_.append(f)
        if i < len(bps):
            nb.append(bps[i])
    out_b: list = []
    out_p = [np_[0]]
    for b, f in zip(nb, np_[1:]):
        prev = out_p[-1]
        if f == prev and not _is_pole(prev, b):
            continue
        out_b.append(b)
        out_p.append(f)
    return out_b, out_p


def _coerce(v) -> PiecewiseRat | None:
    if isinstance(v, PiecewiseRat):
        return v
    if isinstance(v, (int, Fraction)):
        return PiecewiseRat.const(v)
    if isinstance(v, (RatFun, Poly)):
        return PiecewiseRat.from_ratfun(v)
    return None


def parse_ae(text: str) -> PiecewiseRat:
    """Rational-function expression or ``piecewise{...}`` literal."""
    if text.strip().startswith("piecewise"):
        try:
            return PiecewiseRat.from_pieces(parse_piecewise(text))
        except ValueError as e:
            if isinstance(e, ParseError):
                raise
            raise ParseError(str(e)) from e
    return PiecewiseRat.from_ratfun(parse_ratfun(text))


# -- module-level operations ------------------------------------------------


def ae_add(a: AeClass, b: AeClass) -> AeClass:
    return a + b


def ae_mul(a: AeClass, b: AeClass) -> AeClass:
    return a * b


def ae_leq(a: AeClass, b: AeClass) -> bool:
    """``a <= b`` off the exceptional set (equivalently: everywhere it is defined)."""
    d = _coerce(b) - _coerce(a)
    return all(poly_nonneg(f.sign_poly(), (lo, hi)) for lo, hi, f in d.intervals())


def max_domain(a: AeClass) -> ExceptionalSet:
    return a.exceptional()


def sup(a: AeClass, b: AeClass) -> AeClass:
    return _coerce(a)._select(_coerce(b), True)


def inf(a: AeClass, b: AeClass) -> AeClass:
    return _coerce(a)._select(_coerce(b), False)


def f_ring_condition_check(r: AeClass, s: AeClass, t: AeClass) -> bool:
    zero = PiecewiseRat.const(0)
    if inf(r, s) != zero:
        raise PreconditionFailed("r and s are not disjoint (r inf s != 0)")
    if not ae_leq(zero, t):
        raise PreconditionFailed("t is not positive")
    return inf(r * t, s) == zero


def strong_loc_check_ae(f: AeClass, s: AeClass) -> bool:
    if not ae_leq(PiecewiseRat.const(1), s):
        raise PreconditionFailed("s is not in 1 + cone")
    zero = PiecewiseRat.const(0)
    return (not ae_leq(zero, f * s)) or ae_leq(zero, f)
