"""Extended characters and the extended Gelfand transform on the line model.

Characters of the bounded localization of ``Q[x]`` and ``Q(x)`` are modelled
by the points of the compactified line: a finite point ``t`` acts by
evaluation, the point at infinity by the common limit at both ends.  For
``germ0`` the only character is evaluation at 0; for ``ae`` the transform is
the identity of the function model.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from . import aefun
from .aefun import PiecewiseRat
from .errors import (
    ApproximationUnachievable,
    NotLocalizable,
    PreconditionFailed,
    UnsupportedInstance,
)
from .exact import Poly, RatFun, isolate_roots, poly_nonneg
from .exact.poly import as_fraction
from .exact.roots import AlgebraicPoint, Infinity, algebraic_sign, compare_points
from .localization import BddElem, LocPair, iota, is_bounded, make_bdd, make_loc
from .poring import (
    AeRing,
    Elem,
    GermRing,
    InConeClosure,
    PolyRing,
    QRing,
    RatFunRing,
    RingInstance,
    ddagger_decide,
    dominating_loc_bound,
    get_instance,
    germ_cone_member,
    in_cone,
    leq,
    loc_member,
)

# ---------------------------------------------------------------------------
# character points


@dataclass(frozen=True)
class FinitePoint:
    t: Union[Fraction, AlgebraicPoint]

    def __str__(self) -> str:
        return str(self.t)


@dataclass(frozen=True)
class InfinityPoint:
    def __str__(self) -> str:
        return "inf"


INFINITY = InfinityPoint()
CharPoint = Union[FinitePoint, InfinityPoint]


def char_point(v) -> CharPoint:
    if isinstance(v, (FinitePoint, InfinityPoint)):
        return v
    if isinstance(v, Infinity) or (isinstance(v, str) and v.strip() in ("inf", "+inf", "-inf", "oo")):
        return INFINITY
    if isinstance(v, AlgebraicPoint):
        return FinitePoint(v.rational if v.rational is not None else v)
    if isinstance(v, str):
        from .exact import parse_rational

        return FinitePoint(parse_rational(v))
    return FinitePoint(as_fraction(v))


@dataclass(frozen=True)
class AlgebraicValue:
    """The exact value ``f(t)`` of a rational function at an algebraic point."""

    f: RatFun
    at: AlgebraicPoint

    def sign(self) -> int:
        return algebraic_sign(self.f.sign_poly(), self.at)

    def compare(self, c) -> int:
        return algebraic_sign((self.f - as_fraction(c)).sign_poly(), self.at)

    def approx(self, width=Fraction(1, 2**30)) -> Fraction:
        return self.f(self.at.refine_to(width).approx())

    def __str__(self) -> str:
        return f"({self.f})({self.at})"


def _as_function(a) -> RatFun:
    """Rational function underlying a bounded element (Q, Q[x] or Q(x))."""
    if isinstance(a, BddElem):
        a = a.value
    if isinstance(a, LocPair):
        if isinstance(a.ring, (GermRing, AeRing)):
            raise UnsupportedInstance(f"the line model does not cover {a.ring.name}")
        return a.as_ratfun()
    if isinstance(a, Elem):
        return _as_function(iota(a))
    if isinstance(a, RatFun):
        return a
    return RatFun(a)


def _eval(phi: CharPoint, f: RatFun):
    if isinstance(phi, InfinityPoint):
        v = f.limit_at_infinity()
        if v is None:
            raise PreconditionFailed(f"{f} is unbounded at infinity")
        return v
    t = phi.t
    if isinstance(t, AlgebraicPoint) and t.rational is None:
        if f.den.degree > 0 and algebraic_sign(f.den, t) == 0:
            raise PreconditionFailed(f"{f} has a pole at {t}")
        return AlgebraicValue(f, t)
    t = t.rational if isinstance(t, AlgebraicPoint) else t
    if f.has_pole_at(t):
        raise PreconditionFailed(f"{f} has a pole at {t}")
    return f(t)


def char_eval(phi: CharPoint, a) -> Fraction | AlgebraicValue:
    """Value of the character ``phi`` on a bounded element."""
    return _eval(char_point(phi), _as_function(a))


@dataclass(frozen=True)
class SubbasisQuery:
    a: object
    lo: object = None  # None means -inf
    hi: object = None  # None means +inf

    def __post_init__(self):
        if self.lo is not None and self.hi is not None and as_fraction(self.lo) >= as_fraction(self.hi):
            raise ValueError("empty interval")


def _cmp(v, c) -> int:
    if isinstance(v, AlgebraicValue):
        return v.compare(c)
    c = as_fraction(c)
    return (v > c) - (v < c)


def subbasis_member(phi: CharPoint, q: SubbasisQuery) -> bool:
    v = char_eval(phi, q.a)
    if q.lo is not None and _cmp(v, q.lo) <= 0:
        return False
    if q.hi is not None and _cmp(v, q.hi) >= 0:
        return False
    return True


# ---------------------------------------------------------------------------
# the domains O_{s<inf}


@dataclass(frozen=True)
class CharDomainSet:
    """``FullCircle`` when nothing is excluded, else ``CofiniteOnLine``."""

    excluded: tuple
    infinity: bool

    @property
    def kind(self) -> str:
        return "FullCircle" if not self.excluded and not self.infinity else "CofiniteOnLine"

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharDomainSet):
            return NotImplemented
        return (
            self.infinity == other.infinity
            and len(self.excluded) == len(other.excluded)
            and all(compare_points(a, b) == 0 for a, b in zip(self.excluded, other.excluded))
        )

    def __hash__(self) -> int:
        return hash((len(self.excluded), self.infinity))

    def contains(self, phi) -> bool:
        phi = char_point(phi)
        if isinstance(phi, InfinityPoint):
            return not self.infinity
        return not any(compare_points(p, phi.t) == 0 for p in self.excluded)

    def to_json(self) -> dict:
        from .aefun import _point_json

        return {
            "kind": self.kind,
            "excluded": [_point_json(p) for p in self.excluded] + (["inf"] if self.infinity else []),
        }

    def __str__(self) -> str:
        if self.kind == "FullCircle":
            return "FullCircle"
        items = [str(p) for p in self.excluded] + (["inf"] if self.infinity else [])
        return "CofiniteOnLine(excluded={" + ", ".join(items) + "})"


def _loc_function(s) -> tuple[RingInstance, RatFun]:
    if not isinstance(s, Elem):
        raise TypeError("expected a ring element")
    R = s.ring
    if not isinstance(R, (QRing, PolyRing, RatFunRing)):
        raise UnsupportedInstance(f"the line model does not cover {R.name}")
    if not loc_member(R, s):
        raise NotLocalizable(f"{s} is not in Loc({R.name})")
    return R, _as_function(s)


def O_lt_infty(s: Elem) -> CharDomainSet:
    """Characters where ``1/s`` is positive: the zeros of ``1/s`` are excluded."""
    _, f = _loc_function(s)
    inv = f.inverse()
    zeros = tuple(
        r.rational if r.rational is not None else r for r in (isolate_roots(inv.num) if inv.num.degree > 0 else ())
    )
    return CharDomainSet(zeros, inv.limit_at_infinity() == 0)


def domain_product_check(q: Elem, s: Elem) -> bool:
    a, b, c = O_lt_infty(q), O_lt_infty(s), O_lt_infty(q * s)
    from .aefun import _merge_points

    union = CharDomainSet(tuple(_merge_points(a.excluded, b.excluded)), a.infinity or b.infinity)
    return union == c


# ---------------------------------------------------------------------------
# the transform


def model_function(r: Elem, s: Elem) -> RatFun:
    """``phi -> phi(1/s)^{-1} phi(r/s)`` as a rational function on the line."""
    R = r.ring
    rs = make_loc(R, r, s)
    inv = make_loc(R, R.one(), s)
    if not (is_bounded(rs) and is_bounded(inv)):
        raise PreconditionFailed(f"{r}/{s} or 1/{s} is not bounded")
    return _as_function(rs) / _as_function(inv)


def gelfand_transform(r: Elem, s: Elem | None = None) -> PiecewiseRat:
    """The maximal-domain class of the transform of ``r``."""
    R = r.ring
    if isinstance(R, AeRing):
        return r.payload
    if isinstance(R, GermRing):
        # one character (evaluation at 0): the transform is the constant r(0)
        return PiecewiseRat.const(r.payload[0])
    if s is None:
        s = dominating_loc_bound(R, r)
    return PiecewiseRat.from_ratfun(model_function(r, s))


def representative_independence_check(r: Elem, s: Elem, s2: Elem) -> bool:
    f1, f2 = model_function(r, s), model_function(r, s2)
    d1, d2 = O_lt_infty(s), O_lt_infty(s2)
    if f1 != f2:
        return False
    # pointwise agreement on sample characters of the common domain
    pts = [FinitePoint(Fraction(k, 2)) for k in range(-6, 7)] + [INFINITY]
    for phi in pts:
        if d1.contains(phi) and d2.contains(phi):
            try:
                if _eval(phi, f1) != _eval(phi, f2):
                    return False
            except PreconditionFailed:
                return False
    return True


@dataclass(frozen=True)
class Agree:
    verdict: bool
    name: str = field(default="Agree", init=False)


@dataclass(frozen=True)
class Disagree:
    transform_positive: bool
    in_closure: bool
    name: str = field(default="Disagree", init=False)


def positivity_equiv_check(r: Elem):
    """Compare positivity of the transform with membership in the cone closure."""
    lhs = aefun.ae_leq(PiecewiseRat.const(0), gelfand_transform(r))
    rhs = isinstance(ddagger_decide(r.ring, r), InConeClosure)
    return Agree(lhs) if lhs == rhs else Disagree(lhs, rhs)


def kernel_check(r: Elem, s: Elem) -> bool:
    """Whether ``-s <= n r <= s`` for every natural ``n`` (requires ``s >= 0``)."""
    R = r.ring
    if not in_cone(R, s):
        raise PreconditionFailed(f"{s} is not in the cone")
    if isinstance(R, GermRing):
        rp, sp = r.payload, s.payload
        if not rp:
            return True
        if not sp:
            return False
        # s dominates every multiple of r iff s has strictly lower order
        return sp.order() < rp.order()
    # archimedean instances: only r = 0 qualifies
    return r == R.zero()


def kernel_failure(r: Elem, s: Elem) -> int | None:
    """A natural ``n`` with ``s - n r`` or ``s + n r`` outside the cone, if one exists."""
    R = r.ring
    if kernel_check(r, s):
        return None
    if isinstance(R, GermRing):
        n = 1
        while True:
            if not (germ_cone_member((s - r * n).payload) and germ_cone_member((s + r * n).payload)):
                return n
            n *= 2
    n = 1
    while True:
        if not (in_cone(R, s - r * n) and in_cone(R, s + r * n)):
            return n
        n *= 2


def kernel_witness(r: Elem) -> Elem | None:
    """For a germ with ``r(0) = 0``: the cone element ``x^j`` (largest even ``j`` below the order)."""
    R = r.ring
    if not isinstance(R, GermRing):
        return R.zero() if r == R.zero() else None
    p = r.payload
    if not p:
        return R.zero()
    m = p.order()
    if m == 0:
        return None
    j = m - 1 if (m - 1) % 2 == 0 else m - 2
    return R.elem(Poly.monomial(j))


@dataclass(frozen=True)
class DensityReport:
    dense: bool
    domain: CharDomainSet
    transform_exceptional: object
    domains_match: bool


def density_check(q: Elem) -> DensityReport:
    dom = O_lt_infty(q)
    # dense in the circle: every gap between excluded points meets the domain
    from .exact.roots import NEG_INF, POS_INF, rational_between

    ends = [NEG_INF, *dom.excluded, POS_INF]
    dense = all(dom.contains(FinitePoint(rational_between(u, v))) for u, v in zip(ends, ends[1:]))
    exc = aefun.max_domain(gelfand_transform(q))
    match = exc.infinity == dom.infinity and len(exc.points) == len(dom.excluded) and all(
        compare_points(a, b) == 0 for a, b in zip(exc.points, dom.excluded)
    )
    return DensityReport(dense, dom, exc, match)


# ---------------------------------------------------------------------------
# restriction of a character to the ring


@dataclass(frozen=True)
class CharRestriction:
    phi: CharPoint

    def contains(self, r: Elem) -> bool:
        f = _as_function(r)
        if isinstance(self.phi, InfinityPoint):
            return f.bounded_at_infinity()
        t = self.phi.t
        return not (f.den.degree > 0 and algebraic_sign(f.den, t) == 0)

    def value(self, r: Elem):
        if not self.contains(r):
            raise PreconditionFailed(f"{r} is not in the domain of the restricted character")
        return _eval(self.phi, _as_function(r))

    def check_laws(self, samples: Sequence[Elem]) -> bool:
        """Subring and positive-morphism laws on the members among ``samples``."""
        if not samples:
            return True
        R = samples[0].ring
        one = R.one()
        if not self.contains(one) or self.value(one) != 1:
            return False
        members = [r for r in samples if self.contains(r)]
        for a in members:
            if in_cone(R, a) and _cmp(self.value(a), 0) < 0:
                return False
            for b in members:
                if not (self.contains(a + b) and self.contains(a * b)):
                    return False
                if self.value(a + b) != self.value(a) + self.value(b):
                    return False
                if self.value(a * b) != self.value(a) * self.value(b):
                    return False
        return True


def char_restriction(phi) -> CharRestriction:
    return CharRestriction(char_point(phi))


# ---------------------------------------------------------------------------
# sigma-boundedness


def sigma_element(R: RingInstance, n: int) -> Elem:
    return R.elem(Poly((1, 0, 1)) ** n * n)


def covers(r: Elem, n: int) -> bool:
    s = sigma_element(r.ring, n)
    return leq(r.ring, -s, r) and leq(r.ring, r, s)


@dataclass(frozen=True)
class SigmaReport:
    ring: str
    sequence: str
    covering: tuple
    k_fin: str
    embedding_verified: bool | None
    flagged: bool


def sigma_bounded_suite(R, samples: Sequence[Elem], pairs: Sequence[tuple[Elem, Elem]] = (), n_cap: int = 64):
    R = get_instance(R)
    if not isinstance(R, (PolyRing, RatFunRing)):
        raise UnsupportedInstance("sigma-boundedness suite covers Q[x] and Q(x)")
    covering = []
    for r in samples:
        n_found = None
        for n in range(1, n_cap + 1):
            if covers(r, n):
                n_found = n
                break
        covering.append((r, n_found))
    if isinstance(R, RatFunRing):
        return SigmaReport(
            R.name,
            "n*(1+x^2)^n",
            tuple(covering),
            "no finite rational point lies in every maximal domain",
            None,
            True,
        )
    ok = all(n is not None for _, n in covering)
    for a, b in pairs:
        # K_fin is the finite line: order there is decided by Sturm
        restricted_leq = poly_nonneg((b - a).payload)
        if leq(R, a, b) != restricted_leq:
            ok = False
        if a != b:
            d = (a - b).payload
            if all(d(Fraction(k)) == 0 for k in range(d.degree + 1)):
                ok = False
    return SigmaReport(R.name, "n*(1+x^2)^n", tuple(covering), "finite line (infinity excluded)", ok, False)


# ---------------------------------------------------------------------------
# separating neighbourhoods


@dataclass(frozen=True)
class SeparatorReport:
    b: BddElem
    lambdas: tuple
    phi_b: Fraction
    far: tuple  # (psi, psi(b)) for every far sample
    near: tuple  # psi that are not far
    ok: bool


def _rational_value(phi: CharPoint, a) -> Fraction:
    v = char_eval(phi, a)
    if isinstance(v, AlgebraicValue):
        raise UnsupportedInstance("separators are built at rational points and infinity")
    return v


def _round_lambda(v: Fraction, eps: Fraction, n: int) -> Fraction:
    # grid 1/N with (N eps)^2 >= n and N eps >= 2 keeps the rounding error within both bounds
    N = 1
    while (N * eps) ** 2 < n or N * eps < 2:
        N *= 2
    lam = Fraction(round(v * N), N)
    if (v - lam) ** 2 > eps * eps / (4 * n) or abs(v - lam) > eps / 4:
        raise ApproximationUnachievable(f"rounding {v} to grid 1/{N} missed the bound")
    return lam


def neighbourhood_separator(phi, a_list: Sequence, eps, psi_samples: Sequence = ()) -> SeparatorReport:
    phi = char_point(phi)
    eps = as_fraction(eps)
    if eps <= 0:
        raise PreconditionFailed("epsilon must be positive")
    n = len(a_list)
    if n < 1:
        raise PreconditionFailed("at least one element is required")
    vals = [_rational_value(phi, a) for a in a_list]
    lambdas = tuple(_round_lambda(v, eps, n) for v in vals)
    locs = [(a.value if isinstance(a, BddElem) else a) for a in a_list]
    R = locs[0].ring
    acc = iota(R.elem(-1))
    for a, lam in zip(locs, lambdas):
        d = a - iota(R.elem(lam))
        acc = acc + d * d * (2 / (eps * eps))
    b = make_bdd(acc)
    phi_b = _rational_value(phi, b)
    ok = phi_b <= Fraction(-1, 2)
    far, near = [], []
    for psi in psi_samples:
        psi = char_point(psi)
        gap = max(abs(_rational_value(psi, a) - v) for a, v in zip(a_list, vals))
        if gap >= eps:
            pb = _rational_value(psi, b)
            far.append((psi, pb))
            ok = ok and pb >= Fraction(1, 8)
        else:
            near.append(psi)
    return SeparatorReport(b, lambdas, phi_b, tuple(far), tuple(near), ok)


def circle_relation_check(phi) -> bool:
    """``u^2 = v(1-v)`` for ``u = phi(x/(1+x^2))``, ``v = phi(1/(1+x^2))``."""
    d = RatFun(Poly((1, 0, 1)))
    u = char_eval(phi, RatFun(Poly.x()) / d)
    v = char_eval(phi, d.inverse())
    if isinstance(u, AlgebraicValue):
        rel = u.f * u.f - v.f * (1 - v.f)
        return algebraic_sign(rel.num, u.at) == 0
    return u * u == v * (1 - v)
