"""Partially ordered commutative rings: concrete instances and decision procedures.

Five instances are registered under their command-line names:

========  ==============================================================
``Q``     rationals with the usual order
``Q[x]``  polynomials, ordered pointwise on the real line
``Q(x)``  rational functions, ordered almost everywhere
``germ0`` polynomial germs at 0, ``f >= 0`` iff ``f >= 0`` near 0
``ae``    piecewise-rational a.e. classes on the compactified line
========  ==============================================================
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Any, Sequence

from . import aefun
from .errors import BudgetExceeded, MixedRings, PreconditionFailed
from .exact import Poly, RatFun, parse_poly, parse_rational, parse_ratfun, poly_nonneg
from .exact.poly import as_fraction
from .symbolic import MPoly, symbols

# ---------------------------------------------------------------------------
# ring instances


class RingInstance:
    name: str = ""
    kind: str = ""
    archimedean: bool = True
    exact_ddagger: bool = True

    def coerce(self, v) -> Any:
        raise NotImplementedError

    def parse_payload(self, text: str) -> Any:
        raise NotImplementedError

    def is_nonneg(self, payload) -> bool:
        raise NotImplementedError

    def payload_json(self, payload):
        return payload.to_json()

    def random_payload(self, rng: random.Random) -> Any:
        raise NotImplementedError

    # element helpers
    def elem(self, v) -> "Elem":
        if isinstance(v, Elem):
            _same(self, v.ring)
            return v
        return Elem(self, self.coerce(v))

    def parse(self, text: str) -> "Elem":
        return Elem(self, self.parse_payload(text))

    def zero(self) -> "Elem":
        return self.elem(0)

    def one(self) -> "Elem":
        return self.elem(1)

    def random_elem(self, rng: random.Random) -> "Elem":
        return Elem(self, self.random_payload(rng))

    def random_nonneg(self, rng: random.Random) -> "Elem":
        """Random cone element: a nonnegative combination of squares plus a cone sample."""
        acc = self.elem(Fraction(rng.randint(0, 4), rng.randint(1, 3)))
        for _ in range(rng.randint(0, 2)):
            a = self.random_elem(rng)
            acc = acc + a * a * Fraction(rng.randint(1, 5), rng.randint(1, 3))
        return acc

    def __repr__(self) -> str:
        return f"<ring {self.name}>"

    def __eq__(self, other) -> bool:
        return isinstance(other, RingInstance) and other.name == self.name

    def __hash__(self) -> int:
        return hash(self.name)


def _rand_frac(rng: random.Random, size: int = 5) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.choice((1, 1, 1, 2, 3)))


def _rand_poly(rng: random.Random, max_deg: int = 4, size: int = 5) -> Poly:
    d = rng.randint(0, max_deg)
    return Poly([_rand_frac(rng, size) for _ in range(d + 1)])


class QRing(RingInstance):
    name = "Q"
    kind = "Q"

    def coerce(self, v):
        if isinstance(v, Poly) and v.degree <= 0:
            return v[0]
        return as_fraction(v)

    def parse_payload(self, text):
        return parse_rational(text)

    def is_nonneg(self, payload) -> bool:
        return payload >= 0

    def payload_json(self, payload):
        return f"{payload.numerator}/{payload.denominator}"

    def random_payload(self, rng):
        return _rand_frac(rng, 9)


class PolyRing(RingInstance):
    name = "Q[x]"
    kind = "PolyQ_pointwise"

    def coerce(self, v):
        if isinstance(v, Poly):
            return v
        if isinstance(v, RatFun):
            return v.as_poly()
        return Poly.const(v)

    def parse_payload(self, text):
        return parse_poly(text)

    def is_nonneg(self, payload) -> bool:
        return poly_nonneg(payload)

    def random_payload(self, rng):
        return _rand_poly(rng)


class RatFunRing(RingInstance):
    name = "Q(x)"
    kind = "RatFunQ_ae"

    def coerce(self, v):
        if isinstance(v, RatFun):
            return v
        return RatFun(v)

    def parse_payload(self, text):
        return parse_ratfun(text)

    def is_nonneg(self, payload) -> bool:
        # a.e. nonnegativity of num/den equals global nonnegativity of num*den
        return poly_nonneg(payload.sign_poly())

    def random_payload(self, rng):
        num = _rand_poly(rng, 3)
        den = _rand_poly(rng, 2)
        while not den:
            den = _rand_poly(rng, 2)
        return RatFun(num, den)


def germ_cone_member(f: Poly) -> bool:
    """Whether the germ of ``f`` at 0 is nonnegative on a two-sided neighbourhood."""
    m = f.order()
    if m < 0:
        return True
    return m % 2 == 0 and f[m] > 0


class GermRing(RingInstance):
    name = "germ0"
    kind = "Germ0"
    archimedean = False

    def coerce(self, v):
        if isinstance(v, Poly):
            return v
        if isinstance(v, RatFun):
            return v.as_poly()
        return Poly.const(v)

    def parse_payload(self, text):
        return parse_poly(text)

    def is_nonneg(self, payload) -> bool:
        return germ_cone_member(payload)

    def random_payload(self, rng):
        # bias towards small lowest order so the interesting cases occur
        p = _rand_poly(rng, 4)
        if rng.random() < 0.4:
            p = Poly([0] * rng.randint(1, 3) + list(p.coeffs)) if p else p
        return p


class AeRing(RingInstance):
    name = "ae"
    kind = "PiecewiseAe"

    def coerce(self, v):
        if isinstance(v, aefun.PiecewiseRat):
            return v
        if isinstance(v, (RatFun, Poly)):
            return aefun.PiecewiseRat.from_ratfun(v)
        return aefun.PiecewiseRat.const(as_fraction(v))

    def parse_payload(self, text):
        return aefun.parse_ae(text)

    def is_nonneg(self, payload) -> bool:
        return aefun.ae_leq(aefun.PiecewiseRat.const(0), payload)

    def random_payload(self, rng):
        return random_piecewise(rng)


def random_piecewise(rng: random.Random, max_pieces: int = 3) -> aefun.PiecewiseRat:
    """Random class: rational pieces on a random rational partition."""
    k = rng.randint(1, max_pieces)
    cuts = sorted({_rand_frac(rng, 4) for _ in range(k - 1)})
    pieces = []
    for _ in range(len(cuts) + 1):
        if rng.random() < 0.8:
            pieces.append(RatFun(_rand_poly(rng, 2, 4)))
        else:
            den = _rand_poly(rng, 2, 4)
            pieces.append(RatFun(_rand_poly(rng, 2, 4), den if den else Poly.const(1)))
    return aefun.PiecewiseRat(cuts, pieces)


INSTANCES: dict[str, RingInstance] = {}
for _cls in (QRing, PolyRing, RatFunRing, GermRing, AeRing):
    _inst = _cls()
    INSTANCES[_inst.name] = _inst

_ALIASES = {
    "q": "Q",
    "q[x]": "Q[x]",
    "polyq_pointwise": "Q[x]",
    "q(x)": "Q(x)",
    "ratfunq_ae": "Q(x)",
    "germ0": "germ0",
    "ae": "ae",
    "piecewiseae": "ae",
}


def get_instance(name: str | RingInstance) -> RingInstance:
    if isinstance(name, RingInstance):
        return name
    key = _ALIASES.get(name.strip().lower())
    if key is None:
        raise KeyError(f"unknown ring instance {name!r}; choose from {', '.join(INSTANCES)}")
    return INSTANCES[key]


Q = INSTANCES["Q"]
QX = INSTANCES["Q[x]"]
QFX = INSTANCES["Q(x)"]
GERM0 = INSTANCES["germ0"]
AE = INSTANCES["ae"]


def _same(r1: RingInstance, r2: RingInstance) -> None:
    if r1.name != r2.name:
        raise MixedRings(f"operands from {r1.name} and {r2.name}")


@dataclass(frozen=True, eq=False)
class Elem:
    ring: RingInstance
    payload: Any

    def _other(self, o) -> "Elem":
        if isinstance(o, Elem):
            _same(self.ring, o.ring)
            return o
        return self.ring.elem(o)

    def __add__(self, o):
        return Elem(self.ring, self.payload + self._other(o).payload)

    __radd__ = __add__

    def __sub__(self, o):
        return Elem(self.ring, self.payload - self._other(o).payload)

    def __rsub__(self, o):
        return Elem(self.ring, self._other(o).payload - self.payload)

    def __neg__(self):
        return Elem(self.ring, -self.payload)

    def __mul__(self, o):
        return Elem(self.ring, self.payload * self._other(o).payload)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return Elem(self.ring, self.payload**n)

    def __eq__(self, o) -> bool:
        if isinstance(o, Elem):
            return self.ring == o.ring and self.payload == o.payload
        try:
            return self.payload == self.ring.coerce(o)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring.name, self.payload))

    def __str__(self) -> str:
        return str(self.payload)

    def __repr__(self) -> str:
        return f"Elem[{self.ring.name}]({self.payload})"

    def to_json(self):
        return self.ring.payload_json(self.payload)


# ---------------------------------------------------------------------------
# order, localizability, bounds


def _check(R: RingInstance, *elems: Elem) -> None:
    for e in elems:
        if isinstance(e, Elem):
            _same(R, e.ring)


def leq(R: RingInstance, a: Elem, b: Elem) -> bool:
    R = get_instance(R)
    _check(R, a, b)
    a, b = R.elem(a), R.elem(b)
    return R.is_nonneg((b - a).payload)


def in_cone(R: RingInstance, a: Elem) -> bool:
    R = get_instance(R)
    _check(R, a)
    return R.is_nonneg(R.elem(a).payload)


def loc_member(R: RingInstance, s: Elem) -> bool:
    """``s`` in Loc(R); all instances are strongly localizable, so this is ``1 <= s``."""
    R = get_instance(R)
    return leq(R, R.one(), s)


def dominating_loc_bound(R: RingInstance, r: Elem) -> Elem:
    R = get_instance(R)
    r = R.elem(r)
    one = R.one()
    return (one + r) * (one + r) + (one - r) * (one - r)


# ---------------------------------------------------------------------------
# the double-dagger closure of the cone


@dataclass(frozen=True)
class DdaggerQuery:
    r: Elem
    witness_h: Elem | None = None
    k_budget: int = 1000

    def __post_init__(self):
        if self.k_budget < 1:
            raise ValueError("k_budget must be at least 1")


@dataclass(frozen=True)
class InConeClosure:
    witness: Elem
    name: str = field(default="InConeClosure", init=False)


@dataclass(frozen=True)
class NotInConeClosure:
    name: str = field(default="NotInConeClosure", init=False)


@dataclass(frozen=True)
class Unknown:
    reason: str = ""
    name: str = field(default="Unknown", init=False)


def ddagger_probe(R: RingInstance, r: Elem, h: Elem, k_budget: int) -> int | None:
    """First ``k`` in ``1..k_budget`` with ``k r + h`` outside the cone, else ``None``."""
    R = get_instance(R)
    for k in range(1, k_budget + 1):
        if not in_cone(R, r * k + h):
            return k
    return None


def ddagger_decide(R: RingInstance, q: DdaggerQuery | Elem):
    R = get_instance(R)
    if not isinstance(q, DdaggerQuery):
        q = DdaggerQuery(R.elem(q))
    _check(R, q.r, q.witness_h)
    r = R.elem(q.r)
    if not R.exact_ddagger:
        if q.witness_h is None:
            return Unknown("no exact procedure and no witness supplied")
        if ddagger_probe(R, r, q.witness_h, q.k_budget) is None:
            return Unknown(f"probe passed for k <= {q.k_budget}; no exact confirmation")
        return Unknown("probe failed for the supplied witness only")
    if isinstance(R, GermRing):
        if germ_cone_member(r.payload):
            return InConeClosure(R.zero())
        if r.payload[0] >= 0:
            # value at 0 is 0, so k*r + 1 is 1 at 0 and positive nearby
            return InConeClosure(R.one())
        return NotInConeClosure()
    # archimedean instances: the closure is the cone itself
    if R.is_nonneg(r.payload):
        return InConeClosure(R.zero())
    return NotInConeClosure()


@dataclass(frozen=True)
class Archimedean:
    samples_checked: int
    name: str = field(default="Archimedean", init=False)


@dataclass(frozen=True)
class CounterexampleFound:
    r: Elem
    h: Elem
    name: str = field(default="CounterexampleFound", init=False)


def _closure_gaps(R: RingInstance, samples: Sequence[Elem]) -> list[CounterexampleFound]:
    """Samples in the closure but not in the cone, simplest first."""
    out = []
    for r in samples:
        _check(R, r)
        r = R.elem(r)
        v = ddagger_decide(R, DdaggerQuery(r))
        if isinstance(v, InConeClosure) and not in_cone(R, r):
            out.append(CounterexampleFound(r, v.witness))

    def rank(c: CounterexampleFound):
        p = c.r.payload
        if isinstance(p, Poly):
            return (p.order() % 2, len(p.coeffs), str(p))
        return (0, 0, str(p))

    return sorted(out, key=rank)


def archimedean_check(R: RingInstance, samples: Sequence[Elem] = ()):
    R = get_instance(R)
    if isinstance(R, GermRing):
        # the standard candidate is checked first, like any sample
        standard = _closure_gaps(R, [R.elem(-Poly.x() ** 2)])
        if standard:
            return standard[0]
    found = _closure_gaps(R, samples)
    if found:
        return found[0]
    return Archimedean(len(samples))


# ---------------------------------------------------------------------------
# symbolic identities


@dataclass(frozen=True)
class Verified:
    lhs: Any
    rhs: Any
    name: str = field(default="Verified", init=False)


@dataclass(frozen=True)
class Failed:
    diff: Any
    name: str = field(default="Failed", init=False)


DEFAULT_DEGREE_BUDGET = 4


def degree_budget() -> int:
    v = os.environ.get("PORING_DEGREE_BUDGET")
    return int(v) if v else DEFAULT_DEGREE_BUDGET


def _compare(pairs: Sequence[tuple[MPoly, MPoly]]):
    for lhs, rhs in pairs:
        if lhs != rhs:
            return Failed(lhs - rhs)
    return Verified(pairs[-1][0], pairs[-1][1])


def _semiring_sk(k: int):
    if k < 2:
        raise PreconditionFailed("semiring_Sk needs k >= 2")
    r, s = symbols("r", "s")
    lhs = sum(
        (comb(k, l) * (k - 2 * l) ** 2 * (s + r) ** (k - l) * (s - r) ** l for l in range(k + 1)),
        MPoly.const(r.names, 0),
    )
    # the intermediate lines of the expansion that are exact identities
    line1 = (
        k * k * (2 * s) ** k
        - 4 * (k - 1) * sum((comb(k, l) * l * (s + r) ** (k - l) * (s - r) ** l for l in range(k + 1)), 0 * r)
        + 4 * sum((comb(k, l) * l * (l - 1) * (s + r) ** (k - l) * (s - r) ** l for l in range(k + 1)), 0 * r)
    )
    zero = 0 * r
    line2 = (
        k * k * (2 * s) ** k
        - 4 * k * (k - 1) * sum((comb(k - 1, l - 1) * (s + r) ** (k - l) * (s - r) ** l for l in range(1, k + 1)), zero)
        + 4 * k * (k - 1) * sum((comb(k - 2, l - 2) * (s + r) ** (k - l) * (s - r) ** l for l in range(2, k + 1)), zero)
    )
    # reindexed; the binomials are C(k-1, l) and C(k-2, l)
    line3 = (
        k * k * (2 * s) ** k
        - 4 * k * (k - 1) * sum((comb(k - 1, l) * (s + r) ** (k - 1 - l) * (s - r) ** (l + 1) for l in range(k)), zero)
        + 4 * k * (k - 1) * sum((comb(k - 2, l) * (s + r) ** (k - 2 - l) * (s - r) ** (l + 2) for l in range(k - 1)), zero)
    )
    line4 = k * k * (2 * s) ** k - 4 * k * (k - 1) * (2 * s) ** (k - 1) * (s - r) + 4 * k * (k - 1) * (
        2 * s
    ) ** (k - 2) * (s - r) ** 2
    line5 = k * k * (2 * s) ** k - 4 * k * (k - 1) * (2 * s) ** (k - 2) * (s * s - r * r)
    rhs = 4 * k * (2 * s) ** (k - 2) * s * s + 4 * k * (k - 1) * (2 * s) ** (k - 2) * r * r
    return _compare([(lhs, line1), (lhs, line2), (lhs, line3), (lhs, line4), (lhs, line5), (lhs, rhs)])


def _sqrt_chain(ell: int, names=("p", "q", "s")):
    syms = symbols(*names)
    p, s = syms[0], syms[-1]
    ss = [s]
    rs = [p]
    for k in range(ell):
        rs.append(2 * ss[k] * rs[k] - rs[k] ** 2)
        ss.append(ss[k] ** 2)
    return syms, ss, rs


def _budget(ell: int) -> None:
    if ell < 0:
        raise PreconditionFailed("level must be nonnegative")
    if ell > degree_budget():
        raise BudgetExceeded(f"level {ell} exceeds the degree budget {degree_budget()}")


def _sqrt_recursion(ell: int):
    _budget(ell)
    _, ss, rs = _sqrt_chain(ell, ("p", "s"))
    pairs = [(ss[k + 1] - rs[k + 1], (ss[k] - rs[k]) ** 2) for k in range(ell)]
    p, s = rs[0], ss[0]
    pairs.append((ss[ell] - rs[ell], (s - p) ** (2**ell)))
    return _compare(pairs)


def _sqrt_step(ell: int):
    _budget(ell)
    _, ss, rs = _sqrt_chain(ell, ("p", "s"))
    pairs = [
        (rs[k] ** 2 * (ss[k] - rs[k]) + (ss[k] - rs[k]) ** 2 * rs[k] + ss[k] ** 2 * rs[k], ss[k] * rs[k + 1])
        for k in range(ell)
    ]
    if not pairs:
        return Verified(rs[0], rs[0])
    return _compare(pairs)


def _prod(items, one):
    out = one
    for v in items:
        out = out * v
    return out


def _sqrt_telescope(ell: int):
    _budget(ell)
    if ell < 1:
        raise PreconditionFailed("telescope needs level >= 1")
    (p, q, s), ss, rs = _sqrt_chain(ell)
    one = MPoly.const(p.names, 1)
    zero = MPoly.const(p.names, 0)
    forms = [
        sum((2 ** (ell - k) * _prod((ss[j] ** 2 for j in range(k, ell)), one) * rs[k] ** 2 * q for k in range(ell)), zero),
        sum((2 ** (ell - k) * _prod(ss[k + 1 : ell + 1], one) * rs[k] ** 2 * q for k in range(ell)), zero),
        sum(
            (2 ** (ell - k) * _prod(ss[k + 1 : ell + 1], one) * (2 * ss[k] * rs[k] - rs[k + 1]) * q for k in range(ell)),
            zero,
        ),
        sum((2 ** (ell + 1 - k) * _prod(ss[k : ell + 1], one) * rs[k] * q for k in range(ell)), zero)
        - sum((2 ** (ell - k) * _prod(ss[k + 1 : ell + 1], one) * rs[k + 1] * q for k in range(ell)), zero),
        2 ** (ell + 1) * _prod(ss[: ell + 1], one) * p * q - 2 * ss[ell] * rs[ell] * q,
    ]
    return _compare([(forms[0], f) for f in forms[1:]])


def _sqrt_final(ell: int):
    _budget(ell)
    (p, q, s), ss, rs = _sqrt_chain(ell)
    one = MPoly.const(p.names, 1)
    sl, rl = ss[ell], rs[ell]
    pre = _prod(ss[:ell], one)
    first = 2 ** (ell + 1) * pre * p * q - 2 * rl * q
    second = sl * (1 + q * q) + 2 * rl * q
    pairs = [
        (second, (sl - rl) * (1 + q * q) + rl * (1 + q * q) + 2 * rl * q),
        (second, (sl - rl) * (1 + q * q) + rl * (1 + q) ** 2),
        (sl, pre * s),
        (sl * first, 2 ** (ell + 1) * _prod(ss[: ell + 1], one) * p * q - 2 * sl * rl * q),
        (first + second, 2 ** (ell + 1) * pre * p * q + sl * (1 + q * q)),
    ]
    return _compare(pairs)


def _bdd_product():
    a, b, m, n = symbols("a", "b", "m", "n")
    return _compare(
        [
            (3 * m * n - a * b, (m - a) * (n + b) + (m + a) * n + m * (n - b)),
            (3 * m * n + a * b, (m + a) * (n + b) + (m - a) * n + m * (n - b)),
        ]
    )


def _separator_b(n: int = 2):
    """The separator's value as a polynomial in the character values, and its two bounds.

    ``e`` stands for the inverse of epsilon so everything stays polynomial.
    """
    if n < 1:
        raise PreconditionFailed("separator needs n >= 1")
    names = tuple(f"a{j}" for j in range(n)) + tuple(f"l{j}" for j in range(n)) + ("e",)
    syms = symbols(*names)
    a, lam, e = syms[:n], syms[n : 2 * n], syms[-1]
    b = -1 + 2 * e * e * sum(((a[j] - lam[j]) ** 2 for j in range(n)), MPoly.const(names, 0))
    expanded = -1 + 2 * e * e * sum((a[j] * a[j] - 2 * a[j] * lam[j] + lam[j] * lam[j] for j in range(n)), 0 * e)
    pairs = [(b, expanded)]
    # worst case near phi: every |phi(a_j) - lambda_j|^2 = eps^2/(4n)
    eps = Fraction(1, 3)
    near = -1 + 2 * eps**-2 * n * (eps * eps / (4 * n))
    # a far psi: one deviation of 3/4 eps, others zero
    far = -1 + 2 * eps**-2 * (Fraction(3, 4) * eps) ** 2
    one = MPoly.const(names, 1)
    pairs.append((MPoly.const(names, near), MPoly.const(names, Fraction(-1, 2))))
    pairs.append((MPoly.const(names, far), MPoly.const(names, Fraction(1, 8))))
    res = _compare(pairs)
    return res if isinstance(res, Failed) else Verified(b, expanded)


def _dominating_bound():
    (r,) = symbols("r")
    return _compare([((1 + r) ** 2 + (1 - r) ** 2, 2 + 2 * r * r)])


IDENTITIES = {
    "semiring_Sk": ("k", _semiring_sk),
    "sqrt_recursion": ("l", _sqrt_recursion),
    "sqrt_step_identity": ("l", _sqrt_step),
    "sqrt_telescope": ("l", _sqrt_telescope),
    "sqrt_final": ("l", _sqrt_final),
    "bdd_product": (None, _bdd_product),
    "separator_b": ("n", _separator_b),
    "dominating_bound": (None, _dominating_bound),
}


def verify_identity(name: str, **params):
    """Expand both sides of a named identity and compare them exactly.

    ``semiring_Sk`` takes ``k``; the square-root identities take ``l`` (the
    level, bounded by :func:`degree_budget`); ``separator_b`` takes ``n``.
    """
    if name not in IDENTITIES:
        raise KeyError(f"unknown identity {name!r}; choose from {', '.join(IDENTITIES)}")
    param, fn = IDENTITIES[name]
    if param is None:
        return fn()
    if param == "l" and "ell" in params:
        params["l"] = params["ell"]
    if param not in params:
        if param == "n":
            return fn()
        raise PreconditionFailed(f"identity {name} needs parameter {param}")
    return fn(int(params[param]))


# ---------------------------------------------------------------------------
# finitely generated subrings


@dataclass(frozen=True)
class FinGenReport:
    ring: str
    elements: int
    archimedean: Any
    strongly_localizable_on_samples: bool
    consistent_with_ambient: bool


FIN_GEN_CAP = 4000


def fin_gen_probe(R: RingInstance, generators: Sequence[Elem], depth: int) -> FinGenReport:
    R = get_instance(R)
    if depth < 1:
        raise PreconditionFailed("depth must be positive")
    gens = [R.elem(g) for g in generators]
    monos = [R.one()]
    for d in range(1, depth + 1):
        for combo in combinations_with_replacement(range(len(gens)), d):
            m = R.one()
            for i in combo:
                m = m * gens[i]
            monos.append(m)
    if len(monos) ** 2 > FIN_GEN_CAP:
        raise BudgetExceeded(f"{len(monos)} monomials exceed the enumeration cap")
    elements: list[Elem] = []
    for m in monos:
        elements.extend((m, -m))
    for i, m1 in enumerate(monos):
        for m2 in monos[i + 1 :]:
            elements.extend((m1 + m2, m1 - m2, m2 - m1))
    found = _closure_gaps(R, elements)
    verdict = found[0] if found else Archimedean(len(elements))
    strong = True
    for m in monos:
        s = R.one() + m * m
        for r in elements[:60]:
            if in_cone(R, r * s) and not in_cone(R, r):
                strong = False
    # archimedean descends to subrings; a non-archimedean ambient ring allows either verdict
    ambient = archimedean_check(R, [])
    consistent = not (isinstance(ambient, Archimedean) and isinstance(verdict, CounterexampleFound))
    return FinGenReport(R.name, len(elements), verdict, strong, consistent)
