"""Finite topological spaces and the quotient rings of partially defined functions.

A finite space is encoded by the minimal open neighbourhood of every point
(equivalently its specialization preorder); open sets are the unions of
these.  Internally sets of points are bitmasks.

Continuous real functions on an open subset are the functions that are
constant on its connected components, so a :class:`ContFun` stores one value
per component.  :func:`is_continuous` checks continuity by preimages of open
sets; the test-suite confirms the two descriptions agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import DomainNotInFamily, NotOpen, NotSubfamily, PreconditionFailed

__all__ = [
    "FiniteSpace",
    "DomainFamily",
    "ContFun",
    "AeClassF",
    "Holds",
    "Counterexample",
    "opens",
    "closure",
    "is_dense",
    "components",
    "is_continuous",
    "functions_on",
    "quotient_ops",
    "strong_loc_bruteforce",
    "dense_open_family",
    "admissible_families",
    "topologies",
    "representatives",
    "max_representative",
    "max_rep_uniqueness_check",
    "inclusion_embedding_check",
]


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class FiniteSpace:
    """Points plus minimal open neighbourhoods; validated on construction."""

    def __init__(self, points: Sequence, min_open: dict):
        self.points = tuple(points)
        if len(set(self.points)) != len(self.points):
            raise ValueError("duplicate points")
        self._idx = {p: i for i, p in enumerate(self.points)}
        self._U = []
        for p in self.points:
            nb = min_open.get(p, min_open.get(str(p)))
            if nb is None:
                raise ValueError(f"no minimal open set for {p!r}")
            self._U.append(self.mask(nb))
        for i, u in enumerate(self._U):
            if not u >> i & 1:
                raise ValueError(f"{self.points[i]!r} is not in its minimal open set")
            for j in _bits(u):
                if self._U[j] & ~u:
                    raise ValueError(
                        f"minimal open set of {self.points[j]!r} is not inside that of {self.points[i]!r}"
                    )

    @classmethod
    def from_masks(cls, n: int, U: Sequence[int], names: Sequence | None = None) -> "FiniteSpace":
        names = tuple(names) if names is not None else tuple("abcdefghijklmnopqrstuvwxyz"[:n])
        return cls(names, {names[i]: [names[j] for j in _bits(U[i])] for i in range(n)})

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def min_open(self, p) -> frozenset:
        return self.members(self._U[self._idx[p]])

    def mask(self, s: Iterable) -> int:
        if isinstance(s, int):
            return s
        m = 0
        for p in s:
            if p not in self._idx:
                raise ValueError(f"unknown point {p!r}")
            m |= 1 << self._idx[p]
        return m

    def members(self, mask: int) -> frozenset:
        return frozenset(self.points[i] for i in _bits(mask))

    def is_open_mask(self, m: int) -> bool:
        return all(self._U[i] & ~m == 0 for i in _bits(m))

    def leq(self, p, q) -> bool:
        """Specialization preorder: ``p`` lies in every open set containing ``q``."""
        return bool(self._U[self._idx[q]] >> self._idx[p] & 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteSpace) and self.points == other.points and self._U == other._U

    def __hash__(self) -> int:
        return hash((self.points, tuple(self._U)))

    def __repr__(self) -> str:
        mo = ", ".join(f"{p}: {{{','.join(map(str, sorted(self.min_open(p), key=str)))}}}" for p in self.points)
        return f"FiniteSpace({mo})"

    def to_json(self) -> dict:
        return {
            "points": list(self.points),
            "min_open": {str(p): sorted(self.min_open(p), key=self._idx.__getitem__) for p in self.points},
        }

    @classmethod
    def from_json(cls, data) -> "FiniteSpace":
        return cls(data["points"], {p: v for p, v in data["min_open"].items()})


# ---------------------------------------------------------------------------
# topology


def _open_masks(X: FiniteSpace) -> list[int]:
    return [m for m in range(X.full + 1) if X.is_open_mask(m)]


def opens(X: FiniteSpace) -> list[frozenset]:
    return [X.members(m) for m in _open_masks(X)]


def _closure_mask(X: FiniteSpace, s: int) -> int:
    # x is in the closure iff each neighbourhood of x meets s iff U(x) meets s
    return sum(1 << i for i in range(X.n) if X._U[i] & s)


def closure(X: FiniteSpace, S) -> frozenset:
    return X.members(_closure_mask(X, X.mask(S)))


def _dense_mask(X: FiniteSpace, a: int) -> bool:
    return _closure_mask(X, a) == X.full


def is_dense(X: FiniteSpace, A) -> bool:
    return _dense_mask(X, X.mask(A))


def _components_mask(X: FiniteSpace, a: int) -> list[int]:
    if not X.is_open_mask(a):
        raise NotOpen(f"{sorted(map(str, X.members(a)))} is not open")
    # inside an open set, comparable points are linked; components are the linked classes
    left, out = a, []
    while left:
        seed = left & -left
        comp, frontier = seed, seed
        while frontier:
            grow = 0
            for i in _bits(frontier):
                grow |= X._U[i]
                grow |= sum(1 << j for j in _bits(a) if X._U[j] >> i & 1)
            grow &= a & ~comp
            comp |= grow
            frontier = grow
        out.append(comp)
        left &= ~comp
    return out


def components(X: FiniteSpace, A) -> list[frozenset]:
    return [X.members(c) for c in _components_mask(X, X.mask(A))]


def is_continuous(X: FiniteSpace, A, values: dict) -> bool:
    """Continuity of ``A -> R`` (pointwise ``values``) by open preimages.

    The image is finite, so every subset of it is cut out by an open set of R
    and continuity means every such preimage is open in ``A``.
    """
    a = X.mask(A)
    if not X.is_open_mask(a):
        raise NotOpen("domain is not open")
    image = sorted(set(values.values()))
    for r in range(len(image) + 1):
        for chosen in itertools.combinations(image, r):
            pre = X.mask(p for p, v in values.items() if v in chosen)
            # open in the subspace A; A open, so open in X
            if not X.is_open_mask(pre):
                return False
    return True


# ---------------------------------------------------------------------------
# functions and domain families


@dataclass(frozen=True)
class ContFun:
    space: FiniteSpace = field(repr=False)
    domain: int
    values: tuple  # one value per component, in order of ``comps``
    comps: tuple = field(repr=False)

    @classmethod
    def make(cls, X: FiniteSpace, A, per_component) -> "ContFun":
        a = X.mask(A)
        comps = tuple(_components_mask(X, a))
        if isinstance(per_component, dict):
            vals = tuple(Fraction(per_component[X.members(c)]) for c in comps)
        else:
            vals = tuple(Fraction(v) for v in per_component)
        if len(vals) != len(comps):
            raise ValueError("one value per connected component is required")
        return cls(X, a, vals, comps)

    @classmethod
    def from_pointwise(cls, X: FiniteSpace, A, values: dict) -> "ContFun":
        a = X.mask(A)
        if set(values) != set(X.members(a)):
            raise ValueError("values must cover exactly the domain")
        if not is_continuous(X, a, values):
            raise PreconditionFailed("function is not continuous")
        comps = tuple(_components_mask(X, a))
        vals = tuple(Fraction(values[X.points[next(_bits(c))]]) for c in comps)
        return cls(X, a, vals, comps)

    @classmethod
    def const(cls, X: FiniteSpace, c, A=None) -> "ContFun":
        a = X.full if A is None else X.mask(A)
        comps = tuple(_components_mask(X, a))
        return cls(X, a, tuple(Fraction(c) for _ in comps), comps)

    def pointwise(self) -> dict:
        return {p: v for c, v in zip(self.comps, self.values) for p in self.space.members(c)}

    def _at(self) -> list:
        out = [None] * self.space.n
        for c, v in zip(self.comps, self.values):
            for i in _bits(c):
                out[i] = v
        return out

    def value(self, p) -> Fraction:
        i = self.space._idx[p]
        for c, v in zip(self.comps, self.values):
            if c >> i & 1:
                return v
        raise KeyError(f"{p!r} is outside the domain")

    def restrict(self, B) -> "ContFun":
        b = self.space.mask(B)
        if b & ~self.domain:
            raise ValueError("restriction to a set outside the domain")
        at = self._at()
        comps = tuple(_components_mask(self.space, b))
        return ContFun(self.space, b, tuple(at[next(_bits(c))] for c in comps), comps)

    def _pointwise_op(self, other: "ContFun", op) -> "ContFun":
        d = self.domain & other.domain
        x, y = self._at(), other._at()
        comps = tuple(_components_mask(self.space, d))
        return ContFun(self.space, d, tuple(op(x[next(_bits(c))], y[next(_bits(c))]) for c in comps), comps)

    def __add__(self, other: "ContFun") -> "ContFun":
        return self._pointwise_op(other, lambda u, v: u + v)

    def __mul__(self, other: "ContFun") -> "ContFun":
        return self._pointwise_op(other, lambda u, v: u * v)

    def __neg__(self) -> "ContFun":
        return ContFun(self.space, self.domain, tuple(-v for v in self.values), self.comps)

    def __sub__(self, other: "ContFun") -> "ContFun":
        return self + (-other)

    def le_on(self, other: "ContFun", a: int) -> bool:
        x, y = self._at(), other._at()
        return all(x[i] <= y[i] for i in _bits(a))

    def eq_on(self, other: "ContFun", a: int) -> bool:
        x, y = self._at(), other._at()
        return all(x[i] == y[i] for i in _bits(a))

    def __str__(self) -> str:
        items = ", ".join(f"{p}: {v}" for p, v in sorted(self.pointwise().items(), key=lambda t: str(t[0])))
        return "{" + items + "}"


class DomainFamily:
    """An admissible family: open sets, containing the space, closed under intersection."""

    def __init__(self, space: FiniteSpace, sets: Iterable):
        self.space = space
        self.masks = frozenset(space.mask(s) for s in sets)
        for m in self.masks:
            if not space.is_open_mask(m):
                raise NotOpen(f"{sorted(map(str, space.members(m)))} is not open")
        if space.full not in self.masks:
            raise PreconditionFailed("the family must contain the whole space")
        for a, b in itertools.combinations(self.masks, 2):
            if a & b not in self.masks:
                raise PreconditionFailed("the family is not closed under intersection")
        self.smallest = self.space.full
        for m in self.masks:
            self.smallest &= m

    @property
    def sets(self) -> list[frozenset]:
        return [self.space.members(m) for m in sorted(self.masks)]

    def __contains__(self, A) -> bool:
        return self.space.mask(A) in self.masks

    def __eq__(self, other) -> bool:
        return isinstance(other, DomainFamily) and self.space == other.space and self.masks == other.masks

    def __hash__(self) -> int:
        return hash(self.masks)

    def __repr__(self) -> str:
        return f"DomainFamily({[sorted(map(str, s)) for s in self.sets]})"

    def has_empty(self) -> bool:
        return 0 in self.masks

    def to_json(self) -> list:
        return [sorted(str(p) for p in s) for s in self.sets]


def dense_open_family(X: FiniteSpace) -> DomainFamily:
    return DomainFamily(X, [m for m in _open_masks(X) if _dense_mask(X, m)])


def admissible_families(X: FiniteSpace) -> list[DomainFamily]:
    """Every admissible family of domains on ``X``."""
    op = _open_masks(X)
    start = frozenset([X.full])
    seen = {start}
    stack = [start]
    while stack:
        fam = stack.pop()
        for m in op:
            if m in fam:
                continue
            new = set(fam)
            new.add(m)
            pending = [m]
            while pending:
                u = pending.pop()
                for v in list(new):
                    w = u & v
                    if w not in new:
                        new.add(w)
                        pending.append(w)
            key = frozenset(new)
            if key not in seen:
                seen.add(key)
                stack.append(key)
    return [DomainFamily(X, fam) for fam in sorted(seen, key=lambda f: (len(f), sorted(f)))]


def _preorders(n: int) -> list[tuple[int, ...]]:
    """All preorders on ``n`` labelled points, as minimal-open masks ``U[i] = {j : j <= i}``."""
    out: list[tuple[int, ...]] = [()]
    for k in range(n):
        nxt = []
        for U in out:
            below_of = list(U)  # below_of[i]: points <= i
            above_of = [sum(1 << i for i in range(k) if U[i] >> j & 1) for j in range(k)]
            for L in range(1 << k):
                # points below the new one: down-closed
                if any(below_of[i] & ~L for i in _bits(L)):
                    continue
                for G in range(1 << k):
                    if any(above_of[j] & ~G for j in _bits(G)):
                        continue
                    # transitivity through the new point
                    if any(below_of[g] & L != L for g in _bits(G)):
                        continue
                    newU = [below_of[i] | (1 << k if G >> i & 1 else 0) for i in range(k)]
                    newU.append(L | 1 << k)
                    nxt.append(tuple(newU))
        out = nxt
    return out


def _canonical_form(U: tuple[int, ...]) -> tuple[int, ...]:
    n = len(U)
    best = None
    for perm in itertools.permutations(range(n)):
        # relabel i -> perm[i]
        V = [0] * n
        for i in range(n):
            V[perm[i]] = sum(1 << perm[j] for j in _bits(U[i]))
        t = tuple(V)
        if best is None or t < best:
            best = t
    return best


def topologies(n: int, up_to_homeomorphism: bool = True) -> list[FiniteSpace]:
    """Topologies on ``n`` points (labelled, or one per homeomorphism class)."""
    pre = _preorders(n)
    if up_to_homeomorphism:
        pre = sorted({_canonical_form(U) for U in pre})
    return [FiniteSpace.from_masks(n, U) for U in pre]


# ---------------------------------------------------------------------------
# the quotient ring


def _check_dom(D: DomainFamily, f: ContFun) -> None:
    if f.domain not in D.masks:
        raise DomainNotInFamily(f"domain {sorted(map(str, f.space.members(f.domain)))} is not in the family")


def _lesssim(D: DomainFamily, f: ContFun, g: ContFun) -> bool:
    common = f.domain & g.domain
    return any(a & ~common == 0 and f.le_on(g, a) for a in D.masks)


def _approx(D: DomainFamily, f: ContFun, g: ContFun) -> bool:
    common = f.domain & g.domain
    return any(a & ~common == 0 and f.eq_on(g, a) for a in D.masks)


class AeClassF:
    """An equivalence class of partially defined functions for the family ``D``.

    The family is finite, so the intersection of all its members lies in it;
    restricting to that set is a canonical form.  For the dense-open family
    :func:`max_representative` gives the other canonical form, on the largest
    domain.
    """

    def __init__(self, D: DomainFamily, rep: ContFun):
        _check_dom(D, rep)
        self.family = D
        self.rep = rep
        self.canonical = rep.restrict(D.smallest)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AeClassF):
            return NotImplemented
        return self.family == other.family and self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash((self.canonical.domain, self.canonical.values))

    def __repr__(self) -> str:
        return f"AeClassF({self.canonical})"


def quotient_ops(D: DomainFamily, op: str, f: ContFun, g: ContFun):
    """``add``/``mul`` give a class; ``leq``/``equiv`` decide by searching the family."""
    _check_dom(D, f)
    _check_dom(D, g)
    if op == "add":
        return AeClassF(D, f + g)
    if op == "mul":
        return AeClassF(D, f * g)
    if op == "leq":
        return _lesssim(D, f, g)
    if op == "equiv":
        return _approx(D, f, g)
    raise ValueError(f"unknown operation {op!r}")


def functions_on(X: FiniteSpace, A, pool: Iterable) -> Iterator[ContFun]:
    """Every continuous function on ``A`` with values in ``pool``."""
    a = X.mask(A)
    comps = tuple(_components_mask(X, a))
    pool = [Fraction(v) for v in pool]
    for vals in itertools.product(pool, repeat=len(comps)):
        yield ContFun(X, a, vals, comps)


# ---------------------------------------------------------------------------
# strong localizability by exhaustion


@dataclass(frozen=True)
class Holds:
    pairs_checked: int
    trivial_ring: bool = False
    name: str = field(default="Holds", init=False)


@dataclass(frozen=True)
class Counterexample:
    f: ContFun
    g: ContFun
    name: str = field(default="Counterexample", init=False)


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def strong_loc_bruteforce(D: DomainFamily, value_pool: Iterable) -> Holds | Counterexample:
    """Check ``[g] >= 0 and [f(1+g)] >= 0  =>  [f] >= 0`` over all pool functions.

    Each predicate depends only on signs, so functions are grouped by the
    signs of ``f`` and of ``(g, 1+g)`` at every point of their domain, and one
    function per group is tested.
    """
    X = D.space
    pool = sorted({Fraction(v) for v in value_pool})
    # positive-cone test for a function with domain ``dom`` and negative set ``neg``:
    # some member of the family inside ``dom`` avoids ``neg``
    good = [any(a & ~m == 0 for a in D.masks) for m in range(X.full + 1)]

    f_reps: dict = {}
    g_reps: dict = {}
    f_classes = {}
    for v in pool:
        f_classes.setdefault(_sign(v), v)
    g_classes = {}
    for v in pool:
        g_classes.setdefault((_sign(v), _sign(1 + v)), v)
    for a in D.masks:
        comps = _components_mask(X, a)
        for vals in itertools.product(sorted(f_classes), repeat=len(comps)):
            pos = sum(c for c, s in zip(comps, vals) if s > 0)
            neg = sum(c for c, s in zip(comps, vals) if s < 0)
            f_reps[(a, pos, neg)] = ContFun(X, a, tuple(f_classes[s] for s in vals), tuple(comps))
        for vals in itertools.product(sorted(g_classes), repeat=len(comps)):
            neg_g = sum(c for c, s in zip(comps, vals) if s[0] < 0)
            pos_1g = sum(c for c, s in zip(comps, vals) if s[1] > 0)
            neg_1g = sum(c for c, s in zip(comps, vals) if s[1] < 0)
            g_reps[(a, neg_g, pos_1g, neg_1g)] = ContFun(X, a, tuple(g_classes[s] for s in vals), tuple(comps))

    gs = [k for k in g_reps if good[k[0] & ~k[1]]]
    checked = 0
    for fk in f_reps:
        a, pos, neg = fk
        if good[a & ~neg]:
            continue  # conclusion holds
        for gk in gs:
            b, _, pos_1g, neg_1g = gk
            checked += 1
            prod_neg = (neg & pos_1g) | (pos & neg_1g)
            if good[(a & b) & ~prod_neg]:
                return Counterexample(f_reps[fk], g_reps[gk])
    return Holds(checked, trivial_ring=D.has_empty())


# ---------------------------------------------------------------------------
# maximal representatives for the dense-open family


def representatives(D: DomainFamily, f: ContFun) -> list[ContFun]:
    """All members of the class of ``f`` (values are forced on every domain).

    Every component of a domain in a dense family meets a common dense subset
    with ``dom f``, so representatives take only values that ``f`` takes.
    """
    X = D.space
    vals = sorted(set(f.values))
    out = []
    for b in sorted(D.masks):
        for h in functions_on(X, b, vals):
            if _approx(D, f, h):
                out.append(h)
    return out


def max_representative(D: DomainFamily, f: ContFun) -> ContFun:
    """Glue all representatives over the union of their domains."""
    X = D.space
    if D != dense_open_family(X):
        raise PreconditionFailed("maximal representatives are defined for the dense-open family")
    _check_dom(D, f)
    reps = representatives(D, f)
    at: dict = {}
    for h in reps:
        for p, v in h.pointwise().items():
            if at.setdefault(p, v) != v:
                raise AssertionError("representatives disagree on an overlap")
    return ContFun.from_pointwise(X, at.keys(), at)


def max_rep_uniqueness_check(X: FiniteSpace, pool: Iterable) -> bool:
    """Exhaustively: each class has exactly one representative restricting onto all others."""
    D = dense_open_family(X)
    pool = list(pool)
    for a in sorted(D.masks):
        for f in functions_on(X, a, pool):
            reps = representatives(D, f)
            top = [h for h in reps if all(g.domain & ~h.domain == 0 and h.restrict(g.domain) == g for g in reps)]
            if len(top) != 1:
                return False
            if top[0] != max_representative(D, f):
                return False
    return True


# ---------------------------------------------------------------------------
# inclusion of a subfamily


def inclusion_embedding_check(Dp: DomainFamily, D: DomainFamily, sample: Iterable[ContFun] | None = None, pool=(-1, 0, 1)) -> bool:
    """The map induced by inclusion is a well-defined positive ring morphism and order-reflecting."""
    if Dp.space != D.space:
        raise NotSubfamily("families live on different spaces")
    if not Dp.masks <= D.masks:
        raise NotSubfamily("the first family is not contained in the second")
    X = D.space
    if sample is None:
        sample = [f for a in sorted(Dp.masks) for f in functions_on(X, a, pool)]
    sample = list(sample)
    for f in sample:
        _check_dom(Dp, f)
    zero = ContFun.const(X, 0)
    for f in sample:
        if _lesssim(Dp, zero, f) and not _lesssim(D, zero, f):
            return False
        for g in sample:
            le_p, le = _lesssim(Dp, f, g), _lesssim(D, f, g)
            if le_p != le:
                return False
            # well defined on classes; sums and products are the same functions in both rings
            if _approx(Dp, f, g) and not _approx(D, f, g):
                return False
    return True
