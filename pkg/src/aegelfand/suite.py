"""Seeded property suites, one per topic group, used by ``aegelfand suite``.

Every property draws from its own ``random.Random`` derived from the seed and
the property name, so reports are reproducible and independent of order.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import aefun, certify, finitetop, gelfand, localization, poring
from .exact import Poly, RatFun, isolate_roots, parse_poly, poly_nonneg
from .exact.roots import rational_between

SECTIONS = ("sec2", "sec3", "sec4", "sec5", "sec6", "sec7")


@dataclass
class PropertyResult:
    name: str
    cases: int
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "cases": self.cases, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class SuiteReport:
    name: str
    seed: int
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "seed": self.seed,
            "passed": self.ok,
            "failures": [r.name for r in self.results if not r.passed],
            "properties": [r.to_json() for r in self.results],
        }


def _rng(seed: int, name: str) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{name}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _result(name: str, cases: int, failures: list) -> PropertyResult:
    return PropertyResult(name, cases, not failures, "; ".join(failures[:3]))


INSTANCES = (poring.Q, poring.QX, poring.QFX, poring.GERM0, poring.AE)


# ---------------------------------------------------------------------------
# independent oracles


def sampling_sign_oracle(p: Poly, step=Fraction(1, 64), radius=10) -> bool | None:
    """Decide ``p >= 0`` on the line from grid samples, or return ``None``.

    A negative sample, odd degree or a negative leading coefficient settles
    "no".  "Yes" needs every root inside the radius (Cauchy bound) and a
    smallest sample exceeding a Lipschitz bound times the grid step, so no dip
    can hide between samples.
    """
    if not p:
        return True
    steps = int(radius / step)
    vals = [p(k * step) for k in range(-steps, steps + 1)]
    if any(v < 0 for v in vals) or p.degree % 2 == 1 or p.lc < 0:
        return False
    bound = 1 + max((abs(c / p.lc) for c in p.coeffs[:-1]), default=Fraction(0))
    if bound > radius:
        return None
    lipschitz = sum(abs(c) * i * radius ** max(i - 1, 0) for i, c in enumerate(p.coeffs))
    return True if min(vals) > lipschitz * step else None


# ---------------------------------------------------------------------------
# sec2: ordered rings, localizability, identities


def prop_order_axioms(rng: random.Random, n: int) -> PropertyResult:
    bad = []
    for R in INSTANCES:
        for _ in range(n):
            a, b, c = R.random_elem(rng), R.random_elem(rng), R.random_elem(rng)
            if not poring.leq(R, a, a):
                bad.append(f"{R.name}: reflexivity {a}")
            if poring.leq(R, a, b) and poring.leq(R, b, a) and a != b:
                bad.append(f"{R.name}: antisymmetry {a}, {b}")
            if poring.leq(R, a, b) and poring.leq(R, b, c) and not poring.leq(R, a, c):
                bad.append(f"{R.name}: transitivity")
            if poring.leq(R, a, b) != poring.leq(R, a + c, b + c):
                bad.append(f"{R.name}: translation {a}, {b}, {c}")
            # chains make transitivity non-vacuous
            p, q = R.random_nonneg(rng), R.random_nonneg(rng)
            if not poring.leq(R, a, a + p + q):
                bad.append(f"{R.name}: chain {a}")
    return _result("order_axioms", n * len(INSTANCES), bad)


def prop_cone_axioms(rng, n) -> PropertyResult:
    bad = []
    for R in INSTANCES:
        for _ in range(n):
            a, b = R.random_nonneg(rng), R.random_nonneg(rng)
            c = R.random_elem(rng)
            if not (poring.in_cone(R, a) and poring.in_cone(R, b)):
                bad.append(f"{R.name}: random_nonneg outside cone")
            if not poring.in_cone(R, a + b) or not poring.in_cone(R, a * b):
                bad.append(f"{R.name}: closure {a}, {b}")
            if not poring.in_cone(R, c * c):
                bad.append(f"{R.name}: square {c}")
    return _result("cone_axioms", n * len(INSTANCES), bad)


def prop_strong_localizability(rng, n) -> PropertyResult:
    bad = []
    for R in INSTANCES:
        for i in range(n):
            s = R.one() + R.random_nonneg(rng)
            # half the cases use r = t * (positive) - small, to exercise rs near the cone boundary
            r = R.random_elem(rng) if i % 2 else R.random_nonneg(rng) - R.random_nonneg(rng)
            if not poring.loc_member(R, s):
                bad.append(f"{R.name}: {s} not in Loc")
            if poring.in_cone(R, r * s) and not poring.in_cone(R, r):
                bad.append(f"{R.name}: r={r}, s={s}")
    return _result("strong_localizability", n * len(INSTANCES), bad)


def prop_dominating_bound(rng, n) -> PropertyResult:
    bad = []
    for R in INSTANCES:
        for _ in range(n):
            r = R.random_elem(rng)
            s = poring.dominating_loc_bound(R, r)
            if not (poring.leq(R, -s, r) and poring.leq(R, r, s) and poring.loc_member(R, s)):
                bad.append(f"{R.name}: r={r}")
    return _result("dominating_loc_bound", n * len(INSTANCES), bad)


def prop_identities(rng, n) -> PropertyResult:
    bad, cases = [], 0
    jobs = [("semiring_Sk", {"k": k}) for k in range(2, 9)]
    for name in ("sqrt_recursion", "sqrt_step_identity", "sqrt_telescope", "sqrt_final"):
        jobs += [(name, {"l": ell}) for ell in range(1, 5)]
    jobs += [("bdd_product", {}), ("separator_b", {})]
    for name, params in jobs:
        cases += 1
        res = poring.verify_identity(name, **params)
        if not isinstance(res, poring.Verified):
            bad.append(f"{name} {params}")
    return _result("identities", cases, bad)


def prop_germ_ddagger_probe(rng, n) -> PropertyResult:
    R = poring.GERM0
    bad = []
    for _ in range(n):
        r = R.random_elem(rng)
        v = poring.ddagger_decide(R, r)
        if isinstance(v, poring.InConeClosure):
            if poring.ddagger_probe(R, r, v.witness, 1000) is not None:
                bad.append(f"probe fails for {r}")
        # brute-force lowest-order oracle for the closure: r(0) >= 0
        expect = r.payload[0] >= 0 if r.payload else True
        if isinstance(v, poring.InConeClosure) != expect:
            bad.append(f"closure verdict for {r}")
    return _result("germ_ddagger_vs_probe", n, bad)


def prop_poly_nonneg_oracle(rng, n) -> PropertyResult:
    bad, conclusive = [], 0
    for i in range(n):
        d = rng.randint(0, 8)
        p = Poly([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(d + 1)])
        if i % 3 == 0:
            q = Poly([Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(0, 3))])
            p = q * q + Poly.const(Fraction(rng.randint(-2, 2), 8))
        o = sampling_sign_oracle(p)
        if o is None:
            continue
        conclusive += 1
        if poly_nonneg(p) != o:
            bad.append(str(p))
    return _result("poly_nonneg_vs_sampling", conclusive, bad)


def prop_archimedean_verdicts(rng, n) -> PropertyResult:
    bad = []
    for R in INSTANCES:
        samples = [R.random_elem(rng) for _ in range(n)]
        v = poring.archimedean_check(R, samples)
        if R is poring.GERM0:
            ok = isinstance(v, poring.CounterexampleFound) and str(v.r) == "-x^2"
        else:
            ok = isinstance(v, poring.Archimedean)
        if not ok:
            bad.append(f"{R.name}: {v}")
    return _result("archimedean_verdicts", len(INSTANCES), bad)


# ---------------------------------------------------------------------------
# sec3: a.e. functions and the finite-space oracle


def prop_lattice_laws(rng, n) -> PropertyResult:
    bad = []
    for _ in range(n):
        a, b, c = (poring.random_piecewise(rng) for _ in range(3))
        j, m = aefun.sup(a, b), aefun.inf(a, b)
        if j + m != a + b:
            bad.append(f"sum law {a}, {b}")
        if not (aefun.ae_leq(a, j) and aefun.ae_leq(b, j) and aefun.ae_leq(m, a) and aefun.ae_leq(m, b)):
            bad.append(f"bounds {a}, {b}")
        if aefun.sup(a, aefun.sup(b, c)) != aefun.sup(aefun.sup(a, b), c):
            bad.append("sup associativity")
        if aefun.sup(a, aefun.inf(a, b)) != a:
            bad.append("absorption")
        if aefun.inf(a, aefun.sup(b, c)) != aefun.sup(aefun.inf(a, b), aefun.inf(a, c)):
            bad.append("distributivity")
        if aefun.sup(a, b) + c != aefun.sup(a + c, b + c):
            bad.append("translation")
    return _result("lattice_laws", n, bad)


def prop_f_ring(rng, n) -> PropertyResult:
    bad = []
    for _ in range(n):
        a, t = poring.random_piecewise(rng), poring.random_piecewise(rng)
        t = t * t
        # positive and negative parts of a meet in 0
        r = aefun.sup(a, aefun.PiecewiseRat.const(0))
        s = -aefun.inf(a, aefun.PiecewiseRat.const(0))
        if aefun.inf(r, s) != aefun.PiecewiseRat.const(0):
            bad.append(f"parts of {a}")
            continue
        if not aefun.f_ring_condition_check(r, s, t):
            bad.append(f"f-ring {a}, {t}")
        if aefun.inf(r * t, s) != aefun.PiecewiseRat.const(0):
            bad.append(f"product meet {a}, {t}")
    return _result("f_ring_condition", n, bad)


def prop_ae_exceptional(rng, n) -> PropertyResult:
    bad = []
    for _ in range(n):
        a, b = poring.random_piecewise(rng), poring.random_piecewise(rng)
        e = (a + b).exceptional()
        ea, eb = a.exceptional(), b.exceptional()
        for p in e.points:
            if not (ea.contains(p) or eb.contains(p)):
                # a new exceptional point can only come from a breakpoint of a or b
                if not any(aefun._norm_point(q) == p for q in list(a.breakpoints) + list(b.breakpoints)):
                    bad.append(f"{a} + {b}: {p}")
        for t in (a + b).sample_points():
            va, vb, vs = a.value_at(t), b.value_at(t), (a + b).value_at(t)
            if va is not None and vb is not None and vs != va + vb:
                bad.append(f"value at {t}")
    return _result("ae_sum_pointwise", n, bad)


def _small_spaces(max_points: int):
    for k in range(1, max_points + 1):
        yield from finitetop.topologies(k)


def prop_continuity_classification(rng, n) -> PropertyResult:
    bad, cases = [], 0
    import itertools

    for X in _small_spaces(3):
        for A in finitetop.opens(X):
            pts = sorted(A)
            for vals in itertools.product((0, 1, 2), repeat=len(pts)):
                cases += 1
                f = dict(zip(pts, vals))
                by_pre = finitetop.is_continuous(X, A, f)
                by_comp = all(len({f[p] for p in comp}) == 1 for comp in finitetop.components(X, A))
                if by_pre != by_comp:
                    bad.append(f"{X} {f}")
    return _result("continuity_classification", cases, bad)


def prop_dense_intersection(rng, n) -> PropertyResult:
    bad, cases = [], 0
    for X in _small_spaces(5):
        dense = [A for A in finitetop.opens(X) if finitetop.is_dense(X, A)]
        for A in dense:
            for B in dense:
                cases += 1
                if not finitetop.is_dense(X, A & B):
                    bad.append(f"{X}: {sorted(A)} {sorted(B)}")
    return _result("dense_open_intersection", cases, bad)


def prop_quotient_axioms(rng, n) -> PropertyResult:
    bad, cases = [], 0
    pool = (-1, 0, 1, 2)
    for X in _small_spaces(3):
        for D in finitetop.admissible_families(X):
            funcs = [f for a in sorted(D.masks) for f in finitetop.functions_on(X, a, pool)]
            picks = [tuple(rng.choice(funcs) for _ in range(3)) for _ in range(n)]
            zero, one = finitetop.ContFun.const(X, 0), finitetop.ContFun.const(X, 1)
            for f, g, h in picks:
                cases += 1
                Q = lambda u, v: finitetop.quotient_ops(D, "equiv", u, v)  # noqa: E731
                L = lambda u, v: finitetop.quotient_ops(D, "leq", u, v)  # noqa: E731
                checks = [
                    Q((f + g) + h, f + (g + h)),
                    Q(f * (g + h), f * g + f * h),
                    Q(f + (-f), zero),
                    Q(f * one, f),
                    L(f, f),
                    not (L(f, g) and L(g, h)) or L(f, h),
                    not L(f, g) or L(f + h, g + h),
                    L(zero, h * h),
                    not (L(zero, f) and L(zero, g)) or L(zero, f * g),
                    (finitetop.AeClassF(D, f) == finitetop.AeClassF(D, g)) == Q(f, g),
                    (L(f, g) and L(g, f)) == Q(f, g),
                ]
                if not all(checks):
                    bad.append(f"{D}: {f}, {g}, {h}")
    return _result("quotient_ring_axioms", cases, bad)


def prop_finite_strong_loc(rng, n) -> PropertyResult:
    bad, cases = [], 0
    for X in _small_spaces(4):
        for D in finitetop.admissible_families(X):
            cases += 1
            r = finitetop.strong_loc_bruteforce(D, (-2, -1, 0, 1, 2))
            if not isinstance(r, finitetop.Holds) or r.trivial_ring != D.has_empty():
                bad.append(repr(D))
    return _result("finite_strong_localizability", cases, bad)


def prop_max_representative(rng, n) -> PropertyResult:
    bad, cases = [], 0
    for X in _small_spaces(4):
        cases += 1
        if not finitetop.max_rep_uniqueness_check(X, (-2, -1, 0, 1, 2)):
            bad.append(repr(X))
    return _result("max_representative_unique", cases, bad)


def prop_inclusion_embedding(rng, n) -> PropertyResult:
    bad, cases = [], 0
    for X in _small_spaces(3):
        D = finitetop.dense_open_family(X)
        for Dp in finitetop.admissible_families(X):
            if not Dp.masks <= D.masks:
                continue
            cases += 1
            if not finitetop.inclusion_embedding_check(Dp, D):
                bad.append(f"{Dp} in {D}")
    return _result("inclusion_embedding", cases, bad)


# ---------------------------------------------------------------------------
# sec4: localization, bounded elements, characters, separators

LOC_INSTANCES = (poring.Q, poring.QX, poring.QFX, poring.GERM0, poring.AE)


def _random_loc(R, rng):
    return localization.make_loc(R, R.random_elem(rng), R.one() + R.random_nonneg(rng))


def prop_localization(rng, n) -> PropertyResult:
    bad = []
    for R in LOC_INSTANCES:
        for _ in range(n):
            a, b, c = (_random_loc(R, rng) for _ in range(3))
            p, q = R.random_elem(rng), R.one() + R.random_nonneg(rng)
            t = R.one() + R.random_nonneg(rng)
            # equivalence: scaling both parts by a Loc element gives the same class
            if localization.make_loc(R, p, q) != localization.make_loc(R, p * t, q * t):
                bad.append(f"{R.name}: scaling {p}/{q} by {t}")
            if (a + b) + c != a + (b + c) or a * (b + c) != a * b + a * c or a * b != b * a:
                bad.append(f"{R.name}: ring axioms")
            if a + (-a) != localization.iota(R.zero()):
                bad.append(f"{R.name}: negation")
            if localization.loc_leq(a, b) and not localization.loc_leq(a + c, b + c):
                bad.append(f"{R.name}: translation")
            if localization.loc_in_cone(a) and localization.loc_in_cone(b) and not localization.loc_in_cone(a * b):
                bad.append(f"{R.name}: cone product")
            if not localization.loc_in_cone(a * a):
                bad.append(f"{R.name}: squares")
            # cone characterization p/q >= 0 iff p >= 0
            if localization.loc_in_cone(localization.make_loc(R, p, q)) != poring.in_cone(R, p):
                bad.append(f"{R.name}: cone of {p}/{q}")
            # iota is an order embedding and a ring morphism
            r1, r2 = R.random_elem(rng), R.random_elem(rng)
            u, v = localization.iota_order_check(r1, r2)
            if u != v:
                bad.append(f"{R.name}: iota order {r1}, {r2}")
            if localization.iota(r1 * r2) != localization.iota(r1) * localization.iota(r2):
                bad.append(f"{R.name}: iota product")
            if localization.iota(r1 + r2) != localization.iota(r1) + localization.iota(r2):
                bad.append(f"{R.name}: iota sum")
    return _result("localization_axioms", n * len(LOC_INSTANCES), bad)


def prop_bounded(rng, n) -> PropertyResult:
    bad = []
    for R in (poring.Q, poring.QX, poring.QFX):
        for _ in range(n):
            a = _random_loc(R, rng)
            v = localization.bdd_member(a)
            if isinstance(v, localization.Bounded):
                N = localization.iota(R.elem(v.n))
                if not (localization.loc_leq(-N, a) and localization.loc_leq(a, N)):
                    bad.append(f"{R.name}: {a} not within {v.n}")
                if v.n > 0:
                    M = localization.iota(R.elem(v.n - 1))
                    if localization.loc_leq(-M, a) and localization.loc_leq(a, M):
                        bad.append(f"{R.name}: {a} bound {v.n} not least")
            else:
                f = a.as_ratfun()
                if f.bounded_at_infinity() and not any(True for _ in (isolate_roots(f.den) if f.den.degree > 0 else ())):
                    bad.append(f"{R.name}: {a} reported unbounded")
    return _result("bounded_subring", n * 3, bad)


def prop_characters(rng, n) -> PropertyResult:
    bad, cases = [], 0
    R = poring.QX
    for _ in range(n):
        phi = rng.choice([Fraction(rng.randint(-8, 8), rng.randint(1, 4)), "inf"])
        # bounded fractions r/s with |r| <= s
        elems = []
        for _ in range(3):
            r = R.random_elem(rng)
            elems.append(localization.make_bdd(localization.make_loc(R, r, poring.dominating_loc_bound(R, r))))
        a, b = elems[0], elems[1]
        cases += 1
        va, vb = gelfand.char_eval(phi, a), gelfand.char_eval(phi, b)
        s = localization.make_bdd(a.value + b.value) if localization.bdd_member(a.value + b.value).name == "Bounded" else None
        p = localization.make_bdd(a.value * b.value)
        if s is not None and gelfand.char_eval(phi, s) != va + vb:
            bad.append(f"additive at {phi}")
        if gelfand.char_eval(phi, p) != va * vb:
            bad.append(f"multiplicative at {phi}")
        if localization.loc_in_cone(a.value) and va < 0:
            bad.append(f"positive at {phi}")
        if abs(va) > a.bound:
            bad.append(f"bound at {phi}")
        if not gelfand.circle_relation_check(phi):
            bad.append(f"circle at {phi}")
    return _result("extended_characters", cases, bad)


def random_separator_config(rng: random.Random):
    """A rational or infinite point, bounded elements, epsilon and probe characters."""
    R = poring.QX
    phi = rng.choice([Fraction(rng.randint(-6, 6), rng.randint(1, 3)), "inf"])
    a_list = []
    for _ in range(rng.randint(1, 3)):
        num = Poly([Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(1, 3))])
        den = Poly((1, 0, 1)) ** 2
        if num.degree > 4:
            num = Poly(num.coeffs[:4])
        a_list.append(localization.make_bdd(localization.make_loc(R, R.elem(num), R.elem(den))))
    eps = Fraction(1, rng.choice([2, 4, 8, 16]))
    psi = [Fraction(k, 4) for k in range(-40, 41, 3)] + ["inf"]
    return phi, a_list, eps, psi


def prop_separator(rng, n) -> PropertyResult:
    bad, far = [], 0
    for _ in range(n):
        phi, a_list, eps, psi = random_separator_config(rng)
        rep = gelfand.neighbourhood_separator(phi, a_list, eps, psi)
        far += len(rep.far)
        if not rep.ok or rep.phi_b > Fraction(-1, 2) or any(v < Fraction(1, 8) for _, v in rep.far):
            bad.append(f"phi={phi}, eps={eps}")
    return _result("neighbourhood_separator", n, bad)


# ---------------------------------------------------------------------------
# sec5: positivity, kernel, certificates


def positivity_corpus() -> list:
    """Fixed corpus for the transform-positivity versus cone-closure comparison."""
    QX, QFX, G = poring.QX, poring.QFX, poring.GERM0
    texts = {
        QX: [
            "0", "1", "-1", "x", "-x", "x^2", "-x^2", "x^2-1", "1-x^2", "x^2+1", "(x-1)^2", "-(x-1)^2",
            "x^3", "x^3-x", "x^4", "x^4-2*x^2+1", "x^4-x", "x^2-2*x+2", "x^2-x", "2*x^2-4*x+2", "x^6",
            "(x^2-2)^2", "(x^2-2)^2-1/100", "x^4+x^3+x^2+x+1", "-x^4-1", "x^2+x+1/4", "x^2+x+1/3",
            "x^2+x+1/5", "3", "1/2", "(x-1/3)^2*(x+5)^2", "x^8-x^7", "x^4-4*x^3+6*x^2-4*x+1", "5*x^2-2*x+1",
            "x*(x-1)*(x-2)*(x-3)", "x*(x-1)*(x-2)*(x-3)+1", "x*(x-1)*(x-2)*(x-3)+2",
        ],
        QFX: [
            "1/x", "1/x^2", "-1/x^2", "x/(1+x^2)", "x^2/(1+x^2)", "1/(1+x^2)", "(x-1)/(x+1)", "(x-1)^2/(x+1)^2",
            "1/(x^2-1)", "(x^2-1)/(x^2+1)", "2*x/(1+x^2)", "1-2*x/(1+x^2)", "1/(x-1)^2", "-1/(x-1)^2",
            "(x^2+1)/(x^4+1)", "x^3/(x^2+1)", "(x^2-2)^2/(x^2+1)", "1/x-1/x^3", "x-1/x", "x^2+1/x^2",
            "(x^3-x)/(x^4+1)", "-(x^2+1)/(x^2+2)", "1/(x^2-x)", "(x-3)^2/(x-1)^4", "0",
        ],
        G: [
            "0", "1", "-1", "x", "-x", "x^2", "-x^2", "x^3", "-x^3", "x^4", "-x^4", "x^2-x^3", "-x^2+x^3",
            "1-1000000*x^2", "-1+x", "1+x", "x-x^2", "x^2+x^3", "-x^2-x^3", "x^5", "-x^4+x^5", "2-x",
            "x^3-x^4", "1/2-x^7", "x^6", "-x^6+x^2", "x^2-x^6", "-x^2+x^6", "x+x^2", "-x+x^2", "x^3+x^4",
            "-3*x^4", "7", "x^4-x^2", "x^4-x^5", "x^8", "-x^8+x^9", "-x^3-x^5",
        ],
    }
    return [R.parse(t) for R, items in texts.items() for t in items]


def prop_positivity_equiv(rng, n) -> PropertyResult:
    bad, cases = [], 0
    for r in positivity_corpus():
        cases += 1
        v = gelfand.positivity_equiv_check(r)
        if not isinstance(v, gelfand.Agree):
            bad.append(f"{r.ring.name}: {r}")
    G = poring.GERM0
    special = poring.ddagger_decide(G, G.parse("-x^2"))
    if not (isinstance(special, poring.InConeClosure) and special.witness == G.one()):
        bad.append("germ -x^2 witness")
    return _result("positivity_equivalence", cases, bad)


def prop_kernel(rng, n) -> PropertyResult:
    bad, cases = [], 0
    G, QX = poring.GERM0, poring.QX
    for _ in range(n):
        for R in (QX, G):
            r = R.random_elem(rng)
            s = R.random_nonneg(rng)
            cases += 1
            k = gelfand.kernel_check(r, s)
            if R is QX and k != (r == R.zero()):
                bad.append(f"Q[x] kernel {r}, {s}")
            if R is G:
                # lowest-order oracle: multiples of r stay within ±s iff s is of lower order
                rp, sp = r.payload, s.payload
                expect = (not rp) or (bool(sp) and sp.order() < rp.order())
                if k != expect:
                    bad.append(f"germ kernel {r}, {s}")
            if not k:
                m = gelfand.kernel_failure(r, s)
                if m is None or (R.is_nonneg((s - r * m).payload) and R.is_nonneg((s + r * m).payload)):
                    bad.append(f"failure witness {r}, {s}")
    x3, x2 = G.parse("x^3"), G.parse("x^2")
    if not gelfand.kernel_check(x3, x2) or gelfand.gelfand_transform(x3) != aefun.PiecewiseRat.const(0):
        bad.append("x^3 kernel element")
    return _result("kernel_characterization", cases, bad)


def random_positive_poly(rng: random.Random, min_value=Fraction(1, 4), degree=6, size=10) -> Poly:
    while True:
        d = rng.randint(0, degree)
        p = Poly([Fraction(rng.randint(-size, size)) for _ in range(d + 1)])
        if not p:
            continue
        q = p - min_value
        if q(-1) >= 0 and q(1) >= 0 and poly_nonneg(q, (Fraction(-1), Fraction(1))):
            return p


def random_sign_changing_poly(rng: random.Random, degree=6, size=10) -> Poly:
    while True:
        d = rng.randint(1, degree)
        p = Poly([Fraction(rng.randint(-size, size)) for _ in range(d + 1)])
        if p.degree < 1:
            continue
        vals = [p(Fraction(k, 8)) for k in range(-8, 9)]
        if min(vals) < 0 < max(vals):
            return p


def prop_certificates(rng, n) -> PropertyResult:
    bad = []
    for _ in range(n):
        p = random_positive_poly(rng)
        c = certify.find_certificate(p, (-1, 1), 64)
        if not isinstance(c, certify.HandelmanCertificate) or not certify.verify_certificate(p, c):
            bad.append(f"no certificate for {p}")
            continue
        # elevation keeps nonnegativity
        beta = certify.bernstein_coeffs(p, c.degree, (-1, 1))
        if not all(v >= 0 for v in certify.elevate(beta)):
            bad.append(f"elevation {p}")
        q = random_sign_changing_poly(rng)
        w = certify.find_certificate(q, (-1, 1), 64)
        if not isinstance(w, certify.NotPositive) or not (-1 <= w.witness <= 1 and q(w.witness) < 0):
            bad.append(f"witness for {q}")
    return _result("certificates", 2 * n, bad)


def prop_domains(rng, n) -> PropertyResult:
    bad = []
    R = poring.QX
    for _ in range(n):
        q = R.one() + R.random_nonneg(rng)
        s = R.one() + R.random_nonneg(rng)
        if not gelfand.domain_product_check(q, s):
            bad.append(f"{q}, {s}")
    return _result("domain_of_product", n, bad)


# ---------------------------------------------------------------------------
# sec6: density, injectivity, the main dichotomy


def prop_density(rng, n) -> PropertyResult:
    bad = []
    for R in (poring.QX, poring.QFX):
        for _ in range(n):
            q = R.one() + R.random_nonneg(rng)
            rep = gelfand.density_check(q)
            if not (rep.dense and rep.domains_match):
                bad.append(f"{R.name}: {q}")
    return _result("density_of_domains", 2 * n, bad)


def prop_transform_embedding(rng, n) -> PropertyResult:
    bad = []
    for R in (poring.QX, poring.QFX, poring.AE):
        for _ in range(n):
            a, b = R.random_elem(rng), R.random_elem(rng)
            ta, tb = gelfand.gelfand_transform(a), gelfand.gelfand_transform(b)
            if (ta == tb) != (a == b):
                bad.append(f"{R.name}: injectivity {a}, {b}")
            if aefun.ae_leq(ta, tb) != poring.leq(R, a, b):
                bad.append(f"{R.name}: order {a}, {b}")
            if gelfand.gelfand_transform(a + b) != ta + tb or gelfand.gelfand_transform(a * b) != ta * tb:
                bad.append(f"{R.name}: morphism {a}, {b}")
    return _result("transform_injective_order_reflecting", 3 * n, bad)


def prop_representative_independence(rng, n) -> PropertyResult:
    bad = []
    R = poring.QX
    for _ in range(n):
        r = R.random_elem(rng)
        s = poring.dominating_loc_bound(R, r)
        s2 = s * (R.one() + R.random_nonneg(rng))
        if not gelfand.representative_independence_check(r, s, s2):
            bad.append(f"{r}")
    return _result("representative_independence", n, bad)


def prop_dichotomy(rng, n) -> PropertyResult:
    bad = []
    for R in (poring.QX, poring.QFX, poring.AE, poring.GERM0):
        samples = [R.random_elem(rng) for _ in range(n)]
        arch = isinstance(poring.archimedean_check(R, samples), poring.Archimedean)
        x3 = R.parse("x^3")
        kernel_nonzero = R is poring.GERM0 and gelfand.gelfand_transform(x3) == aefun.PiecewiseRat.const(0)
        if R is poring.GERM0:
            if arch or not kernel_nonzero:
                bad.append("germ0 should be non-archimedean with a kernel")
        elif not arch:
            bad.append(f"{R.name} should be archimedean")
    return _result("main_dichotomy", 4, bad)


# ---------------------------------------------------------------------------
# sec7: sigma-boundedness, f-rings, ordered fields


def prop_sigma(rng, n) -> PropertyResult:
    bad = []
    R = poring.QX
    samples = [R.random_elem(rng) for _ in range(n)]
    pairs = [(R.random_elem(rng), R.random_elem(rng)) for _ in range(n)]
    rep = gelfand.sigma_bounded_suite(R, samples, pairs)
    if not rep.embedding_verified or any(k is None for _, k in rep.covering):
        bad.append("Q[x] sigma suite")
    if not gelfand.covers(R.parse("x^5"), 5):
        bad.append("x^5 at n=5")
    rq = gelfand.sigma_bounded_suite(poring.QFX, [poring.QFX.parse("1/x")])
    if not rq.flagged:
        bad.append("Q(x) flag")
    return _result("sigma_bounded", n, bad)


def prop_ordered_field(rng, n) -> PropertyResult:
    """Q(x) with the a.e. order is a partially ordered field; the order is not total."""
    bad = []
    R = poring.QFX
    for _ in range(n):
        a = R.random_elem(rng)
        if a == R.zero():
            continue
        inv = R.elem(a.payload.inverse())
        if a * inv != R.one():
            bad.append(f"inverse {a}")
        if poring.in_cone(R, a) and not poring.in_cone(R, inv):
            bad.append(f"positive inverse {a}")
    x = R.parse("x")
    if poring.leq(R, x, R.zero()) or poring.leq(R, R.zero(), x):
        bad.append("x should be incomparable with 0")
    return _result("ordered_field", n, bad)


# ---------------------------------------------------------------------------

PROPERTIES: dict[str, list[tuple[Callable, int]]] = {
    "sec2": [
        (prop_order_axioms, 25),
        (prop_cone_axioms, 25),
        (prop_strong_localizability, 40),
        (prop_dominating_bound, 25),
        (prop_identities, 1),
        (prop_germ_ddagger_probe, 40),
        (prop_poly_nonneg_oracle, 150),
        (prop_archimedean_verdicts, 10),
    ],
    "sec3": [
        (prop_lattice_laws, 40),
        (prop_f_ring, 40),
        (prop_ae_exceptional, 40),
        (prop_continuity_classification, 1),
        (prop_dense_intersection, 1),
        (prop_quotient_axioms, 6),
        (prop_finite_strong_loc, 1),
        (prop_max_representative, 1),
        (prop_inclusion_embedding, 1),
    ],
    "sec4": [
        (prop_localization, 20),
        (prop_bounded, 30),
        (prop_characters, 30),
        (prop_separator, 10),
    ],
    "sec5": [
        (prop_positivity_equiv, 1),
        (prop_kernel, 40),
        (prop_certificates, 15),
        (prop_domains, 20),
    ],
    "sec6": [
        (prop_density, 20),
        (prop_transform_embedding, 20),
        (prop_representative_independence, 20),
        (prop_dichotomy, 10),
    ],
    "sec7": [
        (prop_sigma, 20),
        (prop_ordered_field, 30),
    ],
}


def run_suite(name: str, seed: int) -> SuiteReport:
    if name == "all":
        names = list(SECTIONS)
    elif name in PROPERTIES:
        names = [name]
    else:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SECTIONS)} or all")
    report = SuiteReport(name, seed)
    for sec in names:
        for fn, count in PROPERTIES[sec]:
            res = fn(_rng(seed, f"{sec}.{fn.__name__}"), count)
            res.name = f"{sec}.{res.name}"
            report.results.append(res)
    return report
