import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aegelfand import localization as L
from aegelfand import poring
from aegelfand.errors import MixedRings, NotLocalizable

QX, QFX, GERM = poring.QX, poring.QFX, poring.GERM0
INSTANCES = [poring.Q, QX, QFX, GERM, poring.AE]
seeds = st.integers(0, 2**32)


def _loc(R, p, q="1"):
    return L.make_loc(R, R.parse(p), R.parse(q))


def _random_loc(R, rng):
    return L.make_loc(R, R.random_elem(rng), R.one() + R.random_nonneg(rng))


def test_denominator_must_be_localizable():
    with pytest.raises(NotLocalizable):
        _loc(QX, "1", "x")
    with pytest.raises(NotLocalizable):
        _loc(QX, "1", "1/2")


def test_equivalence_of_fractions():
    assert _loc(QX, "x^2+1", "x^2+1") == L.iota(QX.one())
    assert _loc(QX, "x*(x^2+2)", "(x^2+1)*(x^2+2)") == _loc(QX, "x", "x^2+1")
    with pytest.raises(MixedRings):
        L.loc_add(_loc(QX, "x"), _loc(GERM, "x"))


# least integer bound, from the exact supremum of |f| worked out by hand
BOUND_TABLE = [
    ("1", "x^2+1", 1),  # sup 1
    ("x", "x^2+1", 1),  # sup 1/2
    ("2*x^2+3", "x^2+1", 3),  # sup 3 at x = 0
    ("7*x^2", "x^2+1", 7),  # supremum 7 not attained
    ("4*x", "x^2+1", 2),  # sup 2 at x = 1
    ("x^3", "x^4+1", 1),  # sup 3^(3/4)/4 < 1
]


@pytest.mark.parametrize("p,q,n", BOUND_TABLE)
def test_least_bound(p, q, n):
    a = _loc(QX, p, q)
    v = L.bdd_member(a)
    assert isinstance(v, L.Bounded) and v.n == n
    # sampling lower bound on the supremum
    f = a.as_ratfun()
    sampled = max(abs(f(Fraction(k, 16))) for k in range(-320, 321))
    assert sampled <= n


def test_unbounded_elements():
    assert isinstance(L.bdd_member(_loc(QX, "x")), L.Unbounded)
    assert isinstance(L.bdd_member(_loc(QFX, "1/x")), L.Unbounded)
    assert not L.is_bounded(_loc(QFX, "1/(x-1)^2"))
    assert L.is_bounded(_loc(QFX, "x^2/(x^2+1)"))


def test_germ_bound():
    assert L.germ_bound(_loc(GERM, "x", "1+x^2")) == 1
    assert L.germ_bound(_loc(GERM, "3+x", "1+x^2")) >= 3


@settings(max_examples=30, deadline=None)
@given(seeds, st.sampled_from(INSTANCES))
def test_ring_axioms(seed, R):
    rng = random.Random(seed)
    a, b, c = (_random_loc(R, rng) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == L.iota(R.zero())


@settings(max_examples=30, deadline=None)
@given(seeds, st.sampled_from(INSTANCES))
def test_cone_characterization(seed, R):
    rng = random.Random(seed)
    p, q = R.random_elem(rng), R.one() + R.random_nonneg(rng)
    assert L.loc_in_cone(L.make_loc(R, p, q)) == poring.in_cone(R, p)


@settings(max_examples=30, deadline=None)
@given(seeds, st.sampled_from(INSTANCES))
def test_iota_is_an_order_embedding(seed, R):
    rng = random.Random(seed)
    r, s = R.random_elem(rng), R.random_elem(rng)
    assert L.loc_leq(L.iota(r), L.iota(s)) == poring.leq(R, r, s)
    assert L.iota(r * s) == L.iota(r) * L.iota(s)


@settings(max_examples=30, deadline=None)
@given(seeds, st.sampled_from([poring.Q, QX, QFX]))
def test_bounded_certificate_is_tight(seed, R):
    a = _random_loc(R, random.Random(seed))
    v = L.bdd_member(a)
    if isinstance(v, L.Bounded):
        N = L.iota(R.elem(v.n))
        assert L.loc_leq(-N, a) and L.loc_leq(a, N)
        if v.n:
            M = L.iota(R.elem(v.n - 1))
            assert not (L.loc_leq(-M, a) and L.loc_leq(a, M))
    assert L.is_bounded(a) == isinstance(v, L.Bounded)
