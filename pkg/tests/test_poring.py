import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aegelfand import poring
from aegelfand.errors import BudgetExceeded, MixedRings, PreconditionFailed
from aegelfand.symbolic import symbols

INSTANCES = [poring.Q, poring.QX, poring.QFX, poring.GERM0, poring.AE]
seeds = st.integers(0, 2**32)


@pytest.mark.parametrize("k", range(2, 9))
def test_semiring_expansion_matches_sympy(k):
    sympy = pytest.importorskip("sympy")
    r, s = sympy.symbols("r s")
    lhs = sum(comb(k, l) * (k - 2 * l) ** 2 * (s + r) ** (k - l) * (s - r) ** l for l in range(k + 1))
    closed = 4 * k * (2 * s) ** (k - 2) * s**2 + 4 * k * (k - 1) * (2 * s) ** (k - 2) * r**2
    assert sympy.expand(lhs - closed) == 0
    assert isinstance(poring.verify_identity("semiring_Sk", k=k), poring.Verified)


@pytest.mark.parametrize("name", ["sqrt_recursion", "sqrt_step_identity", "sqrt_telescope", "sqrt_final"])
@pytest.mark.parametrize("ell", range(1, 5))
def test_square_root_identities(name, ell):
    assert isinstance(poring.verify_identity(name, l=ell), poring.Verified)


def test_identity_errors_and_budget():
    assert isinstance(poring.verify_identity("bdd_product"), poring.Verified)
    assert isinstance(poring.verify_identity("separator_b"), poring.Verified)
    with pytest.raises(PreconditionFailed):
        poring.verify_identity("semiring_Sk", k=1)
    with pytest.raises(PreconditionFailed):
        poring.verify_identity("semiring_Sk")
    with pytest.raises(BudgetExceeded):
        poring.verify_identity("sqrt_final", l=9)
    with pytest.raises(KeyError):
        poring.verify_identity("nope")


def test_compare_reports_difference():
    r, s = symbols("r", "s")
    res = poring._compare([(r * s, s * r), ((r + s) ** 2, r * r + s * s)])
    assert isinstance(res, poring.Failed)
    assert res.diff == 2 * r * s


def test_order_examples():
    QFX, G = poring.QFX, poring.GERM0
    assert poring.leq(QFX, QFX.parse("1/(x^2+1)"), QFX.parse("1"))
    assert not poring.leq(QFX, QFX.zero(), QFX.parse("x"))
    assert poring.in_cone(G, G.parse("x^2-x^3"))
    assert not poring.in_cone(G, G.parse("x^3"))
    assert poring.in_cone(poring.QX, poring.QX.parse("(x^2-2)^2"))
    with pytest.raises(MixedRings):
        poring.leq(poring.QX, poring.QX.one(), G.one())


def test_ddagger_verdicts():
    G = poring.GERM0
    v = poring.ddagger_decide(G, G.parse("-x^2"))
    assert isinstance(v, poring.InConeClosure) and v.witness == G.one()
    assert poring.ddagger_probe(G, G.parse("-x^2"), G.one(), 200) is None
    assert isinstance(poring.ddagger_decide(G, G.parse("-1+x")), poring.NotInConeClosure)
    assert isinstance(poring.ddagger_decide(poring.QX, poring.QX.parse("-1")), poring.NotInConeClosure)
    assert poring.ddagger_probe(poring.QX, poring.QX.parse("-x^2"), poring.QX.one(), 10) == 1


def test_archimedean_dichotomy():
    for R in (poring.Q, poring.QX, poring.QFX, poring.AE):
        assert isinstance(poring.archimedean_check(R, [R.random_elem(random.Random(i)) for i in range(5)]), poring.Archimedean)
    v = poring.archimedean_check(poring.GERM0, [poring.GERM0.parse("5*x^3")])
    assert isinstance(v, poring.CounterexampleFound) and str(v.r) == "-x^2"


@settings(max_examples=40, deadline=None)
@given(seeds, st.sampled_from(INSTANCES))
def test_strong_localizability(seed, R):
    rng = random.Random(seed)
    s = R.one() + R.random_nonneg(rng)
    r = R.random_elem(rng)
    assert poring.loc_member(R, s)
    if poring.in_cone(R, r * s):
        assert poring.in_cone(R, r)


@settings(max_examples=40, deadline=None)
@given(seeds, st.sampled_from(INSTANCES))
def test_dominating_bound(seed, R):
    r = R.random_elem(random.Random(seed))
    s = poring.dominating_loc_bound(R, r)
    assert poring.leq(R, -s, r) and poring.leq(R, r, s) and poring.loc_member(R, s)


@settings(max_examples=40, deadline=None)
@given(seeds, st.sampled_from(INSTANCES))
def test_cone_contains_squares_and_is_closed(seed, R):
    rng = random.Random(seed)
    a, b, c = R.random_nonneg(rng), R.random_nonneg(rng), R.random_elem(rng)
    assert poring.in_cone(R, a + b) and poring.in_cone(R, a * b) and poring.in_cone(R, c * c)


def test_q_cone_is_exact():
    assert poring.in_cone(poring.Q, poring.Q.elem(Fraction(0)))
    assert not poring.in_cone(poring.Q, poring.Q.elem(Fraction(-1, 10**9)))


def test_fin_gen_probe():
    rep = poring.fin_gen_probe(poring.QX, [poring.QX.parse("x")], 2)
    assert rep.consistent_with_ambient
    with pytest.raises(PreconditionFailed):
        poring.fin_gen_probe(poring.QX, [], 0)
