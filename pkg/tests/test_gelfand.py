import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aegelfand import aefun, gelfand as G
from aegelfand import localization as L
from aegelfand import poring
from aegelfand.aefun import PiecewiseRat
from aegelfand.errors import NotLocalizable, PreconditionFailed, UnsupportedInstance
from aegelfand.exact import parse_ratfun
from aegelfand.suite import positivity_corpus, random_separator_config

QX, QFX, GERM, AE = poring.QX, poring.QFX, poring.GERM0, poring.AE
seeds = st.integers(0, 2**32)


def _bdd(R, p, q):
    return L.make_bdd(L.make_loc(R, R.parse(p), R.parse(q)))


def test_character_values():
    b = _bdd(QX, "x", "x^2+1")
    assert G.char_eval(2, b) == Fraction(2, 5)
    assert G.char_eval("inf", b) == 0
    assert G.char_eval("inf", _bdd(QX, "x^2", "x^2+1")) == 1
    assert all(G.circle_relation_check(t) for t in (Fraction(-3), Fraction(1, 2), "inf"))


def test_domains():
    assert str(G.O_lt_infty(QX.parse("x^2+1"))) == "CofiniteOnLine(excluded={inf})"
    assert G.O_lt_infty(QX.parse("3")).kind == "FullCircle"
    assert str(G.O_lt_infty(QFX.parse("1+1/x^2"))) == "CofiniteOnLine(excluded={0})"
    assert G.domain_product_check(QX.parse("x^2+1"), QX.parse("x^4+2"))
    with pytest.raises(NotLocalizable):
        G.O_lt_infty(QX.parse("x"))
    with pytest.raises(UnsupportedInstance):
        G.O_lt_infty(GERM.parse("1"))


def test_transform_examples():
    assert G.gelfand_transform(QX.parse("x^3-x")) == PiecewiseRat.from_ratfun(parse_ratfun("x^3-x"))
    assert G.gelfand_transform(QFX.parse("1/x")) == PiecewiseRat.from_ratfun(parse_ratfun("1/x"))
    assert G.gelfand_transform(GERM.parse("x^3")) == PiecewiseRat.const(0)
    assert G.gelfand_transform(GERM.parse("3+x^3")) == PiecewiseRat.const(3)
    f = AE.parse("piecewise{ (-inf,0): -x; (0,inf): x }")
    assert G.gelfand_transform(f) == f.payload


def test_representative_independence():
    r = QX.parse("x^3-x")
    s = poring.dominating_loc_bound(QX, r)
    assert G.representative_independence_check(r, s, s * QX.parse("x^2+1"))


def test_kernel_characterizations():
    assert G.kernel_check(GERM.parse("x^3"), GERM.parse("x^2"))
    assert not G.kernel_check(GERM.parse("x^2"), GERM.parse("x^2"))
    assert G.kernel_witness(GERM.parse("x^3")) == GERM.parse("x^2")
    assert G.kernel_witness(GERM.parse("x^4")) == GERM.parse("x^2")
    assert G.kernel_witness(GERM.parse("1+x")) is None
    assert not G.kernel_check(QX.parse("x"), QX.parse("x^2+1"))
    n = G.kernel_failure(QX.parse("x"), QX.parse("x^2+1"))
    assert n == 4  # x^2+1-2x is a square, x^2+1-4x is not
    assert not poring.in_cone(QX, QX.parse(f"x^2+1-{n}*x"))
    with pytest.raises(PreconditionFailed):
        G.kernel_check(QX.parse("x"), QX.parse("-1"))


@pytest.mark.parametrize("r", positivity_corpus(), ids=str)
def test_positivity_equivalence_corpus(r):
    assert isinstance(G.positivity_equiv_check(r), G.Agree)


def test_corpus_size_and_spread():
    corpus = positivity_corpus()
    assert len(corpus) >= 100
    assert {e.ring.name for e in corpus} == {"Q[x]", "Q(x)", "germ0"}


@settings(max_examples=30, deadline=None)
@given(seeds, st.sampled_from([QX, QFX, AE]))
def test_transform_is_injective_order_reflecting_morphism(seed, R):
    rng = random.Random(seed)
    a, b = R.random_elem(rng), R.random_elem(rng)
    ta, tb = G.gelfand_transform(a), G.gelfand_transform(b)
    assert (ta == tb) == (a == b)
    assert aefun.ae_leq(ta, tb) == poring.leq(R, a, b)
    assert G.gelfand_transform(a * b) == ta * tb


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_density(seed):
    rng = random.Random(seed)
    q = QFX.one() + QFX.random_nonneg(rng)
    rep = G.density_check(q)
    assert rep.dense and rep.domains_match


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_separator(seed):
    phi, a_list, eps, psi = random_separator_config(random.Random(seed))
    rep = G.neighbourhood_separator(phi, a_list, eps, psi)
    assert rep.ok and rep.phi_b <= Fraction(-1, 2)
    assert all(v >= Fraction(1, 8) for _, v in rep.far)


def test_separator_preconditions():
    b = _bdd(QX, "x", "x^2+1")
    with pytest.raises(PreconditionFailed):
        G.neighbourhood_separator(0, [b], 0)
    with pytest.raises(PreconditionFailed):
        G.neighbourhood_separator(0, [], Fraction(1, 2))


def test_character_restriction_laws():
    samples = [QFX.parse(t) for t in ("1", "x", "1/x", "x^2+1", "1/(x-2)", "(x-1)/(x+1)")]
    for t in (Fraction(0), Fraction(2), Fraction(-1), "inf"):
        assert G.char_restriction(t).check_laws(samples)
    with pytest.raises(PreconditionFailed):
        G.char_restriction(Fraction(0)).value(QFX.parse("1/x"))


def test_sigma_boundedness():
    rep = G.sigma_bounded_suite(QX, [QX.parse("x^5"), QX.parse("x")], [(QX.parse("x"), QX.parse("x^2+1"))])
    assert rep.embedding_verified and not rep.flagged
    assert dict((str(r), n) for r, n in rep.covering)["x^5"] <= 5
    assert G.sigma_bounded_suite(QFX, [QFX.parse("1/x")]).flagged
    with pytest.raises(UnsupportedInstance):
        G.sigma_bounded_suite(GERM, [])
