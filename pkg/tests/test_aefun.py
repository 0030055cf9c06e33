import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aegelfand import aefun, poring
from aegelfand.aefun import PiecewiseRat, parse_ae
from aegelfand.errors import PreconditionFailed
from aegelfand.exact import RatFun, parse_ratfun

seeds = st.integers(0, 2**32)
ZERO = PiecewiseRat.const(0)


def _probe_points(*fs):
    pts = set()
    for f in fs:
        pts.update(f.sample_points())
    pts.update(Fraction(k, 7) for k in range(-30, 31))
    return sorted(pts)


def test_sup_of_x_and_minus_x_is_abs():
    x = PiecewiseRat.from_ratfun(RatFun.x())
    a = aefun.sup(x, -x)
    assert str(a) == "piecewise{ (-inf,0): -x; (0,inf): x }"
    assert aefun.inf(x, -x) == -a
    assert a.exceptional().points == ()


def test_exceptional_sets():
    assert str(aefun.max_domain(parse_ae("1/x"))) == "{0}"
    assert aefun.max_domain(parse_ae("x")).infinity
    assert not aefun.max_domain(parse_ae("1/(x^2+1)")).infinity
    assert aefun.max_domain(parse_ae("x/(x+1)")).contains(Fraction(-1))
    jump = parse_ae("piecewise{ (-inf,0): 1; (0,inf): 2 }")
    assert aefun.max_domain(jump).contains(Fraction(0)) and aefun.max_domain(jump).infinity


def test_removable_breakpoint_is_merged():
    f = parse_ae("piecewise{ (-inf,1): x^2; (1,inf): x^2 }")
    assert f == PiecewiseRat.from_ratfun(parse_ratfun("x^2"))


def test_json_and_text_round_trip():
    rng = random.Random(3)
    for _ in range(50):
        f = poring.random_piecewise(rng)
        assert PiecewiseRat.from_json(f.to_json()) == f
        assert parse_ae(str(f)) == f


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_lattice_operations_are_pointwise(seed):
    rng = random.Random(seed)
    a, b = poring.random_piecewise(rng), poring.random_piecewise(rng)
    j, m = aefun.sup(a, b), aefun.inf(a, b)
    for t in _probe_points(a, b):
        va, vb = a.value_at(t), b.value_at(t)
        if va is None or vb is None:
            continue
        assert j.value_at(t) == max(va, vb)
        assert m.value_at(t) == min(va, vb)
    assert j + m == a + b


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_order_agrees_with_dense_sampling(seed):
    rng = random.Random(seed)
    a, b = poring.random_piecewise(rng), poring.random_piecewise(rng)
    if aefun.ae_leq(a, b):
        for t in _probe_points(a, b):
            va, vb = a.value_at(t), b.value_at(t)
            if va is not None and vb is not None:
                assert va <= vb
    else:
        w = (b - a).negativity_witness()
        assert w is not None and (b - a).value_at(w) < 0


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_f_ring_condition(seed):
    rng = random.Random(seed)
    a, t = poring.random_piecewise(rng), poring.random_piecewise(rng)
    r, s = aefun.sup(a, ZERO), -aefun.inf(a, ZERO)
    assert aefun.f_ring_condition_check(r, s, t * t)


def test_f_ring_preconditions():
    x = parse_ae("x")
    with pytest.raises(PreconditionFailed):
        aefun.f_ring_condition_check(x, x, parse_ae("1"))
    with pytest.raises(PreconditionFailed):
        aefun.f_ring_condition_check(ZERO, ZERO, parse_ae("-1"))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_strong_localizability_ae(seed):
    rng = random.Random(seed)
    f = poring.random_piecewise(rng)
    g = poring.random_piecewise(rng)
    assert aefun.strong_loc_check_ae(f, PiecewiseRat.const(1) + g * g)
