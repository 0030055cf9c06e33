import importlib
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aegelfand.errors import ParseError, ZeroPolynomial
from aegelfand.exact import (
    NEG_INF,
    POS_INF,
    AlgebraicPoint,
    Poly,
    RatFun,
    algebraic_sign,
    compare_points,
    isolate_roots,
    parse_piecewise,
    parse_point,
    parse_poly,
    parse_ratfun,
    poly_nonneg,
    rational_between,
    roots_between,
    sturm_count,
)
from aegelfand.exact.roots import odd_multiplicity_part, poly_nonneg_isolating

# (text, distinct real roots, roots in (0, 1), nonnegative on the line, roots to 6 places)
# computed once with sympy's real_roots and frozen here
ROOT_TABLE = [
    ("x^2-2", 2, 0, False, [-1.414214, 1.414214]),
    ("(x^2-2)*(x-3)", 3, 0, False, [-1.414214, 1.414214, 3.0]),
    ("x^4-10*x^2+1", 4, 1, False, [-3.146264, -0.317837, 0.317837, 3.146264]),
    ("(x-1)^2*(x+1)", 2, 0, False, [-1.0, 1.0]),
    ("x^5-x-1", 1, 0, False, [1.167304]),
    ("x^6+1", 0, 0, True, []),
    ("(x-1/2)^3*(x^2-3)", 3, 1, False, [-1.732051, 0.5, 1.732051]),
    ("x^3-x", 3, 0, False, [-1.0, 0.0, 1.0]),
    ("(x^2-2)^2", 2, 0, True, [-1.414214, 1.414214]),
    ("x^4-x^2+1/8", 4, 2, False, [-0.92388, -0.382683, 0.382683, 0.92388]),
    ("1000*x^2-1", 2, 1, False, [-0.031623, 0.031623]),
    ("x^8-x^7", 2, 0, False, [0.0, 1.0]),
]


@pytest.mark.parametrize("text,count,inside,nonneg,approx", ROOT_TABLE)
def test_roots_against_frozen_oracle(text, count, inside, nonneg, approx):
    p = parse_poly(text)
    roots = isolate_roots(p)
    assert sturm_count(p) == count == len(roots)
    assert len(roots_between(p, 0, 1)) == inside
    assert poly_nonneg(p) is nonneg
    assert poly_nonneg_isolating(p) is nonneg
    for r, v in zip(roots, approx):
        assert abs(float(r.refine_to(Fraction(1, 10**8)).approx()) - v) < 1e-6
        assert algebraic_sign(p, r) == 0


def test_isolating_intervals_are_disjoint_and_sorted():
    roots = isolate_roots(parse_poly("x^4-10*x^2+1"))
    for u, v in zip(roots, roots[1:]):
        assert u.hi < v.lo
        assert compare_points(u, v) < 0


def test_rational_roots_are_pinned():
    roots = isolate_roots(parse_poly("(x-1/3)*(x^2-2)"))
    assert [r.rational for r in roots] == [None, Fraction(1, 3), None]


def test_sturm_counts_half_open():
    p = parse_poly("x^3-x")
    assert sturm_count(p, 0, 1) == 1
    assert sturm_count(p, -1, 1) == 2
    assert sturm_count(p, NEG_INF, POS_INF) == 3
    with pytest.raises(ZeroPolynomial):
        sturm_count(Poly())


def test_region_nonnegativity():
    p = parse_poly("x^2-1")
    assert poly_nonneg(p, (1, 2))
    assert not poly_nonneg(p, (-1, 1))
    sqrt2 = isolate_roots(parse_poly("x^2-2"))[1]
    assert poly_nonneg(parse_poly("x^2-2"), (sqrt2, POS_INF))
    assert not poly_nonneg(parse_poly("x^2-2"), (1, sqrt2))


def test_odd_multiplicity_part():
    p = parse_poly("(x-1)^2*(x+2)^3*(x-5)")
    assert odd_multiplicity_part(p) == parse_poly("(x+2)*(x-5)")
    assert odd_multiplicity_part(parse_poly("(x^2+1)^2")) == Poly.const(1)


def test_rational_between_orders_points():
    a, b = isolate_roots(parse_poly("x^2-2"))
    q = rational_between(a, b)
    assert compare_points(a, q) < 0 < compare_points(b, q)
    assert rational_between(NEG_INF, Fraction(0)) < 0


def _random_poly(rng: random.Random) -> Poly:
    d = rng.randint(0, 7)
    p = Poly([Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(d + 1)])
    if rng.random() < 0.4:
        q = Poly([Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(1, 3))])
        p = p * q * q
    return p


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from([None, (-1, 1), (0, 3), (Fraction(-5, 2), POS_INF)]))
def test_nonneg_fast_path_matches_isolating_route(seed, region):
    p = _random_poly(random.Random(seed))
    if region is None:
        assert poly_nonneg(p) == poly_nonneg_isolating(p)
    else:
        assert poly_nonneg(p, region) == poly_nonneg_isolating(p, region)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_root_count_matches_sympy(seed):
    sympy = pytest.importorskip("sympy")
    p = _random_poly(random.Random(seed))
    if not p:
        return
    x = sympy.symbols("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(p.coeffs))
    if p.degree <= 0:
        assert sturm_count(p) == 0
        return
    expected = len(set(sympy.Poly(expr, x).real_roots()))
    assert sturm_count(p) == expected


def test_parse_round_trips():
    for text in ["x^3-2*x+1/2", "(x-1)^2", "3", "-x^4+x"]:
        p = parse_poly(text)
        assert parse_poly(str(p)) == p
    f = parse_ratfun("(x^2-1)/(x-1)")
    assert f == RatFun(parse_poly("x+1"))
    assert parse_ratfun(str(parse_ratfun("1/(x^2+1)-x"))) == parse_ratfun("1/(x^2+1)-x")
    with pytest.raises(ParseError):
        parse_poly("x^")
    with pytest.raises(ParseError):
        parse_poly("1/x")


def test_parse_points():
    assert parse_point("3/4") == Fraction(3, 4)
    assert parse_point("inf") == POS_INF
    assert parse_point("root(x^2-4; 1..3)") == 2
    r = parse_point("root(x^2-2; 1..2)")
    assert isinstance(r, AlgebraicPoint)
    assert compare_points(r, Fraction(141, 100)) > 0


def test_parse_piecewise_with_algebraic_breakpoint():
    pieces = parse_piecewise("piecewise{ (-inf,root(x^2-2; 1..2)): x; (root(x^2-2; 1..2),inf): -x }")
    assert len(pieces) == 2
    assert pieces[0][2] == RatFun.x()


@pytest.mark.parametrize("name", ["mul", "gcd_poly", "sturm_sequence", "prem"])
def test_backends_agree(name):
    pure = importlib.import_module("aegelfand.exact._kernels_py")
    try:
        compiled = importlib.import_module("aegelfand.exact._kernels")
    except ImportError:
        pytest.skip("compiled kernels not built")
    rng = random.Random(7)
    for _ in range(50):
        a = [rng.randint(-20, 20) for _ in range(rng.randint(1, 8))] + [rng.randint(1, 9)]
        b = [rng.randint(-20, 20) for _ in range(rng.randint(1, 5))] + [rng.randint(1, 9)]
        args = (a,) if name == "sturm_sequence" else (a, b)
        assert getattr(pure, name)(*args) == getattr(compiled, name)(*args)
