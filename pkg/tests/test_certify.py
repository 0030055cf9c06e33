import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aegelfand import certify as C
from aegelfand.errors import DegreeTooSmall
from aegelfand.exact import Poly, compare_points, parse_poly, poly_nonneg
from aegelfand.suite import random_positive_poly, random_sign_changing_poly

seeds = st.integers(0, 2**32)
F = Fraction


def test_bernstein_examples():
    # hand-computed: on [0,1], x has coefficients (0, 1) and 1 + x^2 - x has (1, 1/2, 1)
    assert C.bernstein_coeffs(parse_poly("x"), 1, (0, 1)) == (0, 1)
    assert C.bernstein_coeffs(parse_poly("x^2-x+1"), 2, (0, 1)) == (1, F(1, 2), 1)
    assert C.bernstein_coeffs(parse_poly("x^2+1/4"), 2, (-1, 1)) == (F(5, 4), F(-3, 4), F(5, 4))
    with pytest.raises(DegreeTooSmall):
        C.bernstein_coeffs(parse_poly("x^3"), 2, (0, 1))


def test_linear_certificate():
    cert = C.find_certificate(parse_poly("x+2"), (-1, 1), 4)
    assert cert.degree == 1
    assert cert.coeffs == {(1, 0): F(1, 2), (0, 1): F(3, 2)}
    assert C.verify_certificate(parse_poly("x+2"), cert)


def test_elevation_reaches_certificate():
    p = parse_poly("x^2+1/4")
    cert = C.find_certificate(p, "[-1,1]", 64)
    assert isinstance(cert, C.HandelmanCertificate) and cert.degree == 5
    assert C.verify_certificate(p, cert)
    assert isinstance(C.find_certificate(p, (-1, 1), 4), C.NotFoundUpTo)


def test_zeros_and_negative_values():
    assert isinstance(C.find_certificate(parse_poly("x^2"), (-1, 1), 30), C.NotFoundUpTo)
    assert isinstance(C.find_certificate(Poly(), (-1, 1), 3), C.NotFoundUpTo)
    bad = C.find_certificate(parse_poly("x^2-1/4"), (-1, 1), 10)
    assert isinstance(bad, C.NotPositive)
    assert bad.value < 0 and parse_poly("x^2-1/4")(bad.witness) == bad.value
    lo, hi = bad.region
    assert compare_points(lo, bad.witness) <= 0 <= compare_points(hi, bad.witness)
    with pytest.raises(DegreeTooSmall):
        C.find_certificate(parse_poly("x^3+5"), (-1, 1), 2)


def test_verify_rejects_tampering():
    p = parse_poly("x+2")
    cert = C.find_certificate(p, (-1, 1), 4)
    neg = C.HandelmanCertificate(cert.interval, cert.degree, {**cert.coeffs, (1, 0): F(-1, 2)})
    assert not C.verify_certificate(p, neg)
    wrong = C.HandelmanCertificate(cert.interval, cert.degree, {**cert.coeffs, (0, 1): F(1)})
    assert not C.verify_certificate(p, wrong)
    over = C.HandelmanCertificate(cert.interval, 1, {(2, 0): F(1)})
    assert not C.verify_certificate(p, over)


def test_json_round_trip():
    cert = C.find_certificate(parse_poly("x^2+1/4"), (-1, 1), 64)
    back = C.HandelmanCertificate.from_json(cert.to_json())
    assert back == cert and back.coeffs == cert.coeffs


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_certificates_for_positive_polynomials(seed):
    p = random_positive_poly(random.Random(seed))
    cert = C.find_certificate(p, (-1, 1), 64)
    assert isinstance(cert, C.HandelmanCertificate)
    assert C.verify_certificate(p, cert)
    # second route: pointwise agreement of the expansion on a rational grid
    e = cert.expand()
    assert all(e(F(k, 13)) == p(F(k, 13)) for k in range(-13, 14))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_witnesses_for_sign_changing_polynomials(seed):
    p = random_sign_changing_poly(random.Random(seed))
    res = C.find_certificate(p, (-1, 1), 64)
    assert isinstance(res, C.NotPositive)
    assert -1 <= res.witness <= 1 and p(res.witness) < 0
    lo, hi = res.region
    assert not poly_nonneg(p, (lo, hi))


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(0, 4))
def test_elevation_preserves_polynomial(seed, extra):
    rng = random.Random(seed)
    p = Poly([F(rng.randint(-5, 5)) for _ in range(rng.randint(1, 5))])
    D = max(p.degree, 0)
    beta = C.bernstein_coeffs(p, D, (-1, 2))
    for _ in range(extra):
        beta = C.elevate(beta)
    assert beta == C.bernstein_coeffs(p, D + extra, (-1, 2))
