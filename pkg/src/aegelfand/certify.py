"""Positivity certificates on a closed interval by Bernstein degree elevation.

A polynomial strictly positive on ``[a, b]`` has, for some degree ``D``, a
representation ``sum c[i,j] (b-x)^i (x-a)^j`` with ``i + j = D`` and every
``c[i,j] >= 0``.  The search computes the Bernstein coefficients at
``D = deg p`` and elevates until they are all nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Union

from .errors import DegreeTooSmall
from .exact import Poly
from .exact.poly import as_fraction
from .exact.roots import compare_points, rational_between, roots_between

__all__ = [
    "HandelmanCertificate",
    "NotFoundUpTo",
    "NotPositive",
    "bernstein_coeffs",
    "elevate",
    "find_certificate",
    "verify_certificate",
    "negative_witness",
]

Interval = tuple[Fraction, Fraction]


def _interval(iv) -> Interval:
    if isinstance(iv, str):
        from .exact import parse_interval

        iv = parse_interval(iv)
    a, b = (as_fraction(t) for t in iv)
    if not a < b:
        raise ValueError(f"interval [{a}, {b}] is empty or degenerate")
    return a, b


@dataclass(frozen=True)
class HandelmanCertificate:
    """``p = sum coeffs[(i, j)] * (b - x)^i * (x - a)^j`` with nonnegative coefficients."""

    interval: Interval
    degree: int
    coeffs: dict = field(hash=False)

    def expand(self) -> Poly:
        a, b = self.interval
        left, right = Poly([b, -1]), Poly([-a, 1])
        out = Poly.const(0)
        for (i, j), c in self.coeffs.items():
            out = out + (left**i) * (right**j) * c
        return out

    def to_json(self) -> dict:
        a, b = self.interval
        return {
            "interval": [_s(a), _s(b)],
            "degree": self.degree,
            "coeffs": [{"i": i, "j": j, "c": _s(c)} for (i, j), c in sorted(self.coeffs.items())],
        }

    @classmethod
    def from_json(cls, data) -> "HandelmanCertificate":
        a, b = (Fraction(t) for t in data["interval"])
        coeffs = {(int(e["i"]), int(e["j"])): Fraction(e["c"]) for e in data["coeffs"]}
        return cls((a, b), int(data["degree"]), coeffs)


@dataclass(frozen=True)
class NotFoundUpTo:
    d_max: int
    name: str = field(default="NotFoundUpTo", init=False)


@dataclass(frozen=True)
class NotPositive:
    """``p(witness) < 0``; ``region`` is an open interval on which ``p`` stays negative."""

    witness: Fraction
    value: Fraction
    region: tuple
    name: str = field(default="NotPositive", init=False)


CertifyResult = Union[HandelmanCertificate, NotFoundUpTo, NotPositive]


def _s(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def bernstein_coeffs(p: Poly, D: int, interval) -> tuple[Fraction, ...]:
    """Coefficients of ``p`` in the degree-``D`` Bernstein basis of the interval."""
    a, b = _interval(interval)
    p = p if isinstance(p, Poly) else Poly.const(p)
    if D < max(p.degree, 0):
        raise DegreeTooSmall(f"degree {D} is below deg p = {p.degree}")
    # p(a + (b-a) u) in powers of u
    c = p.compose(Poly([a, b - a])).coeffs if p else ()
    c = list(c) + [Fraction(0)] * (D + 1 - len(c))
    return tuple(
        sum((Fraction(comb(i, k), comb(D, k)) * c[k] for k in range(i + 1)), Fraction(0)) for i in range(D + 1)
    )


def elevate(beta: Iterable[Fraction]) -> tuple[Fraction, ...]:
    """Bernstein coefficients of the same polynomial one degree higher."""
    beta = tuple(beta)
    n = len(beta)  # new degree D+1 = n
    out = []
    for i in range(n + 1):
        t = Fraction(i, n)
        lo = beta[i - 1] if i > 0 else Fraction(0)
        hi = beta[i] if i < n else Fraction(0)
        out.append(t * lo + (1 - t) * hi)
    return tuple(out)


def negative_witness(p: Poly, interval) -> NotPositive | None:
    """A rational point of the interval where ``p < 0``, if one exists."""
    a, b = _interval(interval)
    if not p:
        return None
    roots = roots_between(p, a, b)
    marks = [a, *roots, b]
    candidates = [a, b]
    for u, v in zip(marks, marks[1:]):
        candidates.append(rational_between(u, v))
    for w in candidates:
        val = p(w)
        if val < 0:
            return NotPositive(w, val, _negative_region(w, marks))
    return None


def _negative_region(w: Fraction, marks) -> tuple:
    lo, hi = marks[0], marks[-1]
    for m in marks:
        if compare_points(m, w) < 0:
            lo = m
        elif compare_points(m, w) > 0:
            hi = m
            break
    return (lo, hi)


def find_certificate(p: Poly, interval, d_max: int) -> CertifyResult:
    a, b = _interval(interval)
    p = p if isinstance(p, Poly) else Poly.const(p)
    if d_max < max(p.degree, 0):
        raise DegreeTooSmall(f"D_max = {d_max} is below deg p = {p.degree}")
    bad = negative_witness(p, (a, b))
    if bad is not None:
        return bad
    if not p:
        return NotFoundUpTo(d_max)
    D = max(p.degree, 0)
    beta = bernstein_coeffs(p, D, (a, b))
    while True:
        if all(c >= 0 for c in beta):
            return _certificate(beta, (a, b))
        if D >= d_max:
            return NotFoundUpTo(d_max)
        beta = elevate(beta)
        D += 1


def _certificate(beta, interval: Interval) -> HandelmanCertificate:
    a, b = interval
    D = len(beta) - 1
    scale = (b - a) ** D
    coeffs = {(D - i, i): c * comb(D, i) / scale for i, c in enumerate(beta) if c != 0}
    return HandelmanCertificate((a, b), D, coeffs)


def verify_certificate(p: Poly, cert: HandelmanCertificate) -> bool:
    """Exact check: nonnegative coefficients within the degree, expanding to ``p``."""
    p = p if isinstance(p, Poly) else Poly.const(p)
    a, b = cert.interval
    if not a < b:
        return False
    for (i, j), c in cert.coeffs.items():
        if i < 0 or j < 0 or i + j > cert.degree or c < 0:
            return False
    return cert.expand() == p
