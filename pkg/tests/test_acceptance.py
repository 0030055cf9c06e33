"""Acceptance criteria, one test each, at the sizes and bounds the contract fixes.

Every verdict is exact (zero tolerance); the only numeric limits are the two
wall-clock budgets.  Run standalone with ``python tests/test_acceptance.py``
for a plain PASS/FAIL listing, or under pytest, where the same lines are
printed in the terminal summary.
"""

from __future__ import annotations

import sys
import time

import pytest

from aegelfand import gelfand, poring
from aegelfand import suite as S

SEED = 0
IDENTITY_BUDGET_S = 10.0
FINITE_BUDGET_S = 60.0

RESULTS: list[str] = []


def _record(number: int, title: str, passed: bool, detail: str) -> bool:
    RESULTS.append(f"criterion {number:>2} {'PASS' if passed else 'FAIL'}  {title}: {detail}")
    return passed


def _prop(fn, count: int, tag: str):
    return fn(S._rng(SEED, f"acceptance.{tag}"), count)


def check_identities() -> bool:
    t = time.perf_counter()
    res = _prop(S.prop_identities, 1, "identities")
    elapsed = time.perf_counter() - t
    ok = res.passed and elapsed < IDENTITY_BUDGET_S
    return _record(1, "identity suite", ok, f"{res.cases} identities Verified={res.passed}, {elapsed:.2f}s < {IDENTITY_BUDGET_S:.0f}s")


def check_order_soundness() -> bool:
    res = _prop(S.prop_poly_nonneg_oracle, 1000, "nonneg")
    return _record(2, "order decision vs sampling oracle", res.passed, f"1000 polynomials, {res.cases} conclusive, disagreements: {res.detail or 'none'}")


def check_strong_localizability() -> bool:
    res = _prop(S.prop_strong_localizability, 500, "strongloc")
    return _record(3, "strong localizability", res.passed, f"500 per instance x 5 instances = {res.cases} {res.detail}")


def check_dominating_bound() -> bool:
    res = _prop(S.prop_dominating_bound, 500, "bound")
    return _record(4, "dominating bound", res.passed, f"500 per instance x 5 instances = {res.cases} {res.detail}")


def check_localization() -> bool:
    res = _prop(S.prop_localization, 500, "localization")
    return _record(5, "localization laws and embedding", res.passed, f"500 per instance x 5 instances = {res.cases} {res.detail}")


def check_positivity_equivalence() -> bool:
    pos = _prop(S.prop_positivity_equiv, 1, "positivity")
    ker = _prop(S.prop_kernel, 100, "kernel")
    G = poring.GERM0
    witness = gelfand.kernel_witness(G.parse("x^3")) == G.parse("x^2")
    ok = pos.passed and ker.passed and witness and pos.cases >= 100
    return _record(6, "positivity equivalence and kernel", ok, f"corpus {pos.cases} Agree={pos.passed}; kernel {ker.cases} cases ok={ker.passed}; x^3 witness x^2 ok={witness}")


def check_finite_spaces() -> bool:
    t = time.perf_counter()
    loc = _prop(S.prop_finite_strong_loc, 1, "finite")
    rep = _prop(S.prop_max_representative, 1, "maxrep")
    elapsed = time.perf_counter() - t
    ok = loc.passed and rep.passed and elapsed < FINITE_BUDGET_S
    return _record(7, "finite-space brute force", ok, f"{loc.cases} families Hold={loc.passed}; {rep.cases} spaces unique max rep={rep.passed}; {elapsed:.1f}s < {FINITE_BUDGET_S:.0f}s")


def check_f_ring() -> bool:
    lat = _prop(S.prop_lattice_laws, 300, "lattice")
    fr = _prop(S.prop_f_ring, 300, "fring")
    return _record(8, "lattice and f-ring laws", lat.passed and fr.passed, f"300 lattice triples ok={lat.passed}; 300 f-ring triples ok={fr.passed}")


def check_dichotomy() -> bool:
    emb = _prop(S.prop_transform_embedding, 300, "embedding")
    dic = _prop(S.prop_dichotomy, 50, "dichotomy")
    return _record(9, "transform coherence and germ dichotomy", emb.passed and dic.passed, f"300 pairs x 3 instances ok={emb.passed}; dichotomy ok={dic.passed} {emb.detail}{dic.detail}")


def check_certificates() -> bool:
    res = _prop(S.prop_certificates, 100, "certificates")
    return _record(10, "certificates and witnesses", res.passed, f"100 certificates + 100 NotPositive witnesses {res.detail}")


def check_separator() -> bool:
    res = _prop(S.prop_separator, 50, "separator")
    return _record(11, "neighbourhood separator", res.passed, f"50 configurations {res.detail}")


CHECKS = [
    check_identities,
    check_order_soundness,
    check_strong_localizability,
    check_dominating_bound,
    check_localization,
    check_positivity_equivalence,
    check_finite_spaces,
    check_f_ring,
    check_dichotomy,
    check_certificates,
    check_separator,
]


@pytest.mark.acceptance
@pytest.mark.parametrize("check", CHECKS, ids=lambda c: c.__name__.removeprefix("check_"))
def test_criterion(check):
    assert check(), RESULTS[-1]


if __name__ == "__main__":
    ok = True
    for c in CHECKS:
        passed = c()
        print(RESULTS[-1], flush=True)
        ok = ok and passed
    sys.exit(0 if ok else 1)
