import itertools
from fractions import Fraction

import pytest

from aegelfand import finitetop as T
from aegelfand.errors import DomainNotInFamily, NotOpen, NotSubfamily, PreconditionFailed

# Sierpinski space: {1} is open, {0} is not
SIERPINSKI = T.FiniteSpace([0, 1], {0: [0, 1], 1: [1]})
# two closed points over a generic point 2: opens are unions of {2}, {0,2}, {1,2}
VEE = T.FiniteSpace([0, 1, 2], {0: [0, 2], 1: [1, 2], 2: [2]})


def _naive_topologies(n):
    """All topologies on n labelled points by filtering subsets of the power set."""
    full = (1 << n) - 1
    subsets = [m for m in range(1, full)]
    count = 0
    for k in range(len(subsets) + 1):
        for chosen in itertools.combinations(subsets, k):
            opens = set(chosen) | {0, full}
            if all(a | b in opens and a & b in opens for a in opens for b in opens):
                count += 1
    return count


def _naive_families(X):
    opens = [X.mask(A) for A in T.opens(X)]
    others = [m for m in opens if m != X.full]
    out = 0
    for k in range(len(others) + 1):
        for chosen in itertools.combinations(others, k):
            fam = set(chosen) | {X.full}
            if all(a & b in fam for a in fam for b in fam):
                out += 1
    return out


def test_labelled_topology_counts():
    # 1, 1, 4, 29 labelled topologies; the 4-point count 355 is checked against the preorder count
    for n in range(4):
        assert len(T.topologies(n, up_to_homeomorphism=False)) == _naive_topologies(n)
    assert [len(T._preorders(n)) for n in range(6)] == [1, 1, 4, 29, 355, 6942]


def test_topologies_up_to_homeomorphism():
    assert [len(T.topologies(n)) for n in range(1, 5)] == [1, 3, 9, 33]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_admissible_families_match_naive_enumeration(n):
    for X in T.topologies(n):
        assert len(T.admissible_families(X)) == _naive_families(X)


def test_family_total_up_to_four_points():
    # the naive enumeration above gives 4446 over all 46 spaces; frozen here
    assert sum(len(T.admissible_families(X)) for n in range(1, 5) for X in T.topologies(n)) == 4446


def test_opens_closure_density():
    assert sorted(map(sorted, T.opens(SIERPINSKI))) == [[], [0, 1], [1]]
    assert T.closure(SIERPINSKI, [1]) == frozenset({0, 1})
    assert T.is_dense(SIERPINSKI, [1])
    assert T.is_dense(VEE, [2])
    assert not T.is_dense(VEE, [])


def test_components():
    comps = sorted(sorted(c) for c in T.components(VEE, [0, 1, 2]))
    assert comps == [[0, 1, 2]]
    disc = T.FiniteSpace("ab", {"a": "a", "b": "b"})
    assert len(T.components(disc, "ab")) == 2
    with pytest.raises(NotOpen):
        T.components(VEE, [0])


def test_continuity_matches_component_description():
    for n in (1, 2, 3):
        for X in T.topologies(n):
            for A in T.opens(X):
                pts = sorted(A)
                comps = T.components(X, A)
                for vals in itertools.product((0, 1), repeat=len(pts)):
                    f = dict(zip(pts, vals))
                    expect = all(len({f[p] for p in c}) == 1 for c in comps)
                    assert T.is_continuous(X, A, f) == expect


def test_contfun_arithmetic_and_json():
    f = T.ContFun.from_pointwise(VEE, [0, 1, 2], {0: 2, 1: 2, 2: 2})
    g = T.ContFun.const(VEE, 3)
    assert (f * g).value(0) == 6 and (f - g).value(2) == -1
    assert f.restrict([2]).pointwise() == {2: Fraction(2)}
    assert T.FiniteSpace.from_json(VEE.to_json()) == VEE
    with pytest.raises(PreconditionFailed):
        T.ContFun.from_pointwise(T.FiniteSpace("ab", {"a": "a", "b": "ab"}), "ab", {"a": 0, "b": 1})


def test_family_validation():
    with pytest.raises(PreconditionFailed):
        T.DomainFamily(VEE, [[0, 2]])
    with pytest.raises(PreconditionFailed):
        T.DomainFamily(VEE, [[0, 1, 2], [0, 2], [1, 2]])
    with pytest.raises(NotOpen):
        T.DomainFamily(VEE, [[0, 1, 2], [0]])


def test_quotient_identifies_functions_agreeing_on_a_domain():
    D = T.dense_open_family(VEE)
    f = T.ContFun.from_pointwise(VEE, [0, 2], {0: 1, 2: 1})
    g = T.ContFun.const(VEE, 1, [1, 2])
    assert T.quotient_ops(D, "equiv", f, g)
    assert T.AeClassF(D, f) == T.AeClassF(D, g)
    assert T.quotient_ops(D, "add", f, g) == T.AeClassF(D, T.ContFun.const(VEE, 2))
    small = T.DomainFamily(VEE, [[0, 1, 2]])
    with pytest.raises(DomainNotInFamily):
        T.quotient_ops(small, "add", f, g)


def _naive_strong_loc(D, pool):
    X = D.space
    funcs = [f for a in sorted(D.masks) for f in T.functions_on(X, a, pool)]
    zero, one = T.ContFun.const(X, 0), T.ContFun.const(X, 1)
    for f in funcs:
        for g in funcs:
            if T.quotient_ops(D, "leq", zero, g):
                s = one.restrict(g.domain) + g
                if T.quotient_ops(D, "leq", zero, f * s) and not T.quotient_ops(D, "leq", zero, f):
                    return False
    return True


@pytest.mark.parametrize("n", [1, 2, 3])
def test_strong_localizability_matches_naive_check(n):
    for X in T.topologies(n):
        for D in T.admissible_families(X):
            res = T.strong_loc_bruteforce(D, (-1, 0, 1))
            assert isinstance(res, T.Holds)
            assert _naive_strong_loc(D, (-1, 0, 1))


def test_maximal_representative():
    D = T.dense_open_family(VEE)
    f = T.ContFun.const(VEE, 5, [2])
    top = T.max_representative(D, f)
    assert top.domain == VEE.full and top.value(0) == 5
    for n in (1, 2, 3):
        for X in T.topologies(n):
            assert T.max_rep_uniqueness_check(X, (-1, 0, 1))
    with pytest.raises(PreconditionFailed):
        T.max_representative(T.DomainFamily(VEE, [[0, 1, 2]]), T.ContFun.const(VEE, 1))


def test_inclusion_embedding():
    D = T.dense_open_family(VEE)
    Dp = T.DomainFamily(VEE, [[0, 1, 2], [2]])
    assert T.inclusion_embedding_check(Dp, D)
    with pytest.raises(NotSubfamily):
        T.inclusion_embedding_check(D, Dp)
