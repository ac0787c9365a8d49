import itertools

import numpy as np
import pytest

from stablecap.newton import (MAX_JUMP_CHECK, NewtonPolytope, SupportSet, affine_rank,
                              is_jump_system, jump_greedy, membership_probe, newton_membership,
                              sign_vectors, support)
from stablecap.oracles import elementary_symmetric_oracle, permanent_poly, sparse_oracle
from stablecap.poly import SparsePoly, linear_form

from test_oracles import ORACLES, IDS


def pts(*xs):
    return SupportSet(len(xs[0]), xs)


# support sets

def test_support_examples():
    assert set(support(linear_form([1, 1]))) == {(1, 0), (0, 1)}
    assert set(support(SparsePoly(2, {(0, 0): 1, (1, 1): 1}))) == {(0, 0), (1, 1)}
    assert set(support(SparsePoly(2, {(2, 0): 1, (1, 1): 1}))) == {(2, 0), (1, 1)}


def test_support_of_zero_rejected():
    with pytest.raises(ValueError):
        support(SparsePoly(2, {}))


def test_support_points_sorted():
    S = pts((1, 0), (0, 1))
    assert [list(p) for p in S] == [[0, 1], [1, 0]]


# greedy

def test_greedy_examples():
    assert jump_greedy(pts((0, 0), (1, 1)), (1, 1)) == ((1, 1), 2)
    assert jump_greedy(pts((0, 0), (1, 1)), (1, -2)) == ((0, 0), 0)
    assert jump_greedy(pts((1, 0), (0, 1)), (3, 5)) == ((0, 1), 5)


def test_greedy_empty():
    with pytest.raises(ValueError):
        jump_greedy(SupportSet(2, []), (1, 1))


def _product_support(g, n):
    """Support of a random product of linear forms with random variable subsets."""
    k = int(g.integers(1, 4))
    p = None
    for _ in range(k):
        mask = g.random(n) < 0.6
        if not mask.any():
            mask[g.integers(n)] = True
        f = linear_form([1.0 if m else 0.0 for m in mask])
        p = f if p is None else p * f
    return support(p)


def test_greedy_matches_brute_force():
    g = np.random.default_rng(11)
    for _ in range(200):
        n = int(g.integers(1, 5))
        F = _product_support(g, n)
        w = g.normal(size=n)
        x, val = jump_greedy(F, w)
        best = max(float(np.dot(w, p)) for p in F)
        assert x in F
        assert val == pytest.approx(best, abs=1e-12)


def test_support_function_by_greedy():
    p = SparsePoly(3, {(2, 0, 1): 1, (0, 1, 1): 2, (1, 1, 0): 1, (0, 0, 2): 1})
    N = NewtonPolytope.from_poly(p)
    for c in sign_vectors(3):
        assert N.f(c) == max(int(np.dot(c, k)) for k in p.terms)
    assert N.f(np.zeros(3)) == 0


# jump systems

def _steps(x, y):
    out = []
    for i in range(len(x)):
        if y[i] != x[i]:
            d = [0] * len(x)
            d[i] = 1 if y[i] > x[i] else -1
            out.append(tuple(d))
    return out


def _jump_by_definition(F):
    F = set(F)
    add = lambda a, b: tuple(u + v for u, v in zip(a, b))
    for x in F:
        for y in F:
            for d in _steps(x, y):
                xd = add(x, d)
                if xd in F:
                    continue
                if not any(add(xd, e) in F for e in _steps(xd, y)):
                    return False
    return True


def test_jump_examples():
    assert is_jump_system(pts((0, 0), (1, 1)))
    assert is_jump_system(pts((0, 0), (2, 0)))
    assert not is_jump_system(pts((0,), (3,)))


def test_jump_three_corners_fails_the_axiom():
    # from (2,0) toward (0,2) the step (0,1) reaches (2,1); neither (1,1) nor (2,2) is present
    F = pts((0, 0), (2, 0), (0, 2))
    assert not _jump_by_definition(F)
    assert not is_jump_system(F)
    assert is_jump_system(pts((0, 0), (2, 0), (0, 2), (1, 1)))


def test_jump_matches_definition_on_random_sets():
    g = np.random.default_rng(8)
    for _ in range(300):
        n = int(g.integers(1, 4))
        size = int(g.integers(1, 7))
        F = {tuple(int(v) for v in g.integers(0, 3, n)) for _ in range(size)}
        assert is_jump_system(SupportSet(n, F)) == _jump_by_definition(F)


def test_jump_size_cap():
    big = SupportSet(1, [(i,) for i in range(MAX_JUMP_CHECK + 1)])
    with pytest.raises(ValueError):
        is_jump_system(big)


@pytest.mark.parametrize("o", ORACLES, ids=IDS)
def test_constructor_supports_are_jump_systems(o):
    if o.name == "sparse":
        pytest.skip("hand-written sample, not a stable polynomial")
    assert is_jump_system(support(o.expand()))


# membership

def test_membership_examples():
    N = NewtonPolytope.from_poly(linear_form([1, 1]))
    assert newton_membership(N, (0.5, 0.5)).inside
    out = newton_membership(N, (0.6, 0.6))
    assert not out.inside
    assert tuple(out.c) == (1, 1) and out.f_c == 1


def test_support_points_are_members():
    p = SparsePoly(3, {(2, 0, 1): 1, (0, 1, 1): 2, (1, 1, 0): 1})
    N = NewtonPolytope.from_poly(p)
    for k in p.terms:
        assert newton_membership(N, k).inside


def test_membership_dimension_cap():
    p = SparsePoly(15, {tuple([1] * 15): 1})
    with pytest.raises(ValueError):
        newton_membership(NewtonPolytope.from_poly(p), np.ones(15))


def test_probe_examples():
    e1 = elementary_symmetric_oracle(2, 1)
    assert membership_probe(e1, (0.5, 0.5))
    assert not membership_probe(e1, (1, 1))
    assert membership_probe(permanent_poly(np.eye(2)), (1, 1))


def test_affine_rank():
    assert affine_rank([(1, 0), (0, 1)]) == 1
    assert affine_rank([(0, 0), (1, 0), (0, 1)]) == 2
    assert NewtonPolytope.from_poly(linear_form([1, 1, 1])).affine_rank() == 2


def test_structural_descriptions_agree_with_explicit():
    g = np.random.default_rng(4)
    for o in ORACLES:
        if o.newton_desc is None:
            continue
        explicit = NewtonPolytope.from_poly(o.expand())
        structural = o.polytope()
        for c in sign_vectors(o.n)[:: max(1, 3 ** o.n // 60)]:
            assert structural.f(c) == pytest.approx(explicit.f(c), abs=1e-9)
        hi = max(o.degree, 1)
        for _ in range(20):
            a = g.uniform(0, hi, o.n)
            assert structural.desc.contains(a) == bool(newton_membership(explicit, a))
