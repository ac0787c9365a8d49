import itertools
import math

import numpy as np
import pytest

from stablecap.exact import (KDPP_MAX_N, RYSER_MAX_N, exact_kdpp_sum, exact_max_product,
                             exhaustive_correlation, ryser_permanent, spanning_tree_count)
from stablecap.oracles import dpp_generating_oracle, linear_product_oracle, permanent_poly
from stablecap.poly import SparsePoly, exact_correlation


def perm_by_permutations(A):
    n = len(A)
    return sum(math.prod(A[i][s[i]] for i in range(n)) for s in itertools.permutations(range(n)))


def random_psd(g, n, rank=None):
    X = g.normal(size=(n, rank or n))
    return X @ X.T


# Ryser

def test_ryser_examples():
    assert ryser_permanent(np.eye(3)).value == 1
    assert ryser_permanent(np.ones((3, 3))).value == 6
    r = ryser_permanent([[1, 2], [3, 4]])
    assert r.value == 10 and r.method == "ryser"


def test_ryser_matches_permutation_sum():
    g = np.random.default_rng(31)
    for n in range(1, 7):
        for _ in range(5):
            A = g.random((n, n))
            assert ryser_permanent(A).value == pytest.approx(perm_by_permutations(A.tolist()), rel=1e-12)


def test_ryser_matches_correlation_with_monomial():
    g = np.random.default_rng(32)
    for n in range(1, 7):
        A = g.random((n, n))
        P = permanent_poly(A).expand()
        ones = SparsePoly(n, {tuple([1] * n): 1.0})
        assert ryser_permanent(A).value == pytest.approx(exact_correlation(P, ones), rel=1e-10)


def test_ryser_empty_matrix():
    assert ryser_permanent(np.zeros((0, 0))).value == 1


def test_ryser_caps():
    with pytest.raises(ValueError):
        ryser_permanent(np.ones((RYSER_MAX_N + 1, RYSER_MAX_N + 1)))
    with pytest.raises(ValueError):
        ryser_permanent(np.ones((2, 3)))


# k-DPP sums

def test_kdpp_examples():
    assert exact_kdpp_sum(np.eye(2), np.eye(2), 1).value == pytest.approx(2)
    assert exact_kdpp_sum(np.diag([1.0, 2.0]), np.diag([3.0, 1.0]), 1).value == pytest.approx(5)
    L = np.array([[2.0, 1.0], [1.0, 2.0]])
    r = exact_kdpp_sum(L, L, 2)
    assert r.value == pytest.approx(9) and r.method == "subset_enum"


def test_kdpp_matches_expanded_correlation():
    g = np.random.default_rng(33)
    for n in range(1, 7):
        for k in range(0, n + 1):
            L = random_psd(g, n)
            Lp = random_psd(g, n)
            self_sum = exact_kdpp_sum(L, L, k).value
            assert self_sum >= 0
            P = dpp_generating_oracle(L, k).expand()
            Q = dpp_generating_oracle(Lp, k).expand()
            want = exhaustive_correlation(P, Q).value
            assert exact_kdpp_sum(L, Lp, k).value == pytest.approx(want, rel=1e-9, abs=1e-9)


def test_kdpp_caps():
    with pytest.raises(ValueError):
        exact_kdpp_sum(np.eye(KDPP_MAX_N + 1), np.eye(KDPP_MAX_N + 1), 1)
    with pytest.raises(ValueError):
        exact_kdpp_sum(np.eye(3), np.eye(3), 4)
    with pytest.raises(ValueError):
        exact_kdpp_sum(np.eye(3), np.eye(2), 1)


# max product

def test_max_product_examples():
    F = np.array([[1, 1, 0, 0], [0, 0, 1, 1.0]])
    P = linear_product_oracle(F).expand()
    exp, val = exact_max_product(P, P)
    assert exp == (1, 0, 1, 0)
    assert val.value == 1 and val.method == "monomial_expand"

    p = SparsePoly(2, {(2, 0): 1})
    q = SparsePoly(2, {(0, 2): 1, (1, 1): 1})
    exp, val = exact_max_product(p, q)
    assert val.value == 0 and exp == (2, 0)

    p = SparsePoly(4, {(1, 1, 0, 0): 2, (0, 0, 1, 1): 1})
    q = SparsePoly(4, {(1, 1, 0, 0): 1, (0, 0, 1, 1): 3})
    exp, val = exact_max_product(p, q)
    assert val.value == 3 and exp == (0, 0, 1, 1)


def test_max_product_tie_break_by_variable_word():
    # z1^2 and z1 z2 tie; z1 z1 precedes z1 z2
    p = SparsePoly(2, {(1, 1): 1, (2, 0): 1})
    assert exact_max_product(p, p)[0] == (2, 0)
    # z2 z3 and z2^2 tie at 4 and beat z1 z3; z2 z2 precedes z2 z3
    p = SparsePoly(3, {(0, 1, 1): 2, (1, 0, 1): 1, (0, 2, 0): 2})
    assert exact_max_product(p, p)[0] == (0, 2, 0)


def test_max_product_disjoint_falls_back_to_first_monomial():
    p = SparsePoly(3, {(0, 0, 2): 1, (0, 1, 1): 1})
    q = SparsePoly(3, {(2, 0, 0): 1})
    assert exact_max_product(p, q)[0] == (0, 1, 1)


# exhaustive correlation

def test_exhaustive_examples():
    m = SparsePoly(2, {(1, 1): 1})
    assert exhaustive_correlation(m, m).value == 1
    e1 = SparsePoly(2, {(1, 0): 1, (0, 1): 1})
    assert exhaustive_correlation(e1, e1).value == 2
    assert exhaustive_correlation(SparsePoly(1, {(2,): 2}), SparsePoly(1, {(2,): 1})).value == 4


def test_exhaustive_matches_exact_on_random_pairs():
    g = np.random.default_rng(34)
    for _ in range(500):
        n = int(g.integers(1, 7))
        # a small shared pool of exponents so that supports actually overlap
        pool = [tuple(int(v) for v in g.integers(0, 3, n)) for _ in range(6)]
        pool = [e for e in pool if sum(e) <= 5] or [tuple([0] * n)]

        def draw():
            picks = g.choice(len(pool), size=int(g.integers(1, len(pool) + 1)))
            return SparsePoly(n, {pool[i]: float(g.random() + 0.1) for i in picks})

        p, q = draw(), draw()
        assert exhaustive_correlation(p, q).value == pytest.approx(exact_correlation(p, q), rel=1e-12)


# spanning trees

def test_tree_count_complete_graphs():
    for V in range(2, 6):
        edges = list(itertools.combinations(range(V), 2))
        r = spanning_tree_count(V, edges)
        assert r.value == V ** (V - 2) and r.method == "tree_enum"


def test_tree_count_weighted_triangle():
    r = spanning_tree_count(3, [(0, 1), (1, 2), (0, 2)], [2.0, 3.0, 5.0])
    assert r.value == 2 * 3 + 3 * 5 + 2 * 5
