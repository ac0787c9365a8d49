import itertools
import math

import numpy as np
import pytest

from stablecap.counting import (approx_correlation, approx_max_coeff_product, coefficient_extract,
                                detmax, kdpp_similarity, multilinear_lower_bound, project_simplex,
                                rounding_draws, rounding_mean, schrijver_check)
from stablecap.exact import exact_kdpp_sum, exact_max_product, exhaustive_correlation
from stablecap.oracles import (charpoly_coefficient_oracle, dpp_generating_oracle,
                               elementary_symmetric_oracle, linear_product_oracle,
                               partition_matroid_oracle, sinkhorn, sparse_oracle)
from stablecap.poly import SparsePoly

from test_oracles import ORACLES, IDS


def brackets(res, truth, rel=1e-6):
    return res.lower <= truth * (1 + rel) and truth <= res.upper * (1 + rel)


def multilinear_pair(g, n, deg):
    """Two products of linear forms, each factor on its own block of variables."""
    cuts = np.sort(g.choice(np.arange(1, n), deg - 1, replace=False)) if deg > 1 else []
    blocks = np.split(np.arange(n), cuts)

    def one():
        F = np.zeros((deg, n))
        for r, blk in enumerate(blocks):
            F[r, blk] = g.random(len(blk)) + 0.1
        return linear_product_oracle(F)
    return one(), one()


# approx_correlation

def test_correlation_monomial():
    m = sparse_oracle(SparsePoly(2, {(1, 1): 1}))
    res = approx_correlation(m, m)
    assert res.upper == pytest.approx(1, rel=1e-8)
    assert brackets(res, 1)
    assert res.lower <= res.estimate <= res.upper


def test_correlation_linear():
    e1 = elementary_symmetric_oracle(2, 1)
    res = approx_correlation(e1, e1)
    assert 2 * (1 - 1e-9) <= res.upper <= 2 * math.e * (1 + 1e-9)
    assert brackets(res, 2)
    assert res.guaranteed_ratio == pytest.approx(math.exp(1), rel=1e-5)


def test_correlation_matroid_intersection():
    pm = partition_matroid_oracle([[0, 1]], [1], 2)
    truth = exhaustive_correlation(pm.expand(), pm.expand()).value
    assert truth == 2
    res = approx_correlation(pm, pm)
    assert brackets(res, truth)


def test_correlation_dimension_mismatch():
    with pytest.raises(ValueError):
        approx_correlation(elementary_symmetric_oracle(2, 1), elementary_symmetric_oracle(3, 1))


def test_correlation_zero_polynomial_gives_zero_bracket():
    zero = dpp_generating_oracle(np.diag([1.0, 0.0, 0.0]), 2)
    res = approx_correlation(zero, elementary_symmetric_oracle(3, 2))
    assert res.lower == res.upper == res.estimate == 0


def test_result_dict_keys():
    e1 = elementary_symmetric_oracle(2, 1)
    d = approx_correlation(e1, e1).to_dict()
    assert set(d) == {"estimate", "lower", "upper", "ratio", "alpha", "iters"}


def test_sandwich_random_products():
    g = np.random.default_rng(21)
    for _ in range(12):
        n, d = int(g.integers(2, 5)), int(g.integers(1, 4))
        p = linear_product_oracle(g.random((d, n)) * (g.random((1, n)) < .8) + .02)
        q = linear_product_oracle(g.random((d, n)) + 0.02)
        truth = exhaustive_correlation(p.expand(), q.expand()).value
        res = approx_correlation(p, q)
        assert res.converged
        assert brackets(res, truth)
        assert res.upper / res.lower <= res.guaranteed_ratio * (1 + 1e-6)


def test_multilinear_strengthening():
    g = np.random.default_rng(22)
    for _ in range(10):
        n = int(g.integers(2, 6))
        p, q = multilinear_pair(g, n, int(g.integers(1, n + 1)))
        truth = exhaustive_correlation(p.expand(), q.expand()).value
        res = approx_correlation(p, q)
        assert multilinear_lower_bound(res.trace["value"], res.alpha) <= truth * (1 + 1e-6)


def test_multilinear_lower_bound_weights():
    assert multilinear_lower_bound(1.0, [0, 1]) == 1.0
    assert multilinear_lower_bound(2.0, [0.5]) == pytest.approx(2 * 0.5 ** 0.5)


def test_weak_duality_linear_forms():
    # p = a.y, q = b.z on 2 variables; for fixed y the inner z-problem is a capacity of q
    # and the alpha-sup over the segment a1 + a2 = 1 is taken on a grid
    g = np.random.default_rng(23)
    A = np.linspace(0, 1, 201)
    for _ in range(5):
        a = g.random(2) + 0.1
        b = g.random(2) + 0.1
        V = approx_correlation(linear_product_oracle(a[None]), linear_product_oracle(b[None])).trace["value"]
        grid = np.linspace(-6, 6, 241)
        Y1, Y2 = np.meshgrid(grid, grid, indexing="ij")
        logp = np.log(a[0] * np.exp(Y1) + a[1] * np.exp(Y2))
        best = math.inf
        for t in A:
            al = np.array([t, 1 - t])
            with np.errstate(divide="ignore"):
                # inf_z log q(al e^z) - al.z = log cap_al(q) + al.log al = al.log b
                inner = float(al @ np.log(b))
            phi = logp - al[0] * Y1 - al[1] * Y2 + inner
            best = np.maximum(best, phi) if not np.isscalar(best) else phi
        inf_sup = float(np.exp(best.min()))
        assert inf_sup >= V * (1 - 1e-3)


# Schrijver

def test_schrijver_permutation():
    per_t, bound, cap = schrijver_check(np.eye(3)[[2, 0, 1]])
    assert per_t == 0 and bound == 0
    assert per_t >= cap >= bound - 1e-9


def test_schrijver_half():
    per_t, bound, cap = schrijver_check(np.full((2, 2), 0.5))
    assert per_t == pytest.approx(0.125, abs=1e-12)
    assert bound == pytest.approx(0.0625, abs=1e-12)
    assert per_t >= cap >= bound - 1e-9


def test_schrijver_third():
    per_t, bound, cap = schrijver_check(np.full((3, 3), 1 / 3))
    assert per_t == pytest.approx(6 * (2 / 9) ** 3, rel=1e-12)
    assert bound == pytest.approx((2 / 3) ** 9, rel=1e-12)
    assert round(per_t, 5) == 0.06584 and round(bound, 5) == 0.02601
    assert per_t >= cap >= bound - 1e-9


def test_schrijver_random_chain():
    g = np.random.default_rng(24)
    for n in (2, 3, 4, 5):
        A = sinkhorn(g.random((n, n)) + 0.05)
        per_t, bound, cap = schrijver_check(A)
        assert per_t >= cap * (1 - 1e-9)
        assert cap >= bound - 1e-9


def test_schrijver_rejects_non_stochastic():
    with pytest.raises(ValueError):
        schrijver_check(np.ones((2, 2)))


# max coefficient product

def test_max_product_block_linear():
    F = np.array([[1, 1, 0, 0], [0, 0, 1, 1.0]])
    p = linear_product_oracle(F)
    relax, sol, _ = approx_max_coeff_product(p, p, 2)
    _, exact = exact_max_product(p.expand(), p.expand())
    assert exact.value == 1
    assert 1 * (1 - 1e-9) <= relax <= math.exp(4) * (1 + 1e-4)
    assert sol.value == 1
    assert sum(sol.kappa) == 2


def test_max_product_monomial():
    m = sparse_oracle(SparsePoly(2, {(1, 1): 1}))
    relax, sol, _ = approx_max_coeff_product(m, m, 2)
    assert relax >= 1 - 1e-9
    assert sol.kappa == (1, 1) and sol.value == 1


def test_max_product_detmax_oracle():
    vectors = np.diag(np.sqrt([1.0, 2.0, 3.0]))
    p = charpoly_coefficient_oracle(vectors, 2)
    q = partition_matroid_oracle([[0, 1], [2]], [1, 1], 3)
    best_exp, exact = exact_max_product(p.expand(), q.expand())
    relax, sol, _ = approx_max_coeff_product(p, q, 2)
    assert best_exp == (0, 1, 1)
    assert sol.kappa == best_exp and sol.value == pytest.approx(exact.value, rel=1e-9)
    assert exact.value * (1 - 1e-9) <= relax <= math.exp(4) * exact.value * (1 + 1e-4)


def test_detmax_diagonal():
    S, det, relax, sol, _ = detmax(np.diag([1.0, 2.0, 3.0]), [[0, 1], [2]], [1, 1])
    assert S == [1, 2]
    assert det == pytest.approx(6, rel=1e-12)


def test_detmax_matches_enumeration():
    g = np.random.default_rng(25)
    X = g.normal(size=(5, 5))
    L = X @ X.T
    parts, b = [[0, 1, 2], [3, 4]], [1, 1]
    S, det, *_ = detmax(L, parts, b, trials=64, seed=1)
    feas = [list(s) for s in itertools.combinations(range(5), 2)
            if sum(i in parts[0] for i in s) == 1]
    best = max(np.linalg.det(L[np.ix_(s, s)]) for s in feas)
    assert S in feas
    assert det >= math.exp(-4) * best


def test_max_product_rejects_bad_input():
    e = elementary_symmetric_oracle(3, 2)
    with pytest.raises(ValueError):
        approx_max_coeff_product(e, e, 2, trials=0)
    sq = sparse_oracle(SparsePoly(2, {(2, 0): 1}))
    with pytest.raises(ValueError):
        approx_max_coeff_product(sq, sq, 2)


def test_rounding_is_deterministic_for_a_seed():
    g = np.random.default_rng(26)
    p, q = multilinear_pair(g, 6, 3)
    a = approx_max_coeff_product(p, q, 3, trials=16, seed=5)
    b = approx_max_coeff_product(p, q, 3, trials=16, seed=5)
    assert a[0] == b[0] and a[1] == b[1]


def test_rounding_draws_shape_and_sum():
    K = rounding_draws(np.array([1.0, 1.0, 0.0]), 2, 100, np.random.default_rng(0))
    assert K.shape == (100, 3)
    assert np.all(K.sum(axis=1) <= 2)
    assert not K[:, 2].any()


def test_rounding_mean_on_monomial():
    m = sparse_oracle(SparsePoly(2, {(1, 1): 1}))
    mean, se = rounding_mean(m, m, 2, np.array([1.0, 1.0]), 4000, seed=0)
    # two draws land on distinct indices with probability 1/2
    assert abs(mean - 0.5) <= 4 * se + 1e-12


def test_project_simplex():
    x = project_simplex([0.2, 3.0, -1.0], 2)
    assert x.sum() == pytest.approx(2) and np.all(x >= 0)
    assert np.allclose(project_simplex([1.0, 1.0], 2), [1, 1])
    g = np.random.default_rng(27)
    for _ in range(20):
        v = g.normal(size=5) * 3
        x = project_simplex(v, 2.5)
        # optimality: moving mass between coordinates never gets closer to v
        for i in range(5):
            for j in range(5):
                if i != j and x[i] > 1e-9:
                    y = x.copy()
                    s = min(1e-3, y[i])
                    y[i] -= s
                    y[j] += s
                    assert np.sum((y - v) ** 2) >= np.sum((x - v) ** 2) - 1e-12


# k-DPP

@pytest.mark.parametrize("L,Lp,k,truth", [
    (np.eye(2), np.eye(2), 1, 2.0),
    (np.eye(3), np.eye(3), 2, 3.0),
    (np.diag([1.0, 2.0]), np.diag([3.0, 1.0]), 1, 5.0),
])
def test_kdpp_examples(L, Lp, k, truth):
    assert exact_kdpp_sum(L, Lp, k).value == pytest.approx(truth, rel=1e-12)
    res = kdpp_similarity(L, Lp, k)
    assert brackets(res, truth)
    assert res.upper / res.lower <= math.exp(k) * (1 + 1e-3)


def test_kdpp_rejects_mismatch():
    with pytest.raises(ValueError):
        kdpp_similarity(np.eye(2), np.eye(3), 1)


# coefficient extraction

def test_extract_examples():
    assert coefficient_extract(elementary_symmetric_oracle(3, 2), (1, 1, 0)) == pytest.approx(1)
    L = np.array([[2.0, 1.0], [1.0, 2.0]])
    assert coefficient_extract(dpp_generating_oracle(L, 2), (1, 1)) == pytest.approx(3)
    F = np.array([[1, 1, 0, 0], [0, 0, 1, 1.0]])
    assert coefficient_extract(linear_product_oracle(F), (1, 0, 1, 0)) == pytest.approx(1)


def test_extract_rejects_bad_kappa():
    e = elementary_symmetric_oracle(3, 2)
    with pytest.raises(ValueError):
        coefficient_extract(e, (2, 0, 0))
    with pytest.raises(ValueError):
        coefficient_extract(e, (1, 1))


@pytest.mark.parametrize("o", ORACLES, ids=IDS)
def test_extract_matches_expansion(o):
    if not o.multilinear or o.n > 6:
        pytest.skip("needs a multilinear oracle on at most 6 variables")
    P = o.expand()
    scale = max(P.terms.values())
    for kappa in itertools.product((0, 1), repeat=o.n):
        got = coefficient_extract(o, kappa)
        assert got == pytest.approx(float(P.coeff(kappa)), rel=1e-9, abs=1e-9 * scale)
