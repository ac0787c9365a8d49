"""Brute-force reference computations for desk-scale instances."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .oracles import check_psd
from .poly import SparsePoly

RYSER_MAX_N = 20
KDPP_MAX_N = 18


@dataclass(frozen=True)
class ExactValue:
    value: float
    method: str
    cost: int


def ryser_permanent(A) -> ExactValue:
    """Permanent by Ryser's formula, visiting column subsets in Gray-code order."""
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("permanent needs a square matrix")
    n = A.shape[0]
    if n > RYSER_MAX_N:
        raise ValueError(f"Ryser capped at n={RYSER_MAX_N}")
    if n == 0:
        return ExactValue(1.0, "ryser", 0)
    rows = [list(map(float, A[:, j])) for j in range(n)]
    sums = [0.0] * n
    total = 0.0
    sign = -1.0 if n % 2 else 1.0
    gray_prev = 0
    for k in range(1, 2 ** n):
        gray = k ^ (k >> 1)
        j = (gray ^ gray_prev).bit_length() - 1
        col = rows[j]
        if gray & (1 << j):
            sums = [s + c for s, c in zip(sums, col)]
        else:
            sums = [s - c for s, c in zip(sums, col)]
        gray_prev = gray
        prod = 1.0
        for s in sums:
            prod *= s
        # subsets of size |S| carry sign (-1)^(n - |S|)
        total += (-1.0) ** (bin(gray).count("1")) * prod
    return ExactValue(sign * total, "ryser", n * 2 ** n)


def exact_kdpp_sum(L, Lp, k: int) -> ExactValue:
    """Sum over k-subsets S of det(L_S) * det(Lp_S)."""
    L = check_psd(L, "L")
    Lp = check_psd(Lp, "Lp")
    if L.shape != Lp.shape:
        raise ValueError(f"dimension mismatch: {L.shape} vs {Lp.shape}")
    n = L.shape[0]
    if n > KDPP_MAX_N:
        raise ValueError(f"subset enumeration capped at n={KDPP_MAX_N}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}")
    total = 0.0
    count = 0
    for S in itertools.combinations(range(n), k):
        idx = np.array(S, dtype=int)
        a = np.linalg.det(L[np.ix_(idx, idx)]) if k else 1.0
        b = np.linalg.det(Lp[np.ix_(idx, idx)]) if k else 1.0
        total += a * b
        count += 1
    return ExactValue(total, "subset_enum", count)


def _word(exp):
    """Monomial as its sorted variable indices, so z1 z3 sorts before z1 z4 before z2 z3."""
    return tuple(i for i, k in enumerate(exp) for _ in range(k))


def exact_max_product(p: SparsePoly, q: SparsePoly):
    """max over kappa of C_p(kappa) * C_q(kappa); ties go to the lexicographically smallest monomial."""
    if p.n != q.n:
        raise ValueError(f"dimension mismatch: {p.n} vs {q.n}")
    best_val, best_exp = 0.0, None
    for exp, c in p.terms.items():
        d = q.terms.get(exp)
        if d is None:
            continue
        v = c * d
        if v > best_val or (v == best_val and best_exp is not None and _word(exp) < _word(best_exp)):
            best_val, best_exp = v, exp
    if best_exp is None:
        best_exp = min(p.terms, key=_word, default=tuple([0] * p.n))
    return best_exp, ExactValue(float(best_val), "monomial_expand", len(p.terms))


def exhaustive_correlation(p: SparsePoly, q: SparsePoly):
    """Sum of kappa! C_p(kappa) C_q(kappa) by a plain double loop over both supports."""
    if p.n != q.n:
        raise ValueError(f"dimension mismatch: {p.n} vs {q.n}")
    total = 0
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            if e1 == e2:
                w = 1
                for k in e1:
                    w *= math.factorial(k)
                total += w * c1 * c2
    return ExactValue(total, "monomial_expand", len(p.terms) * len(q.terms))


def spanning_tree_count(V: int, edges, weights=None) -> ExactValue:
    """Weighted count of spanning trees by trying every (V-1)-subset of edges."""
    edges = [(int(e[0]), int(e[1])) for e in edges]
    w = [1.0] * len(edges) if weights is None else [float(x) for x in weights]
    total, count = 0.0, 0
    for T in itertools.combinations(range(len(edges)), V - 1):
        count += 1
        parent = list(range(V))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        ok = True
        for e in T:
            ra, rb = find(edges[e][0]), find(edges[e][1])
            if ra == rb:
                ok = False
                break
            parent[ra] = rb
        if ok:
            prod = 1.0
            for e in T:
                prod *= w[e]
            total += prod
    return ExactValue(total, "tree_enum", count)
