"""Evaluation oracles for stable polynomials.

Every oracle evaluates p on batches of points, in the linear domain and in
log coordinates (x -> log p(exp x)). Partial derivatives are recovered from
evaluations by exact univariate interpolation along one coordinate.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.special import logsumexp

from . import newton
from .poly import SparsePoly, linear_form

EXPAND_LIMIT = 6
SUBSET_TERM_LIMIT = 4096
NEG_BIG = -1e300


class SinkhornError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# interpolation weights

def chebyshev_nodes(d: int) -> np.ndarray:
    k = np.arange(d + 1)
    return 1.0 - np.cos((2 * k + 1) * np.pi / (2 * (d + 1)))


@lru_cache(maxsize=None)
def derivative_weights(d: int, x: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """Nodes u_k in (0, 2) and weights w_k with sum_k w_k g(u_k) = g'(x) for deg g <= d."""
    u = chebyshev_nodes(d)
    w = np.zeros(d + 1)
    for k in range(d + 1):
        tot = 0.0
        for m in range(d + 1):
            if m == k:
                continue
            prod = 1.0 / (u[k] - u[m])
            for l in range(d + 1):
                if l != k and l != m:
                    prod *= (x - u[l]) / (u[k] - u[l])
            tot += prod
        w[k] = tot
    return u, w


# ---------------------------------------------------------------------------

@dataclass
class EvalOracle:
    """Black-box access to a polynomial with nonnegative coefficients.

    evaluate_fn maps an (B, n) array of points to B values. log_evaluate_fn,
    when given, maps log coordinates to log values and must tolerate -inf.
    """

    n: int
    degree: int
    evaluate_fn: Callable
    log_evaluate_fn: Callable | None = None
    homogeneous_degree: int | None = None
    newton_desc: object | None = None
    var_degrees: tuple | None = None
    expand_fn: Callable | None = None
    log_coeff_range: float = 0.0
    name: str = "oracle"
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.var_degrees is None:
            self.var_degrees = (self.degree,) * self.n
        self.var_degrees = tuple(int(d) for d in self.var_degrees)

    @property
    def multilinear(self) -> bool:
        return all(d <= 1 for d in self.var_degrees)

    # evaluation -------------------------------------------------------
    def _batch(self, z):
        z = np.asarray(z, dtype=float)
        single = z.ndim == 1
        Z = np.atleast_2d(z)
        if Z.shape[-1] != self.n:
            raise ValueError(f"dimension mismatch: got {Z.shape[-1]} coordinates, expected {self.n}")
        return Z, single

    def evaluate(self, z):
        Z, single = self._batch(z)
        out = np.asarray(self.evaluate_fn(Z), dtype=float)
        return float(out[0]) if single else out

    def log_evaluate(self, x):
        X, single = self._batch(x)
        if self.log_evaluate_fn is not None:
            out = self.log_evaluate_fn(X)
        elif self.homogeneous_degree is not None:
            # p(e^x) = e^{D s} p(e^{x - s}) keeps the evaluation in range
            fin = np.where(np.isfinite(X), X, -np.inf)
            s = fin.max(axis=1)
            s = np.where(np.isfinite(s), s, 0.0)
            with np.errstate(divide="ignore"):
                out = self.homogeneous_degree * s + np.log(self.evaluate_fn(np.exp(X - s[:, None])))
        else:
            with np.errstate(divide="ignore", over="ignore"):
                out = np.log(self.evaluate_fn(np.exp(X)))
        out = np.asarray(out, dtype=float)
        return float(out[0]) if single else out

    def __call__(self, z):
        return self.evaluate(z)

    # derivatives ------------------------------------------------------
    def partial(self, i: int, z) -> float:
        """d p / d z_i at z by interpolation through deg+1 evaluations."""
        z = np.asarray(z, dtype=float)
        if z.shape != (self.n,):
            raise ValueError(f"dimension mismatch: point has shape {z.shape}")
        d = self.var_degrees[i]
        if d == 0:
            return 0.0
        scale = abs(z[i]) if z[i] != 0 else 1.0
        u, w = derivative_weights(d)
        pts = np.repeat(z[None, :], d + 1, axis=0)
        # nodes span [z_i - scale, z_i + scale]
        pts[:, i] = z[i] + scale * (u - 1.0)
        vals = self.evaluate(pts)
        return float(w @ vals) / scale

    def grad_log(self, x) -> np.ndarray:
        """Gradient of x -> log p(exp x), for one point or a batch."""
        X, single = self._batch(x)
        B = len(X)
        base = self.log_evaluate(X)
        blocks, index = [], []
        for i, d in enumerate(self.var_degrees):
            if d == 0:
                continue
            u, w = derivative_weights(d)
            logu = np.log(u)
            P = np.repeat(X[:, None, :], d + 1, axis=1)
            P[:, :, i] = X[:, i][:, None] + logu[None, :]
            blocks.append(P.reshape(-1, self.n))
            index.append((i, d, w))
        G = np.zeros((B, self.n))
        if blocks:
            vals = self.log_evaluate(np.vstack(blocks))
            pos = 0
            for i, d, w in index:
                chunk = vals[pos:pos + B * (d + 1)].reshape(B, d + 1)
                pos += B * (d + 1)
                with np.errstate(invalid="ignore"):
                    r = np.exp(chunk - base[:, None])
                # coordinates at -inf carry no mass
                r = np.where(np.isneginf(X[:, i])[:, None], 0.0, r)
                G[:, i] = r @ w
        return G[0] if single else G

    def hess_log(self, x, h: float = 1e-4) -> np.ndarray:
        """Hessian of log p(exp x) by central differences of grad_log."""
        x = np.asarray(x, dtype=float)
        E = h * np.eye(self.n)
        G = self.grad_log(np.vstack([x + E, x - E]))
        H = (G[:self.n] - G[self.n:]).T / (2 * h)
        return 0.5 * (H + H.T)

    # structure --------------------------------------------------------
    def expand(self) -> SparsePoly:
        if self.expand_fn is None:
            raise NotImplementedError(f"{self.name} has no expansion")
        return self.expand_fn()

    def polytope(self):
        if self.newton_desc is None:
            return None
        return newton.NewtonPolytope(self.newton_desc)

    def complexity_size(self) -> float:
        with np.errstate(divide="ignore"):
            lp1 = float(self.log_evaluate(np.zeros(self.n)))
        lp1 = abs(lp1) if np.isfinite(lp1) else 0.0
        return self.n + self.degree + max(self.log_coeff_range, lp1)

    def scaled(self, c: float) -> "EvalOracle":
        if c <= 0:
            raise ValueError("scale must be positive")
        f, lf, ex = self.evaluate_fn, self.log_evaluate_fn, self.expand_fn
        logc = math.log(c)
        return replace(
            self,
            evaluate_fn=lambda Z: c * f(Z),
            log_evaluate_fn=None if lf is None else (lambda X: logc + lf(X)),
            expand_fn=None if ex is None else (lambda: ex() * c),
            name=f"{c}*{self.name}",
        )


# ---------------------------------------------------------------------------
# constructors

def _subset_logsumexp(X, subsets, logc):
    # log sum_S c_S exp(sum_{i in S} x_i) for 0/1 exponent rows
    Xs = np.maximum(X, NEG_BIG)
    return _restore_neg_inf(logsumexp(logc[None, :] + Xs @ subsets.T, axis=1))


def _restore_neg_inf(out):
    # -inf inputs are clamped to NEG_BIG so that 0 * x stays finite; undo that here
    return np.where(out < NEG_BIG / 10, -np.inf, out)


def sparse_oracle(p: SparsePoly, name: str = "sparse") -> EvalOracle:
    """Oracle backed by an explicit coefficient list."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    K = np.array(list(p.terms.keys()), dtype=float).reshape(len(p), p.n)
    c = np.array([float(v) for v in p.terms.values()])
    logc = np.log(c)

    def ev(Z):
        with np.errstate(divide="ignore", invalid="ignore"):
            mon = np.prod(np.where(K[None] == 0, 1.0, Z[:, None, :] ** K[None]), axis=2)
        return mon @ c

    def lev(X):
        return _restore_neg_inf(logsumexp(logc[None, :] + np.maximum(X, NEG_BIG) @ K.T, axis=1))

    cx = p.complexity()
    return EvalOracle(
        n=p.n, degree=p.degree(), evaluate_fn=ev, log_evaluate_fn=lev,
        homogeneous_degree=p.homogeneous_degree(),
        newton_desc=newton.ExplicitDesc(newton.support(p)),
        var_degrees=tuple(p.var_degrees()), expand_fn=lambda: p,
        log_coeff_range=abs(cx.log_min_coeff) + abs(cx.log_max_coeff), name=name,
    )


def linear_product_oracle(F, name: str = "linear-product") -> EvalOracle:
    """Oracle for prod_k sum_j F[k, j] z_j with F nonnegative."""
    F = np.atleast_2d(np.asarray(F, dtype=float))
    if np.any(F < 0) or not np.all(np.isfinite(F)):
        raise ValueError("linear forms need finite nonnegative coefficients")
    k, n = F.shape
    with np.errstate(divide="ignore"):
        logF = np.log(F)

    def ev(Z):
        return np.prod(Z @ F.T, axis=1)

    def lev(X):
        return logsumexp(logF[None, :, :] + X[:, None, :], axis=2).sum(axis=1)

    def expand():
        out = SparsePoly(n, {tuple([0] * n): 1}, declared_stable=True)
        for row in F:
            out = out * linear_form(list(row))
        return out

    pos = F[F > 0]
    rng = float(abs(np.log(pos.min())) + abs(np.log(pos.max()))) if pos.size else 0.0
    return EvalOracle(
        n=n, degree=k, evaluate_fn=ev, log_evaluate_fn=lev, homogeneous_degree=k,
        newton_desc=newton.SimplexProductDesc(F > 0),
        var_degrees=tuple(int(v) for v in (F > 0).sum(axis=0)),
        expand_fn=expand, log_coeff_range=rng, name=name,
        extra={"forms": F},
    )


def permanent_poly(A) -> EvalOracle:
    """Oracle for prod_i sum_j A_ij z_j; its z_1...z_n coefficient is per(A)."""
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("permanent needs a square matrix")
    if np.any(A < 0):
        raise ValueError("permanent polynomial needs a nonnegative matrix")
    return linear_product_oracle(A, name="permanent")


def is_doubly_stochastic(A, tol: float = 1e-8) -> bool:
    A = np.asarray(A, dtype=float)
    return (A.ndim == 2 and A.shape[0] == A.shape[1] and bool(np.all(A >= -tol))
            and np.allclose(A.sum(axis=0), 1, atol=tol, rtol=0)
            and np.allclose(A.sum(axis=1), 1, atol=tol, rtol=0))


def schrijver_pair(A):
    """Return (p, q, alpha) on n^2 variables, variable (i, j) at index i*n + j.

    p = prod_i sum_j A_ij z_ij and q = prod_j sum_i (1 - A_ij) z_ij, so that
    the correlation of p and q is the permanent of A * (1 - A).
    """
    A = np.asarray(A, dtype=float)
    if not is_doubly_stochastic(A):
        raise ValueError("matrix is not doubly stochastic within 1e-8")
    A = np.clip(A, 0.0, 1.0)
    n = A.shape[0]
    P = np.zeros((n, n * n))
    Q = np.zeros((n, n * n))
    for i in range(n):
        P[i, i * n:(i + 1) * n] = A[i]
    for j in range(n):
        Q[j, j::n] = 1.0 - A[:, j]
    return (linear_product_oracle(P, name="schrijver-p"),
            linear_product_oracle(Q, name="schrijver-q"),
            A.reshape(-1).copy())


def sinkhorn(A, tol: float = 1e-10, max_sweeps: int = 100_000) -> np.ndarray:
    """Alternate row and column normalization until both sums are within tol of 1."""
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("Sinkhorn scaling needs a square matrix")
    if np.any(A < 0):
        raise ValueError("Sinkhorn scaling needs a nonnegative matrix")
    B = A.copy()
    for _ in range(max_sweeps):
        r = B.sum(axis=1)
        if np.any(r == 0):
            raise SinkhornError("zero row")
        B /= r[:, None]
        c = B.sum(axis=0)
        if np.any(c == 0):
            raise SinkhornError("zero column")
        B /= c[None, :]
        if np.max(np.abs(B.sum(axis=1) - 1)) < tol:
            return B
    raise SinkhornError(f"no convergence after {max_sweeps} sweeps")


def _esym_dp(V, k):
    # e_k of the rows of V by E[l] += v * E[l-1]
    B, m = V.shape
    E = np.zeros((B, k + 1))
    E[:, 0] = 1.0
    for i in range(m):
        top = min(i + 1, k)
        for l in range(top, 0, -1):
            E[:, l] += V[:, i] * E[:, l - 1]
    return E[:, k]


def _log_esym_dp(X, k):
    B, m = X.shape
    E = np.full((B, k + 1), -np.inf)
    E[:, 0] = 0.0
    for i in range(m):
        top = min(i + 1, k)
        for l in range(top, 0, -1):
            E[:, l] = np.logaddexp(E[:, l], X[:, i] + E[:, l - 1])
    return E[:, k]


def _subset_rows(n, k):
    rows = np.zeros((math.comb(n, k), n))
    for r, S in enumerate(itertools.combinations(range(n), k)):
        rows[r, list(S)] = 1
    return rows


def _subset_poly(n, subsets, coeffs):
    terms = {tuple(int(v) for v in row): float(c) for row, c in zip(subsets, coeffs)}
    return SparsePoly(n, terms, declared_stable=True)


def elementary_symmetric_oracle(n: int, k: int) -> EvalOracle:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return EvalOracle(
        n=n, degree=k, evaluate_fn=lambda Z: _esym_dp(Z, k),
        log_evaluate_fn=lambda X: _log_esym_dp(X, k), homogeneous_degree=k,
        newton_desc=newton.UniformRankDesc(n, k), var_degrees=(1 if k else 0,) * n,
        expand_fn=lambda: _subset_poly(n, _subset_rows(n, k), np.ones(math.comb(n, k))),
        log_coeff_range=0.0, name=f"e{k}",
    )


def check_psd(L, name="kernel") -> np.ndarray:
    L = np.asarray(L, dtype=float)
    if L.ndim != 2 or L.shape[0] != L.shape[1]:
        raise ValueError(f"{name} must be square")
    if np.max(np.abs(L - L.T), initial=0.0) > 1e-10:
        raise ValueError(f"{name} is not symmetric")
    if L.size and np.linalg.eigvalsh(L).min() < -1e-9:
        raise ValueError(f"{name} is not positive semidefinite")
    return 0.5 * (L + L.T)


def _minor_dets(G, rows):
    out = np.empty(len(rows))
    for r, row in enumerate(rows):
        idx = np.flatnonzero(row)
        out[r] = np.linalg.det(G[np.ix_(idx, idx)]) if len(idx) else 1.0
    return out


def _support_filter(rows, dets, G):
    scale = max(1.0, float(np.abs(np.diag(G)).max(initial=1.0)))
    k = int(rows[0].sum()) if len(rows) else 0
    keep = dets > 1e-12 * scale ** max(k, 1)
    return rows[keep], dets[keep]


def _subset_det_oracle(G, k, factor, spectral_ev, name):
    """p(z) = factor * sum_{|S|=k} det(G_S) z^S with a spectral evaluator."""
    n = G.shape[0]
    desc = newton.UniformRankDesc(n, k)
    lev = None
    expand = None
    if math.comb(n, k) <= SUBSET_TERM_LIMIT:
        rows, dets = _support_filter(_subset_rows(n, k), _minor_dets(G, _subset_rows(n, k)), G)
        coeffs = factor * dets
        if len(rows):
            desc = newton.ExplicitDesc(newton.SupportSet(n, rows.astype(int)))
            logc = np.log(coeffs)
            lev = lambda X: _subset_logsumexp(X, rows, logc)  # noqa: E731
        else:
            desc = newton.ExplicitDesc(newton.SupportSet(n, []))
            lev = lambda X: np.full(len(X), -np.inf)  # noqa: E731
        expand = lambda: _subset_poly(n, rows, coeffs)  # noqa: E731
    return EvalOracle(
        n=n, degree=k, evaluate_fn=spectral_ev, log_evaluate_fn=lev,
        homogeneous_degree=k, newton_desc=desc, var_degrees=(1 if k else 0,) * n,
        expand_fn=expand, name=name,
    )


def dpp_generating_oracle(L, k: int | None = None) -> EvalOracle:
    """det(I + L diag(z)), or its degree-k part when k is given."""
    L = check_psd(L)
    n = L.shape[0]
    if k is None:
        def ev(Z):
            return np.linalg.det(np.eye(n)[None] + L[None] * Z[:, None, :])

        def lev(X):
            with np.errstate(over="ignore", invalid="ignore"):
                s = np.exp(0.5 * X)
                M = np.eye(n)[None] + s[:, :, None] * L[None] * s[:, None, :]
                sign, logdet = np.linalg.slogdet(M)
            return np.where(sign > 0, logdet, -np.inf)

        rows = np.array(list(itertools.product((0, 1), repeat=n)), dtype=float) if n <= 16 else None
        desc, expand = None, None
        if rows is not None:
            rows, dets = _support_filter_all(rows, _minor_dets(L, rows), L)
            desc = newton.ExplicitDesc(newton.SupportSet(n, rows.astype(int)))
            expand = lambda: _subset_poly(n, rows, dets)  # noqa: E731
            # the determinant loses small terms when the scales of z differ widely
            logdets = np.log(dets)
            lev = lambda X: _subset_logsumexp(X, rows, logdets)  # noqa: E731
        return EvalOracle(n=n, degree=n, evaluate_fn=ev, log_evaluate_fn=lev,
                          newton_desc=desc, var_degrees=(1,) * n, expand_fn=expand, name="dpp")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")

    def ev_k(Z):
        s = np.sqrt(np.maximum(Z, 0.0))
        M = s[:, :, None] * L[None] * s[:, None, :]
        lam = np.clip(np.linalg.eigvalsh(M), 0.0, None)
        return _esym_dp(lam, k)

    return _subset_det_oracle(L, k, 1.0, ev_k, name=f"{k}-dpp")


def _support_filter_all(rows, dets, G):
    scale = max(1.0, float(np.abs(np.diag(G)).max(initial=1.0)))
    sizes = rows.sum(axis=1)
    keep = dets > 1e-12 * scale ** np.maximum(sizes, 1)
    return rows[keep], dets[keep]


def charpoly_coefficient_oracle(vectors, k: int) -> EvalOracle:
    """(d-k)! * e_k(eigenvalues of sum_i y_i v_i v_i^T) for vectors v_i in R^d.

    The coefficient of y^S for |S| = k is (d-k)! * det(Gram(v_i : i in S)).
    """
    W = np.atleast_2d(np.asarray(vectors, dtype=float))
    n, d = W.shape
    if not 0 <= k <= min(n, d):
        raise ValueError(f"need 0 <= k <= min(n, d), got k={k}")
    factor = float(math.factorial(d - k))

    def ev(Z):
        M = np.einsum("ia,bi,ic->bac", W, Z, W)
        lam = np.clip(np.linalg.eigvalsh(M), 0.0, None)
        return factor * _esym_dp(lam, k)

    orc = _subset_det_oracle(W @ W.T, k, factor, ev, name=f"charpoly-{k}")
    orc.extra["normalization"] = factor
    return orc


def _laplacian_minor(V, edges, Z):
    B = len(Z)
    Lap = np.zeros((B, V, V))
    for e, (u, v) in enumerate(edges):
        w = Z[:, e]
        Lap[:, u, u] += w
        Lap[:, v, v] += w
        Lap[:, u, v] -= w
        Lap[:, v, u] -= w
    return Lap[:, 1:, 1:]


def _connected(V, edges) -> bool:
    parent = list(range(V))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(a) for a in range(V)}) == 1


def spanning_trees(V, edges):
    """All edge subsets forming spanning trees, as sorted index tuples."""
    out = []
    for S in itertools.combinations(range(len(edges)), V - 1):
        if _connected(V, [edges[e] for e in S]):
            out.append(S)
    return out


def spanning_tree_oracle(graph) -> EvalOracle:
    """Weighted spanning-tree polynomial: sum over trees of the product of edge variables.

    graph is (num_vertices, edges) or a dict {"vertices": V, "edges": [[u, v, ...], ...]}.
    """
    if isinstance(graph, dict):
        V, edges = graph["vertices"], graph["edges"]
    else:
        V, edges = graph
    edges = [(int(e[0]), int(e[1])) for e in edges]
    V = int(V)
    for u, v in edges:
        if not (0 <= u < V and 0 <= v < V) or u == v:
            raise ValueError(f"bad edge ({u}, {v})")
    if V < 1 or not _connected(V, edges):
        raise ValueError("graph is disconnected")
    m = len(edges)

    def ev(Z):
        if V == 1:
            return np.ones(len(Z))
        return np.linalg.det(_laplacian_minor(V, edges, Z))

    desc, expand, lev = None, None, None
    if math.comb(m, V - 1) <= newton.POINT_LIMIT // 10:
        trees = spanning_trees(V, edges)
        rows = np.zeros((len(trees), m), dtype=int)
        for r, S in enumerate(trees):
            rows[r, list(S)] = 1
        desc = newton.ExplicitDesc(newton.SupportSet(m, rows))
        expand = lambda: _subset_poly(m, rows, np.ones(len(rows)))  # noqa: E731
        # summing over trees avoids cancellation in the Laplacian minor at mixed scales
        frows = rows.astype(float)
        lev = lambda X: _subset_logsumexp(X, frows, np.zeros(len(frows)))  # noqa: E731
    return EvalOracle(
        n=m, degree=V - 1, evaluate_fn=ev, log_evaluate_fn=lev, homogeneous_degree=V - 1, newton_desc=desc,
        var_degrees=(1,) * m, expand_fn=expand, name="spanning-tree",
        extra={"vertices": V, "edges": edges},
    )


def partition_matroid_oracle(parts, b, n: int | None = None) -> EvalOracle:
    """prod_i e_{b_i}(z restricted to part i)."""
    parts = [[int(j) for j in P] for P in parts]
    b = [int(x) for x in b]
    if len(parts) != len(b):
        raise ValueError("need one rank per part")
    seen = set()
    for P in parts:
        for j in P:
            if j in seen:
                raise ValueError(f"element {j} appears in two parts")
            seen.add(j)
    if n is None:
        n = max(seen) + 1 if seen else 0
    if any(j < 0 or j >= n for j in seen):
        raise ValueError("part element out of range")
    for P, bi in zip(parts, b):
        if not 0 <= bi <= len(P):
            raise ValueError(f"rank {bi} infeasible for a part of size {len(P)}")
    D = sum(b)
    vdeg = [0] * n
    for P, bi in zip(parts, b):
        for j in P:
            vdeg[j] = 1 if bi else 0

    def ev(Z):
        out = np.ones(len(Z))
        for P, bi in zip(parts, b):
            out *= _esym_dp(Z[:, P], bi)
        return out

    def lev(X):
        out = np.zeros(len(X))
        for P, bi in zip(parts, b):
            out += _log_esym_dp(X[:, P], bi)
        return out

    def expand():
        out = SparsePoly(n, {tuple([0] * n): 1}, declared_stable=True)
        for P, bi in zip(parts, b):
            terms = {}
            for S in itertools.combinations(P, bi):
                e = [0] * n
                for j in S:
                    e[j] = 1
                terms[tuple(e)] = 1
            out = out * SparsePoly(n, terms, declared_stable=True)
        return out

    return EvalOracle(
        n=n, degree=D, evaluate_fn=ev, log_evaluate_fn=lev, homogeneous_degree=D,
        newton_desc=newton.PartitionDesc(n, parts, b), var_degrees=tuple(vdeg),
        expand_fn=expand, name="partition",
    )


def monomial_oracle(exp, coeff: float = 1.0) -> EvalOracle:
    return sparse_oracle(SparsePoly(len(exp), {tuple(exp): coeff}, declared_stable=True),
                         name="monomial")
