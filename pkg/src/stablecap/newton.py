"""Supports, jump systems and Newton polytopes.

A Newton polytope is described through its support function
f(c) = max over the support of <c, kappa>, evaluated on c in {-1, 0, 1}^n.
For supports of stable polynomials these halfspaces cut out the hull exactly.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

MAX_HALFSPACE_DIM = 14
MAX_JUMP_CHECK = 10_000
POINT_LIMIT = 200_000


class SupportSet:
    """Finite set of exponent vectors in Z^n."""

    def __init__(self, n: int, points):
        self.n = int(n)
        pts = sorted({tuple(int(k) for k in p) for p in points})
        for p in pts:
            if len(p) != self.n:
                raise ValueError(f"point {p} has wrong length (n={self.n})")
        self.points = tuple(pts)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, item):
        return tuple(item) in self._set

    @property
    def _set(self):
        s = self.__dict__.get("_cache")
        if s is None:
            s = frozenset(self.points)
            self.__dict__["_cache"] = s
        return s

    def array(self) -> np.ndarray:
        return np.array(self.points, dtype=float).reshape(len(self.points), self.n)

    def __repr__(self):
        return f"SupportSet(n={self.n}, size={len(self.points)})"


def support(p) -> SupportSet:
    if not p.terms:
        raise ValueError("the zero polynomial has empty support")
    return SupportSet(p.n, p.terms.keys())


def sign_vectors(n: int) -> np.ndarray:
    """All nonzero c in {-1, 0, 1}^n, in lexicographic order."""
    if n > MAX_HALFSPACE_DIM:
        raise ValueError(f"halfspace enumeration capped at n={MAX_HALFSPACE_DIM}")
    grid = np.array(list(itertools.product((-1, 0, 1), repeat=n)), dtype=np.int8)
    return grid[np.any(grid != 0, axis=1)]


# ---------------------------------------------------------------------------
# structural descriptions

class ExplicitDesc:
    kind = "explicit"

    def __init__(self, points: SupportSet):
        self.n = points.n
        self.support_set = points
        self._arr = points.array()

    def support_values(self, C) -> np.ndarray:
        if len(self._arr) == 0:
            return np.full(len(C), -np.inf)
        return np.max(np.asarray(C, dtype=float) @ self._arr.T, axis=1)

    def points(self, limit=POINT_LIMIT):
        return self._arr if len(self._arr) <= limit else None

    def contains(self, alpha, tol=1e-9) -> bool:
        if len(self._arr) == 0:
            return False
        if self.n <= 10:
            C = sign_vectors(self.n)
            return bool(np.all(C @ alpha <= self.support_values(C) + tol))
        return _hull_lp_contains(self._arr, alpha, tol)


class SimplexProductDesc:
    """Minkowski sum of simplices conv{e_j : mask[k, j]} over the rows k."""

    kind = "simplex-product"

    def __init__(self, masks):
        self.masks = np.asarray(masks, dtype=bool)
        self.n = self.masks.shape[1]

    def support_values(self, C) -> np.ndarray:
        C = np.asarray(C, dtype=float)
        out = np.zeros(len(C))
        for row in self.masks:
            if not row.any():
                return np.full(len(C), -np.inf)
            out += C[:, row].max(axis=1)
        return out

    def points(self, limit=POINT_LIMIT):
        pts = {tuple([0] * self.n)}
        for row in self.masks:
            idx = np.flatnonzero(row)
            nxt = set()
            for p in pts:
                for j in idx:
                    q = list(p)
                    q[j] += 1
                    nxt.add(tuple(q))
            if len(nxt) > limit:
                return None
            pts = nxt
        return np.array(sorted(pts), dtype=float).reshape(len(pts), self.n)

    def contains(self, alpha, tol=1e-9) -> bool:
        # transportation feasibility: alpha = sum_k x_k, x_k in simplex of row k
        alpha = np.asarray(alpha, dtype=float)
        k, n = self.masks.shape
        if np.any(alpha < -tol) or abs(alpha.sum() - k) > tol * max(1, k):
            return False
        cells = [(r, j) for r in range(k) for j in range(n) if self.masks[r, j]]
        A = np.zeros((k + n, len(cells)))
        for c, (r, j) in enumerate(cells):
            A[r, c] = 1
            A[k + j, c] = 1
        b = np.concatenate([np.ones(k), alpha])
        return _feasible_with_slack(A, b, tol)


class UniformRankDesc:
    """All 0/1 vectors with exactly k ones."""

    kind = "uniform-rank-k"

    def __init__(self, n: int, k: int):
        self.n, self.k = n, k

    def support_values(self, C) -> np.ndarray:
        C = np.asarray(C, dtype=float)
        if self.k == 0:
            return np.zeros(len(C))
        return -np.sort(-C, axis=1)[:, :self.k].sum(axis=1)

    def points(self, limit=POINT_LIMIT):
        if math.comb(self.n, self.k) > limit:
            return None
        out = np.zeros((math.comb(self.n, self.k), self.n))
        for r, S in enumerate(itertools.combinations(range(self.n), self.k)):
            out[r, list(S)] = 1
        return out

    def contains(self, alpha, tol=1e-9) -> bool:
        alpha = np.asarray(alpha, dtype=float)
        return bool(np.all(alpha >= -tol) and np.all(alpha <= 1 + tol)
                    and abs(alpha.sum() - self.k) <= tol * max(1, self.k))


class PartitionDesc:
    """Sets choosing exactly b[i] elements from each part (others zero)."""

    kind = "partition"

    def __init__(self, n: int, parts, b):
        self.n = n
        self.parts = [list(P) for P in parts]
        self.b = [int(x) for x in b]

    def support_values(self, C) -> np.ndarray:
        C = np.asarray(C, dtype=float)
        out = np.zeros(len(C))
        for P, bi in zip(self.parts, self.b):
            if bi:
                out += -np.sort(-C[:, P], axis=1)[:, :bi].sum(axis=1)
        return out

    def points(self, limit=POINT_LIMIT):
        count = math.prod(math.comb(len(P), bi) for P, bi in zip(self.parts, self.b))
        if count > limit:
            return None
        rows = []
        for pick in itertools.product(*(itertools.combinations(P, bi)
                                        for P, bi in zip(self.parts, self.b))):
            r = np.zeros(self.n)
            for S in pick:
                r[list(S)] = 1
            rows.append(r)
        return np.array(rows).reshape(len(rows), self.n)

    def contains(self, alpha, tol=1e-9) -> bool:
        alpha = np.asarray(alpha, dtype=float)
        if np.any(alpha < -tol) or np.any(alpha > 1 + tol):
            return False
        covered = np.zeros(self.n, dtype=bool)
        for P, bi in zip(self.parts, self.b):
            covered[P] = True
            if abs(alpha[P].sum() - bi) > tol * max(1, bi):
                return False
        return bool(np.all(np.abs(alpha[~covered]) <= tol))


def _feasible_with_slack(A_eq, b_eq, tol) -> bool:
    # min total violation of A x = b with x >= 0
    m, k = A_eq.shape
    A = np.hstack([A_eq, np.eye(m), -np.eye(m)])
    c = np.concatenate([np.zeros(k), np.ones(2 * m)])
    res = linprog(c, A_eq=A, b_eq=b_eq, bounds=(0, None), method="highs")
    return res.status == 0 and res.fun <= tol * max(1.0, np.abs(b_eq).max(initial=0))


def _hull_lp_contains(points, alpha, tol) -> bool:
    s = len(points)
    A = np.vstack([points.T, np.ones((1, s))])
    b = np.concatenate([np.asarray(alpha, dtype=float), [1.0]])
    return _feasible_with_slack(A, b, tol)


# ---------------------------------------------------------------------------

class NewtonPolytope:
    """Newton polytope with a lazily built halfspace cache."""

    def __init__(self, desc):
        if isinstance(desc, SupportSet):
            desc = ExplicitDesc(desc)
        self.desc = desc
        self.n = desc.n
        self._halfspaces = None

    @classmethod
    def from_poly(cls, p) -> "NewtonPolytope":
        return cls(ExplicitDesc(support(p)))

    def f(self, c) -> float:
        return float(self.desc.support_values(np.atleast_2d(c))[0])

    @property
    def halfspaces(self):
        if self._halfspaces is None:
            C = sign_vectors(self.n)
            self._halfspaces = (C, self.desc.support_values(C))
        return self._halfspaces

    def affine_rank(self) -> int:
        pts = self.desc.points()
        if pts is None:
            raise ValueError("support too large to enumerate")
        return affine_rank(pts)


def affine_rank(points, tol=1e-9) -> int:
    pts = np.asarray(points, dtype=float)
    if len(pts) <= 1:
        return 0
    return int(np.linalg.matrix_rank(pts[1:] - pts[0], tol=tol))


@dataclass(frozen=True)
class Membership:
    inside: bool
    c: tuple | None = None
    f_c: float | None = None

    def __bool__(self):
        return self.inside


def newton_membership(N: NewtonPolytope, alpha, slack: float = 1e-9) -> Membership:
    """Test alpha against every halfspace <c, x> <= f(c); report the worst one on failure."""
    alpha = np.asarray(alpha, dtype=float)
    if alpha.shape != (N.n,):
        raise ValueError(f"alpha has shape {alpha.shape}, expected ({N.n},)")
    C, fc = N.halfspaces
    viol = C @ alpha - fc
    worst = int(np.argmax(viol))
    if viol[worst] <= slack:
        return Membership(True)
    return Membership(False, tuple(int(v) for v in C[worst]), float(fc[worst]))


def membership_probe(oracle, alpha, t_max: float = 2.0 ** 20, threshold: float = 1e-12) -> bool:
    """Decide membership from evaluations only.

    Probes z = exp(t c) for t = 1, 2, 4, ..., t_max and c in {-1, 0, 1}^n and
    reports False once p(z) / z^alpha drops below threshold * p(1).
    """
    alpha = np.asarray(alpha, dtype=float)
    n = oracle.n
    if alpha.shape != (n,):
        raise ValueError(f"alpha has shape {alpha.shape}, expected ({n},)")
    if np.any(alpha < 0):
        return False
    C = sign_vectors(n).astype(float)
    cut = math.log(threshold) + float(oracle.log_evaluate(np.zeros(n)))
    proj = C @ alpha
    t = 1.0
    while t <= t_max:
        vals = oracle.log_evaluate(t * C) - t * proj
        if np.any(vals < cut) or np.any(np.isnan(vals)):
            return False
        t *= 2
    return True


# ---------------------------------------------------------------------------
# jump systems

def _as_points(F):
    if isinstance(F, SupportSet):
        return F.n, list(F.points)
    pts = [tuple(int(k) for k in p) for p in F]
    if not pts:
        raise ValueError("empty set")
    return len(pts[0]), pts


def jump_greedy(F, w):
    """Lovasz greedy for max <w, x> over a finite jump system.

    Coordinates are fixed in order of decreasing |w_i| (ties by index); each
    takes the largest feasible value when w_i > 0 and the smallest otherwise.
    """
    n, pts = _as_points(F)
    w = [float(x) for x in w]
    if len(w) != n:
        raise ValueError("weight vector has wrong length")
    order = sorted(range(n), key=lambda i: (-abs(w[i]), i))
    cand = pts
    for i in order:
        vals = [p[i] for p in cand]
        target = max(vals) if w[i] > 0 else min(vals)
        cand = [p for p in cand if p[i] == target]
    x = min(cand)
    return x, sum(wi * xi for wi, xi in zip(w, x))


def _steps(x, y):
    for i, (a, b) in enumerate(zip(x, y)):
        if a != b:
            yield i, (1 if b > a else -1)


def is_jump_system(F) -> bool:
    """Exhaustive check of the two-step exchange axiom."""
    n, pts = _as_points(F)
    if len(pts) > MAX_JUMP_CHECK:
        raise ValueError(f"jump-system check capped at {MAX_JUMP_CHECK} points")
    S = set(pts)
    for x in pts:
        for y in pts:
            if x == y:
                continue
            for i, s in _steps(x, y):
                x1 = list(x)
                x1[i] += s
                if tuple(x1) in S:
                    continue
                ok = False
                for j, t in _steps(x1, y):
                    x2 = list(x1)
                    x2[j] += t
                    if tuple(x2) in S:
                        ok = True
                        break
                if not ok:
                    return False
    return True
