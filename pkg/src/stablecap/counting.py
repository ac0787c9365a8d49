"""Approximate counting and optimization built on the capacity solver."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .capacity import SaddleConfig, inner_capacity, relaxation_capacity, saddle_capacity
from .exact import ryser_permanent
from .oracles import (charpoly_coefficient_oracle, check_psd, dpp_generating_oracle,
                      is_doubly_stochastic, partition_matroid_oracle, schrijver_pair)

EXTRACT_MAX = 25


@dataclass
class ApproxResult:
    estimate: float
    guaranteed_ratio: float
    lower: float
    upper: float
    alpha: list | None = None
    iterations: int = 0
    converged: bool = True
    trace: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"estimate": self.estimate, "lower": self.lower, "upper": self.upper,
                "ratio": self.guaranteed_ratio, "alpha": self.alpha, "iters": self.iterations}


def approx_correlation(p, q, eps: float = 1e-6, config: SaddleConfig | None = None) -> ApproxResult:
    """Bracket sum_kappa kappa! C_p(kappa) C_q(kappa) within a factor e^{min(deg p, deg q)}."""
    if p.n != q.n:
        raise ValueError(f"dimension mismatch: {p.n} vs {q.n}")
    d = min(p.degree, q.degree)
    ratio = math.exp(d + eps)
    # nonnegative coefficients: the polynomial vanishes identically iff it vanishes at 1
    if not (np.isfinite(p.log_evaluate(np.zeros(p.n))) and np.isfinite(q.log_evaluate(np.zeros(q.n)))):
        return ApproxResult(0.0, ratio, 0.0, 0.0, trace={"message": "zero polynomial"})
    cfg = config or SaddleConfig(inner_tol=min(1e-10, eps / 2), outer_tol=min(1e-9, eps / 2))
    res = saddle_capacity(p, q, cfg)
    V = res.value
    lower, upper = V * math.exp(-d), V
    if not res.converged and np.isfinite(res.certified_gap):
        lower /= 1.0 + res.certified_gap
        upper *= 1.0 + res.certified_gap
    elif not res.converged:
        lower, upper = 0.0, math.inf
    alpha = None if res.arg_alpha is None else [float(a) for a in res.arg_alpha]
    return ApproxResult(
        estimate=V * math.exp(-d / 2), guaranteed_ratio=ratio,
        lower=lower, upper=upper, alpha=alpha, iterations=res.iterations,
        converged=res.converged,
        trace={"message": res.message, "gap": res.certified_gap, "value": V},
    )


def kdpp_similarity(L, Lp, k: int, eps: float = 1e-6, config: SaddleConfig | None = None) -> ApproxResult:
    """Bracket sum over k-subsets S of det(L_S) det(Lp_S)."""
    L = check_psd(L, "L")
    Lp = check_psd(Lp, "Lp")
    if L.shape != Lp.shape:
        raise ValueError(f"dimension mismatch: {L.shape} vs {Lp.shape}")
    return approx_correlation(dpp_generating_oracle(L, k), dpp_generating_oracle(Lp, k), eps, config)


def multilinear_lower_bound(value: float, alpha) -> float:
    """(1 - alpha)^(1 - alpha) * value, with 0^0 = 1."""
    a = np.clip(np.asarray(alpha, dtype=float), 0.0, 1.0)
    w = 1.0 - a
    with np.errstate(divide="ignore", invalid="ignore"):
        logs = np.where(w > 0, w * np.log(w), 0.0)
    return value * math.exp(float(logs.sum()))


def schrijver_check(A, config: SaddleConfig | None = None):
    """(per(A * (1 - A)), prod (1 - A_ij), capacity-based bound) for doubly stochastic A."""
    A = np.asarray(A, dtype=float)
    if not is_doubly_stochastic(A):
        raise ValueError("matrix is not doubly stochastic within 1e-8")
    A = np.clip(A, 0.0, 1.0)
    per_tilde = ryser_permanent(A * (1.0 - A)).value + 0.0
    bound = float(np.prod(1.0 - A))
    p, q, alpha = schrijver_pair(A)
    res = inner_capacity(p, q, alpha, config)
    return per_tilde, bound, multilinear_lower_bound(res.value, alpha)


def coefficient_extract(p, kappa) -> float:
    """Coefficient of z^kappa (kappa in {0,1}^n) of a multilinear oracle by inclusion-exclusion."""
    kappa = np.asarray(kappa)
    if kappa.shape != (p.n,):
        raise ValueError(f"kappa has shape {kappa.shape}, expected ({p.n},)")
    if np.any((kappa != 0) & (kappa != 1)):
        raise ValueError("kappa must be a 0/1 vector")
    if not p.multilinear:
        raise ValueError("coefficient extraction needs a multilinear oracle")
    idx = np.flatnonzero(kappa)
    k = len(idx)
    if k > EXTRACT_MAX:
        raise ValueError(f"inclusion-exclusion capped at |kappa| <= {EXTRACT_MAX}")
    masks = np.array(list(itertools.product((0, 1), repeat=k)), dtype=float).reshape(2 ** k, k)
    Z = np.zeros((2 ** k, p.n))
    Z[:, idx] = masks
    signs = (-1.0) ** (k - masks.sum(axis=1))
    return float(signs @ p.evaluate(Z))


@dataclass
class RoundedSolution:
    kappa: tuple
    value: float
    trials: int
    seed: int
    degenerate: bool = False


def project_simplex(v, D: float) -> np.ndarray:
    """Euclidean projection of v onto {x >= 0, sum x = D}."""
    v = np.asarray(v, dtype=float)
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - D
    k = np.arange(1, len(v) + 1)
    rho = np.nonzero(u - css / k > 0)[0][-1]
    theta = css[rho] / (rho + 1)
    return np.maximum(v - theta, 0.0)


def rounding_draws(lam, D: int, count: int, rng) -> np.ndarray:
    """count independent draws of D indices, i.i.d. with P(j) = lam_j / D, as 0/1 rows."""
    lam = project_simplex(lam, D)
    probs = lam / lam.sum()
    idx = rng.choice(len(lam), size=(count, D), p=probs)
    K = np.zeros((count, len(lam)), dtype=int)
    np.put_along_axis(K, idx, 1, axis=1)
    return K


class _Scorer:
    def __init__(self, p, q, D):
        self.p, self.q, self.D = p, q, D
        self.memo = {}

    def __call__(self, kappa) -> float:
        key = tuple(int(v) for v in kappa)
        if key not in self.memo:
            if sum(key) < self.D:
                self.memo[key] = 0.0
            else:
                cp = coefficient_extract(self.p, key)
                cq = coefficient_extract(self.q, key) if cp > 0 else 0.0
                self.memo[key] = max(cp, 0.0) * max(cq, 0.0)
        return self.memo[key]


def approx_max_coeff_product(p, q, D: int, trials: int = 64, seed: int = 0,
                             config: SaddleConfig | None = None):
    """Relaxation value and the best of `trials` rounded 0/1 vectors, rescored exactly."""
    if trials < 1:
        raise ValueError("need at least one trial")
    if p.n != q.n:
        raise ValueError(f"dimension mismatch: {p.n} vs {q.n}")
    for o in (p, q):
        if not o.multilinear:
            raise ValueError(f"{o.name} is not multilinear")
    res = relaxation_capacity(p, q, D, config)
    if res.lam is None:
        lam = np.full(p.n, D / p.n)
    else:
        lam = res.lam
    rng = np.random.default_rng(seed)
    K = rounding_draws(lam, D, trials, rng)
    score = _Scorer(p, q, D)
    vals = np.array([score(k) for k in K])
    degenerate = not np.any(K.sum(axis=1) == D)
    best = int(np.argmax(vals))
    sol = RoundedSolution(tuple(int(v) for v in K[best]), float(vals[best]), trials, seed, degenerate)
    # a rounded kappa is itself a feasible (alpha, lambda) = (kappa, kappa), where the
    # program's objective equals C_p(kappa) C_q(kappa) exactly
    return max(res.value, sol.value), sol, res


def rounding_mean(p, q, D: int, lam, draws: int, seed: int = 0):
    """Empirical mean and standard error of C_p(kappa) C_q(kappa) over rounding draws."""
    rng = np.random.default_rng(seed)
    K = rounding_draws(lam, D, draws, rng)
    score = _Scorer(p, q, D)
    vals = np.array([score(k) for k in K])
    return float(vals.mean()), float(vals.std(ddof=1) / math.sqrt(draws)) if draws > 1 else 0.0


def detmax(L, parts, b, trials: int = 64, seed: int = 0, config: SaddleConfig | None = None):
    """Approximately maximize det(L_S) over S with |S cap part_i| = b_i."""
    L = check_psd(L)
    n = L.shape[0]
    w, V = np.linalg.eigh(L)
    vectors = V * np.sqrt(np.clip(w, 0.0, None))
    D = sum(int(x) for x in b)
    p = charpoly_coefficient_oracle(vectors, D)
    q = partition_matroid_oracle(parts, b, n)
    relax, sol, res = approx_max_coeff_product(p, q, D, trials, seed, config)
    S = [i for i, k in enumerate(sol.kappa) if k]
    det = float(np.linalg.det(L[np.ix_(S, S)])) if S and sol.value > 0 else 0.0
    return S, det, relax, sol, res
