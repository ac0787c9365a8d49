"""Capacity programs in log coordinates.

With y = exp(Y) and alpha moved into q's argument,

    g(Y, Z) = log p(exp Y) + log q(alpha * exp Z) - <alpha, Y + Z>

is convex in (Y, Z) and, for stable q, concave in alpha. The inner infimum is
solved by a projected Newton method on the box [-M, M]; the outer supremum by
a quasi-Newton ascent that stays inside the intersection of the two Newton
polytopes.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import null_space
from scipy.optimize import linprog, nnls

from . import newton

log = logging.getLogger(__name__)

HREP_MAX_DIM = 12
BOUNDARY_NUDGE = 1e-7
STALL_PG_TOL = 1e-5


@dataclass
class SaddleConfig:
    inner_tol: float = 1e-10
    outer_tol: float = 1e-9
    max_inner_iters: int = 500
    max_outer_iters: int = 300
    alpha_clamp: float = 1e-9
    armijo_c: float = 1e-4
    backtrack: float = 0.5
    domain_bound: float | None = None
    hessian_step: float = 1e-4


@dataclass
class CapacityProblem:
    p: object
    q: object | None = None
    alpha: object = "free"
    domain_bound: float | None = None
    eps: float = 1e-6


@dataclass
class CapacityResult:
    value: float
    log_value: float
    argmin_y: np.ndarray | None
    argmin_z: np.ndarray | None
    arg_alpha: np.ndarray | None
    iterations: int
    certified_gap: float
    converged: bool
    message: str = ""
    lam: np.ndarray | None = None
    trace: list = field(default_factory=list)

    @property
    def flag(self) -> bool:
        return not self.converged


def univariate_capacity(beta: float, gamma: float, alpha: float) -> float:
    """inf over t > 0 of (beta t + gamma) / t^alpha, for beta, gamma >= 0 and alpha in [0, 1]."""
    if beta < 0 or gamma < 0:
        raise ValueError("coefficients must be nonnegative")
    if not 0 <= alpha <= 1:
        raise ValueError("alpha must lie in [0, 1]")
    if alpha == 0:
        return float(gamma)
    if alpha == 1:
        return float(beta)
    if beta == 0 or gamma == 0:
        return 0.0
    return float(beta ** alpha * gamma ** (1 - alpha) / (alpha ** alpha * (1 - alpha) ** (1 - alpha)))


def default_domain_bound(*oracles) -> float:
    return 40.0 + 2.0 * max(o.complexity_size() for o in oracles if o is not None)


# ---------------------------------------------------------------------------
# inner problem

class _InnerObjective:
    """g(Y, Z) = f_p(Y + sp) + f_q(Z + sq) - <alpha, Y + Z>, with f = log o(exp .)."""

    def __init__(self, p, q, alpha, shift_p=None, shift_q=None, h=1e-4):
        self.p, self.q = p, q
        self.alpha = np.asarray(alpha, dtype=float)
        n = p.n
        self.n = n
        self.sp = np.zeros(n) if shift_p is None else shift_p
        self.sq = None if q is None else (np.zeros(n) if shift_q is None else shift_q)
        self.m = n if q is None else 2 * n
        self.h = h

    def _split(self, x):
        return x[..., :self.n], x[..., self.n:]

    def value(self, x):
        y, z = self._split(x)
        v = self.p.log_evaluate(y + self.sp) - self.alpha @ y
        if self.q is not None:
            v = v + self.q.log_evaluate(z + self.sq) - self.alpha @ z
        return float(v)

    def grad(self, x):
        y, z = self._split(x)
        gy = self.p.grad_log(y + self.sp) - self.alpha
        if self.q is None:
            return gy
        gz = self.q.grad_log(z + self.sq) - self.alpha
        # coordinates with zero scale do not enter q
        gz = np.where(np.isneginf(self.sq), 0.0, gz)
        return np.concatenate([gy, gz])

    def hess(self, x):
        y, z = self._split(x)
        Hp = self.p.hess_log(y + self.sp, self.h)
        if self.q is None:
            return Hp
        Hq = self.q.hess_log(z + self.sq, self.h)
        dead = np.isneginf(self.sq)
        Hq[dead, :] = 0.0
        Hq[:, dead] = 0.0
        H = np.zeros((self.m, self.m))
        H[:self.n, :self.n] = Hp
        H[self.n:, self.n:] = Hq
        return H


@dataclass
class _InnerOutcome:
    x: np.ndarray
    f: float
    iterations: int
    converged: bool
    decrement: float
    pg: float


def _box_newton(obj, x0, M, cfg: SaddleConfig) -> _InnerOutcome:
    """Projected, regularized Newton with Armijo backtracking on [-M, M]^m."""
    x = np.clip(np.asarray(x0, dtype=float), -M, M)
    f = obj.value(x)
    if not np.isfinite(f):
        return _InnerOutcome(x, f, 0, False, np.inf, np.inf)
    converged = False
    dec = np.inf
    pg_norm = np.inf
    it = 0
    for it in range(1, cfg.max_inner_iters + 1):
        g = obj.grad(x)
        blocked = ((x <= -M) & (g > 0)) | ((x >= M) & (g < 0))
        free = ~blocked
        pg_norm = float(np.max(np.abs(np.where(free, g, 0.0)), initial=0.0))
        if pg_norm < cfg.inner_tol:
            converged = True
            dec = 0.0
            break
        H = obj.hess(x)[np.ix_(free, free)]
        gf = g[free]
        mu = min(1.0, float(np.max(np.abs(gf))))
        w, V = np.linalg.eigh(H)
        w = np.maximum(w, 0.0) + mu
        df = -V @ ((V.T @ gf) / w)
        dec = float(-(gf @ df))
        if not dec > 0:
            df = -gf
            dec = float(gf @ gf)
        d = np.zeros_like(x)
        d[free] = df
        t = 1.0
        accepted = False
        while t > 1e-20:
            xn = np.clip(x + t * d, -M, M)
            fn = obj.value(xn)
            if np.isfinite(fn) and fn <= f + cfg.armijo_c * float(g @ (xn - x)):
                accepted = True
                break
            t *= cfg.backtrack
        if not accepted:
            # no representable decrease left: accept if the gradient is already tiny
            converged = pg_norm < 1e3 * cfg.inner_tol
            break
        change = f - fn
        x, f = xn, fn
        if change <= 1e-15 * max(1.0, abs(f)) and np.max(np.abs(t * d)) < 1e-10:
            g = obj.grad(x)
            pg_norm = float(np.max(np.abs(np.where(free, g, 0.0)), initial=0.0))
            converged = pg_norm < 1e3 * cfg.inner_tol
            break
    return _InnerOutcome(x, f, it, converged, dec, pg_norm)


def _resolve_alpha(p, alpha):
    alpha = np.asarray(alpha, dtype=float)
    if alpha.shape != (p.n,):
        raise ValueError(f"alpha has shape {alpha.shape}, expected ({p.n},)")
    if np.any(alpha < 0):
        raise ValueError("alpha must be nonnegative")
    return alpha


def _check_nonzero(o):
    if not np.isfinite(o.log_evaluate(np.zeros(o.n))):
        raise ValueError(f"{o.name} is the zero polynomial")


def _outside(o, alpha) -> bool:
    desc = o.newton_desc
    if desc is None:
        return False
    return not desc.contains(alpha, tol=1e-9)


def inner_capacity(p, q=None, alpha=None, config: SaddleConfig | None = None,
                   domain_bound: float | None = None, warm=None, lam=None,
                   check: bool = True) -> CapacityResult:
    """inf_{y,z>0} p(y) q(z) / ((yz/alpha)^alpha), or inf_y p(y)/y^alpha when q is None.

    lam, when given, replaces p(y) by p(lam * y).
    """
    cfg = config or SaddleConfig()
    if q is not None and q.n != p.n:
        raise ValueError(f"dimension mismatch: {p.n} vs {q.n}")
    alpha = _resolve_alpha(p, np.ones(p.n) if alpha is None else alpha)
    M = domain_bound or cfg.domain_bound or default_domain_bound(p, q)
    if check:
        _check_nonzero(p)
        if q is not None:
            _check_nonzero(q)
    if check and (_outside(p, alpha) or (q is not None and _outside(q, alpha))):
        return CapacityResult(0.0, -math.inf, None, None, alpha, 0, 0.0, True,
                              "alpha outside the Newton polytope")
    with np.errstate(divide="ignore"):
        sq = None if q is None else np.log(alpha)
        sp = None if lam is None else np.log(np.asarray(lam, dtype=float))
    obj = _InnerObjective(p, q, alpha, sp, sq, cfg.hessian_step)
    x0 = np.zeros(obj.m) if warm is None else warm
    out = _box_newton(obj, x0, M, cfg)
    y, z = out.x[:p.n], (out.x[p.n:] if q is not None else None)
    gap = math.expm1(0.5 * out.decrement) if np.isfinite(out.decrement) else math.inf
    return CapacityResult(
        value=math.exp(out.f) if out.f < 709 else math.inf, log_value=out.f,
        argmin_y=y, argmin_z=z, arg_alpha=alpha, iterations=out.iterations,
        certified_gap=gap, converged=out.converged,
        message="" if out.converged else "inner solver did not converge",
    )


# ---------------------------------------------------------------------------
# outer problem geometry

class _Region:
    """Intersection of Newton polytopes: affine hull, interior point, halfspaces."""

    def __init__(self, oracles, n):
        self.n = n
        descs = [o.newton_desc for o in oracles]
        self.known = all(d is not None for d in descs)
        self.empty = False
        self.C = self.b = None
        if not self.known:
            D = [o.homogeneous_degree for o in oracles]
            self._box_fallback(oracles, D)
            return
        pts = [d.points() for d in descs]
        if n <= HREP_MAX_DIM:
            C = newton.sign_vectors(n).astype(float)
            b = np.min([d.support_values(C) for d in descs], axis=0)
            self.C, self.b = C, b
        if any(p is None for p in pts):
            self._box_fallback(oracles, [o.homogeneous_degree for o in oracles])
            return
        if any(len(p) == 0 for p in pts):
            self.empty = True
            return
        self._hull_from_points(pts)
        if not self.empty:
            self._pick_center(pts)

    def _box_fallback(self, oracles, D):
        n = self.n
        hi = float(min(o.degree for o in oracles))
        degs = {d for d in D if d is not None}
        if len(degs) > 1:
            self.empty = True
            return
        if degs:
            Dh = degs.pop()
            self.E = np.ones((n, 1)) / math.sqrt(n)
            self.B = null_space(self.E.T)
            self.center = np.full(n, Dh / n)
        else:
            self.E = np.zeros((n, 0))
            self.B = np.eye(n)
            self.center = np.full(n, hi / (2 * n) if n else 0.0)
        self.lo, self.hi = 0.0, hi

    def _lp_point(self, pts, c):
        n = self.n
        sizes = [len(p) for p in pts]
        nv = n + sum(sizes)
        rows, rhs = [], []
        off = n
        for P in pts:
            for i in range(n):
                r = np.zeros(nv)
                r[i] = 1.0
                r[off:off + len(P)] = -P[:, i]
                rows.append(r)
                rhs.append(0.0)
            r = np.zeros(nv)
            r[off:off + len(P)] = 1.0
            rows.append(r)
            rhs.append(1.0)
            off += len(P)
        obj = np.zeros(nv)
        obj[:n] = c
        bounds = [(None, None)] * n + [(0, None)] * (nv - n)
        res = linprog(obj, A_eq=np.array(rows), b_eq=np.array(rhs), bounds=bounds, method="highs")
        if res.status != 0:
            return None
        return res.x[:n]

    def _hull_from_points(self, pts):
        n = self.n
        x0 = self._lp_point(pts, np.zeros(n))
        if x0 is None:
            self.empty = True
            return
        basis = np.zeros((n, 0))
        eqs = np.zeros((n, 0))
        found = [x0]
        while basis.shape[1] + eqs.shape[1] < n:
            comp = null_space(np.hstack([basis, eqs]).T) if basis.size + eqs.size else np.eye(n)
            d = comp[:, 0]
            a = self._lp_point(pts, -d)
            b = self._lp_point(pts, d)
            hi, lo = float(d @ a), float(d @ b)
            if hi - lo > 1e-9:
                found += [a, b]
                v = a - b
                v -= basis @ (basis.T @ v)
                v /= np.linalg.norm(v)
                basis = np.hstack([basis, v[:, None]])
            else:
                eqs = np.hstack([eqs, d[:, None]])
        self.B = basis
        self.E = eqs
        self.found = np.array(found)

    def _pick_center(self, pts):
        cands = [np.mean(pts[0], axis=0), np.mean(pts[-1], axis=0),
                 0.5 * (np.mean(pts[0], axis=0) + np.mean(pts[-1], axis=0)),
                 np.mean(self.found, axis=0)]
        anchor = np.mean(self.found, axis=0)
        for c in cands:
            # keep the affine-hull coordinates of the LP points exactly
            c = anchor + self.B @ (self.B.T @ (c - anchor))
            if self.strictly_inside(c, 1e-6):
                self.center = c
                return
        self.center = anchor

    def strictly_inside(self, alpha, margin=0.0) -> bool:
        if np.any(alpha < -1e-12):
            return False
        if self.C is None:
            return bool(np.all(alpha >= getattr(self, "lo", 0.0)) and
                        np.all(alpha <= getattr(self, "hi", np.inf)))
        slack = self.b - self.C @ alpha
        moving = np.linalg.norm(self.C @ self.B, axis=1) > 1e-9 if self.B.size else np.zeros(len(slack), bool)
        return bool(np.all(slack[moving] > margin) and np.all(slack[~moving] > -1e-9))

    def rows(self):
        """Inequalities G alpha <= b that actually vary over the affine hull."""
        if self.C is not None:
            G, b = self.C, self.b
        else:
            I = np.eye(self.n)
            G = np.vstack([-I, I]) if np.isfinite(self.hi) else -I
            b = np.concatenate([np.full(self.n, -self.lo), np.full(self.n, self.hi)]) \
                if np.isfinite(self.hi) else np.full(self.n, -self.lo)
        moving = np.linalg.norm(G @ self.B, axis=1) > 1e-9
        return G[moving], b[moving]

    def max_step(self, alpha, direction) -> float:
        """Largest s with alpha + s*direction still inside."""
        s = np.inf
        neg = direction < -1e-15
        if np.any(neg):
            s = min(s, float(np.min(-alpha[neg] / direction[neg])))
        if self.C is not None:
            rate = self.C @ direction
            slack = self.b - self.C @ alpha
            mov = rate > 1e-12
            if np.any(mov):
                s = min(s, float(np.min(np.maximum(slack[mov], 0.0) / rate[mov])))
        elif hasattr(self, "hi"):
            pos = direction > 1e-15
            if np.any(pos):
                s = min(s, float(np.min((self.hi - alpha[pos]) / direction[pos])))
        return s


# ---------------------------------------------------------------------------
# outer problem

class _OuterObjective:
    """h(alpha) = inner log value, with its envelope supergradient 1 - Y - Z."""

    def __init__(self, p, q, cfg, M, lam_mode=False, D=None):
        self.p, self.q, self.cfg, self.M = p, q, cfg, M
        self.lam_mode = lam_mode
        self.D = D
        self.warm = None
        self.calls = 0
        self.inner_ok = True
        self.last = None

    def lam(self, alpha):
        return self.D * alpha / alpha.sum()

    def __call__(self, alpha):
        self.calls += 1
        alpha = np.maximum(alpha, 0.0)  # exact boundary steps leave ~1e-17 residue
        lam = self.lam(alpha) if self.lam_mode else None
        res = inner_capacity(self.p, self.q, alpha, self.cfg, self.M, self.warm, lam, check=False)
        if not np.isfinite(res.log_value):
            return -math.inf, None, res
        grad = 1.0 - res.argmin_y - res.argmin_z
        return res.log_value, grad, res

    def accept(self, res):
        self.warm = np.concatenate([res.argmin_y, res.argmin_z])
        self.inner_ok = res.converged
        self.last = res


def _tangent_projection(GT, g):
    """Project g onto the cone {d : GT d <= 0}; returns (d, multipliers)."""
    if GT.shape[0] == 0:
        return g.copy(), np.zeros(0)
    mu, _ = nnls(GT.T, g)
    return g - GT.T @ mu, mu


def _blocked_search(obj, alpha, step, val, slope, smax, cfg):
    """Maximize along alpha + s*step for s in [0, smax], where smax is the boundary.

    h is concave on the segment, so its derivative is decreasing: go to the
    boundary if the derivative is still positive just before it, otherwise
    find the sign change by a safeguarded secant (Illinois) iteration.
    """
    def probe(s):
        cv, cg, cres = obj(alpha + s * step)
        if cg is None or not np.isfinite(cv):
            return cv, None, cres, -math.inf
        return cv, cg, cres, float(cg @ step)

    s_in = smax * (1.0 - BOUNDARY_NUDGE)
    cv, cg, cres, dv = probe(s_in)
    if cg is not None and dv >= 0:
        bv, bg, bres, _ = probe(smax)
        if bg is not None and bv >= cv:
            return smax, alpha + smax * step, bv, bg, bres
        return s_in, alpha + s_in * step, cv, cg, cres
    lo, dlo, hi, dhi = 0.0, slope, s_in, dv
    best = None
    side = 0
    for _ in range(60):
        if np.isfinite(dhi) and dlo > dhi:
            s = hi - dhi * (hi - lo) / (dhi - dlo)
            s = min(max(s, lo + 0.01 * (hi - lo)), hi - 0.01 * (hi - lo))
        else:
            s = 0.5 * (lo + hi)
        cv, cg, cres, dv = probe(s)
        if cg is not None and cv >= val + cfg.armijo_c * s * slope:
            if best is None or cv > best[2]:
                best = (s, alpha + s * step, cv, cg, cres)
            if abs(dv) <= 0.1 * slope:
                break
        if cg is not None and dv > 0:
            lo, dlo = s, dv
            if side == 1:
                dhi *= 0.5
            side = 1
        else:
            hi, dhi = s, dv
            if side == -1:
                dlo *= 0.5
            side = -1
        if hi - lo <= 1e-15 * max(1.0, smax):
            break
    return best


def _ascent(obj: _OuterObjective, region: _Region, cfg: SaddleConfig, alpha0):
    """Active-set gradient projection with BFGS on the current face.

    On the boundary the envelope gradient says nothing about the directions
    leaving the face, so those components come from a point nudged inward.
    """
    alpha = alpha0.copy()
    B = region.B
    val, g_a, res = obj(alpha)
    if g_a is None:
        return alpha, val, res, 0, False, 0.0
    obj.accept(res)
    r = B.shape[1]
    if r == 0:
        return alpha, val, obj.last, 0, True, 0.0
    G, b = region.rows()
    GB = G @ B
    tight_tol = 1e-10 * np.maximum(1.0, np.abs(b))
    face, F, Hinv = None, None, None
    it, converged, stall, pg_norm = 0, False, 0, math.inf
    for it in range(1, cfg.max_outer_iters + 1):
        slack = b - G @ alpha
        T = np.flatnonzero(slack <= tight_tol)
        gh = B.T @ g_a
        if T.size:
            nudged = alpha + BOUNDARY_NUDGE * (region.center - alpha)
            _, g_in, _ = obj(nudged)
            if g_in is not None:
                FT = null_space(GB[T])
                gin = B.T @ g_in
                gh = FT @ (FT.T @ gh) + gin - FT @ (FT.T @ gin)
        d_pg, mu = _tangent_projection(GB[T], gh)
        pg_norm = float(np.linalg.norm(d_pg))
        if pg_norm < cfg.outer_tol:
            converged = True
            break
        act = T[mu > 1e-12 * max(1.0, float(np.linalg.norm(gh)))] if T.size else T
        key = tuple(act.tolist())
        if key != face:
            face = key
            F = null_space(GB[act]) if act.size else np.eye(r)
            Hinv = np.eye(F.shape[1])
        gf = F.T @ gh
        d = F @ (Hinv @ gf)
        if gh @ d <= 0 or (T.size and np.any(GB[T] @ d > 1e-12)):
            d = d_pg
            Hinv = np.eye(F.shape[1])
        rate = GB @ d
        mov = rate > 1e-12
        smax = float(np.min(np.maximum(slack[mov], 0.0) / rate[mov])) if np.any(mov) else math.inf
        slope = float(gh @ d)
        found = _blocked_search(obj, alpha, B @ d, val, slope, smax, cfg) if smax <= 1.0 else None
        if found is None:
            s, accepted = min(1.0, smax), False
            while s > 1e-18:
                cand = alpha + s * (B @ d)
                cv, cg, cres = obj(cand)
                if cg is not None and np.isfinite(cv) and cv >= val + cfg.armijo_c * s * slope:
                    accepted = True
                    break
                s *= cfg.backtrack
        else:
            accepted = True
            s, cand, cv, cg, cres = found
        if not accepted:
            converged = pg_norm < STALL_PG_TOL
            break
        obj.accept(cres)
        if F.shape[1] and s < smax:
            sk = s * (F.T @ d)
            yk = gf - F.T @ (B.T @ cg)
            sy = float(sk @ yk)
            if sy > 1e-16 * max(1.0, float(np.linalg.norm(sk) * np.linalg.norm(yk))):
                if np.allclose(Hinv, np.eye(len(sk))):
                    Hinv = np.eye(len(sk)) * sy / float(yk @ yk)
                rho = 1.0 / sy
                V = np.eye(len(sk)) - rho * np.outer(sk, yk)
                Hinv = V @ Hinv @ V.T + rho * np.outer(sk, sk)
        gain = cv - val
        alpha, val, g_a = cand, cv, cg
        stall = stall + 1 if gain <= 1e-14 * max(1.0, abs(val)) else 0
        if stall >= 3:
            converged = pg_norm < STALL_PG_TOL
            break
    gap = pg_norm * math.sqrt(region.n) * max(1.0, float(obj.p.degree))
    return alpha, val, obj.last, it, converged, gap


def _boundary_sweep(obj, region, alpha, val, threshold=1e-6):
    # try moving nearly-vanishing coordinates exactly to zero along the hull
    B = region.B
    for i in np.flatnonzero((alpha > 0) & (alpha < threshold)):
        v = -(B @ B[i])
        if v[i] >= -1e-12:
            continue
        s = alpha[i] / -v[i]
        cand = alpha + s * v
        cand[i] = 0.0
        if np.any(cand < -1e-12):
            continue
        cand = np.maximum(cand, 0.0)
        if region.C is not None and np.any(region.C @ cand > region.b + 1e-9):
            continue
        cv, cg, cres = obj(cand)
        if cg is not None and cv > val:
            obj.accept(cres)
            alpha, val = cand, cv
    return alpha, val


def _solve_outer(p, q, cfg, lam_mode=False, D=None, alpha0=None):
    if q.n != p.n:
        raise ValueError(f"dimension mismatch: {p.n} vs {q.n}")
    _check_nonzero(p)
    _check_nonzero(q)
    M = cfg.domain_bound or default_domain_bound(p, q)
    region = _Region([p, q], p.n)
    if region.empty:
        return CapacityResult(0.0, -math.inf, None, None, None, 0, 0.0, True,
                              "Newton polytopes do not intersect")
    obj = _OuterObjective(p, q, cfg, M, lam_mode, D)
    start = region.center if alpha0 is None else np.asarray(alpha0, dtype=float)
    alpha, val, res, iters, ok, gap = _ascent(obj, region, cfg, start)
    if res is None:
        return CapacityResult(0.0, -math.inf, None, None, alpha, iters, 0.0, False,
                              "inner problem unbounded at the start point")
    alpha, val = _boundary_sweep(obj, region, alpha, val)
    res = obj.last
    converged = ok and obj.inner_ok
    gap_total = math.expm1(min(gap, 700.0)) + res.certified_gap
    msg = "" if converged else ("outer ascent stalled" if not ok else "inner solver did not converge")
    return CapacityResult(
        value=math.exp(val) if val < 709 else math.inf, log_value=val,
        argmin_y=res.argmin_y, argmin_z=res.argmin_z, arg_alpha=alpha, iterations=iters,
        certified_gap=gap_total, converged=converged, message=msg,
        lam=obj.lam(alpha) if lam_mode else None,
        trace=[("oracle_calls", obj.calls), ("region_dim", region.B.shape[1])],
    )


def saddle_capacity(p, q, config: SaddleConfig | None = None, alpha0=None) -> CapacityResult:
    """sup over alpha of inf over y, z > 0 of p(y) q(z) / ((yz/alpha)^alpha)."""
    return _solve_outer(p, q, config or SaddleConfig(), alpha0=alpha0)


def relaxation_capacity(p, q, D: int, config: SaddleConfig | None = None) -> CapacityResult:
    """sup over alpha and lambda (lambda >= 0, sum lambda = D) of
    inf over y, z > 0 of p(lambda y) q(z) / ((yz/alpha)^alpha).

    For fixed alpha the best lambda is D * alpha / sum(alpha), which is used directly.
    """
    for o in (p, q):
        if o.homogeneous_degree != D:
            raise ValueError(f"{o.name} is not {D}-homogeneous")
    return _solve_outer(p, q, config or SaddleConfig(), lam_mode=True, D=D)


def solve(problem: CapacityProblem, config: SaddleConfig | None = None) -> CapacityResult:
    cfg = config or SaddleConfig()
    if problem.domain_bound is not None:
        cfg = SaddleConfig(**{**cfg.__dict__, "domain_bound": problem.domain_bound})
    if isinstance(problem.alpha, str):
        if problem.alpha != "free" or problem.q is None:
            raise ValueError("free alpha needs both p and q")
        return saddle_capacity(problem.p, problem.q, cfg)
    return inner_capacity(problem.p, problem.q, problem.alpha, cfg)


def gurvits_interval(A, config: SaddleConfig | None = None):
    """(e^{-n} cap, cap) with cap = inf_y prod_i (A y)_i / prod_j y_j; brackets per(A)."""
    from .oracles import permanent_poly

    A = np.asarray(A, dtype=float)
    p = permanent_poly(A)
    n = A.shape[0]
    if n == 0:
        return 1.0, 1.0, None
    if np.any(A.sum(axis=1) == 0):
        return 0.0, 0.0, None
    res = inner_capacity(p, None, np.ones(n), config)
    cap = res.value
    return math.exp(-n) * cap, cap, res
