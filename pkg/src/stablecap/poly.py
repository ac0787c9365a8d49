"""Sparse polynomials with nonnegative coefficients.

Exponent vectors are tuples of nonnegative ints indexed from 0. Coefficients
are Python numbers (float, int or Fraction) and are strictly positive; zero
terms are never stored.
"""
from __future__ import annotations

import itertools
import json
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

import numpy as np

# below this total degree factorials are exact Python ints
EXACT_FACTORIAL_DEGREE = 20


class ExactnessWarning(UserWarning):
    """Raised when a computation falls back from exact to floating point."""


@dataclass(frozen=True)
class PolyComplexity:
    n: int
    degree: int
    log_min_coeff: float
    log_max_coeff: float

    @property
    def size(self) -> float:
        return self.n + self.degree + abs(self.log_min_coeff) + abs(self.log_max_coeff)


class SparsePoly:
    __slots__ = ("n", "_terms", "_order", "declared_stable")

    def __init__(self, n: int, terms, declared_stable: bool = False):
        n = int(n)
        if n < 0:
            raise ValueError("number of variables must be nonnegative")
        clean = {}
        for exp, c in dict(terms).items():
            exp = tuple(int(k) for k in exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {n}")
            if any(k < 0 for k in exp):
                raise ValueError(f"negative exponent in {exp}")
            if c < 0:
                raise ValueError(f"negative coefficient {c} at {exp}")
            if c == 0:
                continue
            clean[exp] = c
        self.n = n
        self._terms = MappingProxyType(dict(sorted(clean.items())))
        self._order = None
        self.declared_stable = bool(declared_stable)

    @property
    def terms(self):
        return self._terms

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.n == other.n and dict(self._terms) == dict(other._terms)

    def __hash__(self):
        return hash((self.n, tuple(self._terms.items())))

    def __repr__(self):
        return f"SparsePoly(n={self.n}, terms={dict(self._terms)!r})"

    def coeff(self, exp) -> float:
        return self._terms.get(tuple(int(k) for k in exp), 0)

    def support(self) -> list[tuple[int, ...]]:
        return list(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def var_degrees(self) -> list[int]:
        out = [0] * self.n
        for e in self._terms:
            for i, k in enumerate(e):
                out[i] = max(out[i], k)
        return out

    def homogeneous_degree(self):
        degs = {sum(e) for e in self._terms}
        return degs.pop() if len(degs) == 1 else None

    def complexity(self) -> PolyComplexity:
        if self.is_zero():
            return PolyComplexity(self.n, 0, 0.0, 0.0)
        logs = [math.log(float(c)) for c in self._terms.values()]
        return PolyComplexity(self.n, self.degree(), min(logs), max(logs))

    def magnitude_order(self):
        # terms sorted by decreasing |coefficient|, ties lexicographic
        if self._order is None:
            self._order = sorted(self._terms.items(), key=lambda t: -abs(t[1]))
        return self._order

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        _check_same_n(self, other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return SparsePoly(self.n, terms, self.declared_stable and other.declared_stable)

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            if other < 0:
                raise ValueError("scaling by a negative number")
            return SparsePoly(self.n, {e: c * other for e, c in self._terms.items()},
                              self.declared_stable)
        _check_same_n(self, other)
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return SparsePoly(self.n, terms, self.declared_stable and other.declared_stable)

    __rmul__ = __mul__

    # serialization ----------------------------------------------------
    def to_dict(self) -> dict:
        return {"n": self.n,
                "terms": [{"exp": list(e), "coeff": float(c)} for e, c in self._terms.items()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data, declared_stable: bool = False) -> "SparsePoly":
        try:
            n = data["n"]
            raw = data["terms"]
        except (KeyError, TypeError) as exc:
            raise ValueError("polynomial JSON needs 'n' and 'terms'") from exc
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError("'n' must be an integer")
        terms = {}
        for t in raw:
            exp = t["exp"]
            coeff = t["coeff"]
            if len(exp) != n:
                raise ValueError(f"exponent {exp} has wrong length (n={n})")
            if any(not isinstance(k, int) or isinstance(k, bool) for k in exp):
                raise ValueError(f"exponent {exp} must contain integers")
            if not isinstance(coeff, (int, float)) or isinstance(coeff, bool):
                raise ValueError(f"coefficient {coeff!r} is not a number")
            key = tuple(exp)
            if key in terms:
                raise ValueError(f"duplicate exponent {exp}")
            terms[key] = coeff
        return cls(n, terms, declared_stable)

    @classmethod
    def from_json(cls, text: str, declared_stable: bool = False) -> "SparsePoly":
        return cls.from_dict(json.loads(text), declared_stable)


def _check_same_n(p, q):
    if p.n != q.n:
        raise ValueError(f"dimension mismatch: {p.n} vs {q.n}")


def monomial(exp, coeff=1) -> SparsePoly:
    return SparsePoly(len(exp), {tuple(exp): coeff}, declared_stable=True)


def variable(n: int, i: int, coeff=1) -> SparsePoly:
    e = [0] * n
    e[i] = 1
    return SparsePoly(n, {tuple(e): coeff}, declared_stable=True)


def linear_form(coeffs) -> SparsePoly:
    n = len(coeffs)
    terms = {}
    for i, c in enumerate(coeffs):
        if c:
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
    return SparsePoly(n, terms, declared_stable=True)


def evaluate(p: SparsePoly, z):
    """Evaluate p at z, summing terms from the largest coefficient down."""
    z = list(z)
    if len(z) != p.n:
        raise ValueError(f"dimension mismatch: point has {len(z)} entries, polynomial has {p.n}")
    total = 0
    for exp, c in p.magnitude_order():
        term = c
        for zi, k in zip(z, exp):
            if k:
                term = term * zi ** k
        total = total + term
    return total


def partial_derivative(p: SparsePoly, i: int) -> SparsePoly:
    if not 0 <= i < p.n:
        raise IndexError(f"variable index {i} out of range for n={p.n}")
    terms = {}
    for exp, c in p.terms.items():
        k = exp[i]
        if k:
            e = list(exp)
            e[i] = k - 1
            terms[tuple(e)] = c * k
    return SparsePoly(p.n, terms, p.declared_stable)


def exp_factorial(exp) -> int:
    out = 1
    for k in exp:
        out *= math.factorial(k)
    return out


def exact_correlation(p: SparsePoly, q: SparsePoly):
    """Sum over common monomials of kappa! * C_p(kappa) * C_q(kappa)."""
    _check_same_n(p, q)
    small, large = (p, q) if len(p) <= len(q) else (q, p)
    total = 0
    warned = False
    for exp, c in small.terms.items():
        d = large.terms.get(exp)
        if d is None:
            continue
        if sum(exp) <= EXACT_FACTORIAL_DEGREE:
            total += exp_factorial(exp) * c * d
        else:
            if not warned:
                warnings.warn("factorial weights computed in log space", ExactnessWarning)
                warned = True
            logw = sum(math.lgamma(k + 1) for k in exp)
            try:
                total += math.exp(logw + math.log(c) + math.log(d))
            except OverflowError as exc:
                raise OverflowError(f"factorial weight overflow at exponent {exp}") from exc
    return total


def is_multilinear(p: SparsePoly) -> bool:
    return all(k <= 1 for exp in p.terms for k in exp)


def polarize(p: SparsePoly, m: int, exact: bool = False) -> SparsePoly:
    """Replace z_i^k by e_k(z_i1..z_im) / binom(m, k).

    Variable (i, j) of the result sits at index i*m + j.
    """
    need = max(p.var_degrees(), default=0)
    if m < need:
        raise ValueError(f"m={m} is below the maximum per-variable degree {need}")
    n = p.n
    terms = {}
    for exp, c in p.terms.items():
        coeff = Fraction(c) if exact else float(c)
        choices = []
        for i, k in enumerate(exp):
            denom = math.comb(m, k)
            coeff = coeff / denom
            choices.append(list(itertools.combinations(range(m), k)))
        for pick in itertools.product(*choices):
            e = [0] * (n * m)
            for i, cols in enumerate(pick):
                for j in cols:
                    e[i * m + j] = 1
            key = tuple(e)
            terms[key] = terms.get(key, 0) + coeff
    return SparsePoly(n * m, terms, p.declared_stable)


def diagonal_restriction(P: SparsePoly, n: int, m: int) -> SparsePoly:
    """Substitute z_ij := z_i in a polynomial on n*m variables."""
    if P.n != n * m:
        raise ValueError("dimension mismatch")
    terms = {}
    for exp, c in P.terms.items():
        e = tuple(sum(exp[i * m:(i + 1) * m]) for i in range(n))
        terms[e] = terms.get(e, 0) + c
    return SparsePoly(n, terms, P.declared_stable)


def is_block_symmetric(P: SparsePoly, n: int, m: int) -> bool:
    """Check invariance under permuting the m copies inside each block."""
    if P.n != n * m:
        return False
    # adjacent transpositions generate each block's symmetric group
    for i in range(n):
        for a in range(m - 1):
            b = a + 1
            swapped = {}
            for exp, c in P.terms.items():
                e = list(exp)
                e[i * m + a], e[i * m + b] = e[i * m + b], e[i * m + a]
                swapped[tuple(e)] = c
            if swapped != dict(P.terms):
                return False
    return True


def _hessian_entries(p: SparsePoly):
    grads = [partial_derivative(p, i) for i in range(p.n)]
    mixed = {}
    for i in range(p.n):
        for j in range(i + 1, p.n):
            mixed[i, j] = partial_derivative(grads[i], j)
    return grads, mixed


def branden_multilinear_stability_check(p: SparsePoly, samples: int = 200, seed: int = 0,
                                        tol: float = 1e-9) -> bool:
    """Sampled Rayleigh test d_i p * d_j p >= p * d_ij p on real points.

    Returns False as soon as a violated point is found. A True answer is a
    sampled certificate, not a proof.
    """
    if not is_multilinear(p):
        raise ValueError("stability criterion applies to multilinear polynomials only")
    if p.n < 2:
        return True
    grads, mixed = _hessian_entries(p)
    rng = np.random.default_rng(seed)
    pts = rng.standard_normal((samples, p.n))
    # include the 0/1 corners, which catch most failures exactly
    corners = np.array(list(itertools.product((0.0, 1.0), repeat=p.n))) if p.n <= 10 else np.empty((0, p.n))
    for x in itertools.chain(corners, pts):
        px = evaluate(p, x)
        g = [evaluate(gi, x) for gi in grads]
        for (i, j), h in mixed.items():
            if g[i] * g[j] - px * evaluate(h, x) < -tol:
                return False
    return True
