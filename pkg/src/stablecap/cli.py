"""stablecap command line.

Exit codes: 0 ok, 1 bad input, 2 guarantee violated (a self-check hook),
3 Sinkhorn scaling failed, 4 solver did not converge (results still printed).
"""
from __future__ import annotations

import argparse
import hashlib
import json
import logging
import math
import os
import sys
import time
from dataclasses import asdict, dataclass

import numpy as np

from . import __version__
from .capacity import SaddleConfig, gurvits_interval, inner_capacity, saddle_capacity
from .counting import ApproxResult, approx_correlation, detmax, kdpp_similarity, schrijver_check
from .exact import exact_kdpp_sum, ryser_permanent
from .io import (InputError, parse_vector, read_partition, read_poly, read_square)
from .newton import NewtonPolytope, membership_probe, newton_membership
from .oracles import SinkhornError, sinkhorn, sparse_oracle
from .poly import diagonal_restriction, exact_correlation, is_block_symmetric, is_multilinear, polarize

log = logging.getLogger("stablecap")

EXIT_OK, EXIT_INPUT, EXIT_GUARANTEE, EXIT_SINKHORN, EXIT_SOLVER = 0, 1, 2, 3, 4
# relative slack when checking an exact value against a certified bracket
CHECK_SLACK = 1e-6


@dataclass
class RunRecord:
    command: str
    digest: str
    config: dict
    result: dict
    wall_time: float
    version: str = __version__


def _clean(x):
    """JSON-safe copy: numpy scalars to Python, non-finite floats to strings."""
    if isinstance(x, dict):
        return {str(k): _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, np.ndarray)):
        return [_clean(v) for v in x]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if math.isfinite(x) else ("inf" if x > 0 else "-inf" if x < 0 else "nan")
    return x


def dumps(obj) -> str:
    return json.dumps(_clean(obj), sort_keys=True)


def digest(inputs) -> str:
    return hashlib.sha256(dumps(inputs).encode()).hexdigest()


def _config(args) -> SaddleConfig:
    kw = {}
    if args.tol is not None:
        kw["inner_tol"] = args.tol
        kw["outer_tol"] = args.tol
    if args.domain_bound is not None:
        kw["domain_bound"] = args.domain_bound
    if args.max_iters is not None:
        kw["max_outer_iters"] = args.max_iters
    return SaddleConfig(**kw)


def _approx_dict(res: ApproxResult) -> dict:
    out = res.to_dict()
    out["converged"] = res.converged
    return out


def _within(value, lower, upper) -> bool:
    return lower - CHECK_SLACK * abs(value) <= value <= upper + CHECK_SLACK * abs(value)


# each command returns (inputs, result dict, exit code)

def cmd_permanent(args):
    A = read_square(args.matrix)
    if np.any(A < 0):
        raise InputError("permanent bounds need a nonnegative matrix")
    lo, cap, res = gurvits_interval(A, _config(args))
    out = {"n": A.shape[0], "lower": lo, "upper": cap,
           "converged": True if res is None else res.converged}
    code = EXIT_OK if out["converged"] else EXIT_SOLVER
    if args.exact:
        exact = ryser_permanent(A).value
        out["exact"] = exact
        if not _within(exact, lo, cap):
            code = EXIT_GUARANTEE
    return {"matrix": A}, out, code


def cmd_schrijver(args):
    if args.random is not None:
        if args.random < 1:
            raise InputError("--random needs a positive size")
        A = np.random.default_rng(args.seed).random((args.random, args.random))
    elif args.matrix is not None:
        A = read_square(args.matrix)
    else:
        raise InputError("give a matrix file or --random N")
    if args.sinkhorn or args.random is not None:
        A = sinkhorn(A)
    per_tilde, bound, cap_lower = schrijver_check(A, _config(args))
    ok = per_tilde >= cap_lower - 1e-9 and cap_lower >= bound - 1e-9
    out = {"per_tilde": per_tilde, "bound": bound, "capacity_lower": cap_lower,
           "check": "PASS" if ok else "FAIL"}
    return {"matrix": A}, out, EXIT_OK if ok else EXIT_GUARANTEE


def cmd_correlate(args):
    p, q = read_poly(args.p), read_poly(args.q)
    if p.n != q.n:
        raise InputError(f"dimension mismatch: {p.n} vs {q.n}")
    res = approx_correlation(sparse_oracle(p), sparse_oracle(q), args.tol or 1e-6, _config(args))
    out = _approx_dict(res)
    code = EXIT_OK if res.converged else EXIT_SOLVER
    if args.exact:
        exact = float(exact_correlation(p, q))
        out["exact"] = exact
        if not _within(exact, res.lower, res.upper):
            code = EXIT_GUARANTEE
    return {"p": p.to_dict(), "q": q.to_dict()}, out, code


def cmd_dpp(args):
    L, Lp = read_square(args.kernel1), read_square(args.kernel2)
    if L.shape != Lp.shape:
        raise InputError(f"dimension mismatch: {L.shape} vs {Lp.shape}")
    if not 0 <= args.k <= L.shape[0]:
        raise InputError(f"need 0 <= k <= {L.shape[0]}")
    res = kdpp_similarity(L, Lp, args.k, args.tol or 1e-6, _config(args))
    out = _approx_dict(res)
    code = EXIT_OK if res.converged else EXIT_SOLVER
    if args.exact:
        exact = exact_kdpp_sum(L, Lp, args.k).value
        out["exact"] = exact
        if not _within(exact, res.lower, res.upper):
            code = EXIT_GUARANTEE
    return {"L": L, "Lp": Lp, "k": args.k}, out, code


def cmd_detmax(args):
    L = read_square(args.kernel)
    parts, b = read_partition(args.partition)
    n = L.shape[0]
    if sorted(i for part in parts for i in part) != list(range(n)):
        raise InputError(f"parts must cover 0..{n - 1} exactly once")
    S, det, relax, sol, res = detmax(L, parts, b, args.trials, args.seed, _config(args))
    D = sum(b)
    approx = ApproxResult(estimate=det, guaranteed_ratio=math.exp(2 * D), lower=sol.value,
                          upper=relax, alpha=None if res.arg_alpha is None else list(res.arg_alpha),
                          iterations=res.iterations, converged=res.converged)
    out = _approx_dict(approx)
    out.update({"S": S, "det": det, "trials": args.trials, "seed": args.seed})
    if sol.value > relax * (1 + CHECK_SLACK):
        return {"L": L, "parts": parts, "b": b}, out, EXIT_GUARANTEE
    return {"L": L, "parts": parts, "b": b}, out, EXIT_OK if res.converged else EXIT_SOLVER


def cmd_capacity(args):
    p = read_poly(args.p)
    q = read_poly(args.q) if args.q else None
    if q is not None and q.n != p.n:
        raise InputError(f"dimension mismatch: {p.n} vs {q.n}")
    cfg = _config(args)
    po = sparse_oracle(p)
    qo = None if q is None else sparse_oracle(q)
    if args.alpha is not None:
        alpha = parse_vector(args.alpha)
        if alpha.shape != (p.n,):
            raise InputError(f"alpha has {alpha.size} entries, expected {p.n}")
        res = inner_capacity(po, qo, alpha, cfg)
    elif qo is not None:
        res = saddle_capacity(po, qo, cfg)
    else:
        raise InputError("a single polynomial needs --alpha")
    out = {"value": res.value, "log_value": res.log_value,
           "alpha": None if res.arg_alpha is None else list(res.arg_alpha),
           "iters": res.iterations, "converged": res.converged, "gap": res.certified_gap,
           "message": res.message}
    inputs = {"p": p.to_dict(), "q": None if q is None else q.to_dict(), "alpha": args.alpha}
    return inputs, out, EXIT_OK if res.converged else EXIT_SOLVER


def cmd_polarize(args):
    p = read_poly(args.p)
    m = args.m if args.m is not None else max(p.var_degrees() or [0])
    P = polarize(p, m, exact=args.exact)
    back = diagonal_restriction(P, p.n, m)
    diff = max((abs(float(back.coeff(e)) - float(p.coeff(e))) for e in set(p.support()) | set(back.support())),
               default=0.0)
    out = {"m": m, "polarized": P.to_dict(), "multilinear": is_multilinear(P),
           "block_symmetric": is_block_symmetric(P, p.n, m), "diagonal_error": diff}
    ok = out["multilinear"] and out["block_symmetric"] and (diff == 0.0 if args.exact else diff <= 1e-9)
    return {"p": p.to_dict(), "m": m}, out, EXIT_OK if ok else EXIT_GUARANTEE


def cmd_newton(args):
    p = read_poly(args.p)
    alpha = parse_vector(args.alpha)
    if alpha.shape != (p.n,):
        raise InputError(f"alpha has {alpha.size} entries, expected {p.n}")
    mem = newton_membership(NewtonPolytope.from_poly(p), alpha)
    probe = membership_probe(sparse_oracle(p), alpha)
    out = {"inside": mem.inside, "witness": None if mem.c is None else list(mem.c),
           "support_value": mem.f_c, "probe": probe}
    return {"p": p.to_dict(), "alpha": alpha}, out, EXIT_OK


def _render(result: dict) -> str:
    clean = _clean(result)
    width = max((len(k) for k in clean), default=0)
    lines = []
    for k in sorted(clean):
        v = clean[k]
        text = json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else str(v)
        lines.append(f"{k.ljust(width)}  {text}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="solver tolerance")
    common.add_argument("--domain-bound", type=float, default=None, help="box bound M for log coordinates")
    common.add_argument("--max-iters", type=int, default=None, help="outer iteration cap")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="print JSON instead of a table")

    parser = argparse.ArgumentParser(prog="stablecap", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("permanent", parents=[common], help="capacity bracket for per(A)")
    s.add_argument("matrix")
    s.add_argument("--exact", action="store_true", help="also run Ryser and check the bracket")
    s.set_defaults(func=cmd_permanent)

    s = sub.add_parser("schrijver", parents=[common], help="Schrijver-type permanent lower bound chain")
    s.add_argument("matrix", nargs="?")
    s.add_argument("--sinkhorn", action="store_true", help="normalize to doubly stochastic first")
    s.add_argument("--random", type=int, default=None, metavar="N", help="random NxN matrix from --seed")
    s.set_defaults(func=cmd_schrijver)

    s = sub.add_parser("correlate", parents=[common], help="bracket sum kappa! C_p C_q")
    s.add_argument("p")
    s.add_argument("q")
    s.add_argument("--exact", action="store_true")
    s.set_defaults(func=cmd_correlate)

    s = sub.add_parser("dpp", parents=[common], help="bracket sum_{|S|=k} det(L_S) det(L'_S)")
    s.add_argument("kernel1")
    s.add_argument("kernel2")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("--exact", action="store_true")
    s.set_defaults(func=cmd_dpp)

    s = sub.add_parser("detmax", parents=[common], help="partition-constrained determinant maximization")
    s.add_argument("kernel")
    s.add_argument("partition")
    s.add_argument("--trials", type=int, default=64)
    s.set_defaults(func=cmd_detmax)

    s = sub.add_parser("capacity", parents=[common], help="capacity of p, or saddle value of (p, q)")
    s.add_argument("p")
    s.add_argument("q", nargs="?")
    s.add_argument("--alpha", default=None, help="comma-separated exponent vector")
    s.set_defaults(func=cmd_capacity)

    s = sub.add_parser("polarize", parents=[common], help="multilinear polarization")
    s.add_argument("p")
    s.add_argument("--m", type=int, default=None, help="copies per variable (default: max degree)")
    s.add_argument("--exact", action="store_true", help="rational arithmetic")
    s.set_defaults(func=cmd_polarize)

    s = sub.add_parser("newton", parents=[common], help="Newton polytope membership")
    s.add_argument("p")
    s.add_argument("--alpha", required=True)
    s.set_defaults(func=cmd_newton)
    return parser


def main(argv=None) -> int:
    level = os.environ.get("STABLECAP_LOG", "error").upper()
    logging.basicConfig(stream=sys.stderr, level=getattr(logging, level, logging.ERROR),
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        inputs, result, code = args.func(args)
    except SinkhornError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINKHORN
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    config = {k: v for k, v in vars(args).items() if k != "func"}
    record = RunRecord(args.command, digest(inputs), config, result, time.perf_counter() - start)
    log.info("run %s", dumps(asdict(record)))
    print(dumps(result) if args.json else _render(result))
    if code == EXIT_GUARANTEE:
        log.error("guarantee check failed")
    elif code == EXIT_SOLVER:
        log.warning("solver did not converge; printed values are the best iterate")
    return code


if __name__ == "__main__":
    sys.exit(main())
