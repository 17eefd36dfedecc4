"""Structural properties of the engine, each runnable on its own."""
from __future__ import annotations

import tempfile

from ...coeffs import specialize_q, t
from ...ctengine import above_diagonal_paths, path_ct_t_at_bound, path_ct_t_stabilized, path_sum_t, stabilize
from ...macdonald import FORMAT_VERSION, MacdonaldBasis, build_basis, forget_bases
from ...partitions import inverse_descent_set, partitions
from ...ratpark import area, dinv_path, enum_paths, hikita_sum, llt_lambda, llt_path_sum, path_sum
from ...symfunc.qsym import from_ides, qsym_coords
from ...symfunc.sym import e, s
from ..cases import PROVED, Check
from .catalan import stabilized_bounds
from .common import Context, coprime_pairs

QSYM_MAX = 5
LLT_TRIPLES = ((1, 1, 3), (1, 1, 4), (2, 3, 1), (3, 4, 1), (1, 2, 2), (2, 1, 2), (1, 2, 3))
DINV_MAX_SUM = 9


def _check(case_id, params, lhs, rhs, compute) -> Check:
    return Check(case_id, "property", PROVED, params, lhs, rhs, compute)


# quasisymmetric coordinates --------------------------------------------------------------

def _roundtrip(n: int):
    fns = [s(lam) for lam in partitions(n)]
    return [qsym_coords(f, n).to_symf() for f in fns], fns


def _gessel_permutations(n: int):
    from itertools import permutations

    pairs = [(inverse_descent_set(sigma), 1) for sigma in permutations(range(1, n + 1))]
    return from_ides(n, pairs).to_symf(), e(1) ** n


def qsym_cases(ctx: Context) -> list[Check]:
    out = []
    for n in range(1, QSYM_MAX + 1):
        out.append(_check(f"qsym-roundtrip-n{n}", {"n": n}, "s_lam -> F coordinates -> symmetric function",
                          "s_lam", lambda n=n: _roundtrip(n)))
        out.append(_check(f"qsym-gessel-permutations-n{n}", {"n": n}, "sum over S_n of F_ides(sigma)",
                          "e_1^n", lambda n=n: _gessel_permutations(n)))
    for m, n, k in LLT_TRIPLES:
        out.append(_check(
            f"qsym-hikita-symmetric-{m}-{n}-{k}", {"m": m, "n": n, "k": k},
            "the parking function sum is symmetric", "True",
            lambda m=m, n=n, k=k: (hikita_sum(m, n, k, limits=ctx.limits).is_symmetric(), True),
        ))
    return out


# LLT polynomials at q = 1 ----------------------------------------------------------------

def _llt_q1(m: int, n: int, k: int, limits):
    got, want = [], []
    for path in enum_paths(m, n, k, limits):
        got.append(llt_path_sum(path).map(lambda c: specialize_q(c, 1)).to_symf())
        want.append(e(llt_lambda(path)).scale(t ** area(path)))
    return got, want


def llt_cases(ctx: Context) -> list[Check]:
    return [_check(
        f"llt-q1-{m}-{n}-{k}", {"m": m, "n": n, "k": k},
        "per-path parking function sum at q = 1", "t^area e_lambda(path)",
        lambda m=m, n=n, k=k: _llt_q1(m, n, k, ctx.limits),
    ) for m, n, k in LLT_TRIPLES]


# path dinv conventions ----------------------------------------------------------------------

def _dinv_weak_strict(m: int, n: int, limits):
    paths = enum_paths(m, n, 1, limits)
    return [dinv_path(p, True) for p in paths], [dinv_path(p, False) for p in paths]


def dinv_cases(ctx: Context) -> list[Check]:
    out = []
    for m, n in coprime_pairs(DINV_MAX_SUM):
        out.append(_check(
            f"dinv-weak-strict-{m}-{n}", {"m": m, "n": n},
            "path dinv with the weak inequality", "path dinv with the strict inequality",
            lambda m=m, n=n: _dinv_weak_strict(m, n, ctx.limits),
        ))
    out.append(_check(
        "dinv-weak-strict-sums", {}, "sum q^dinv t^area, weak", "sum q^dinv t^area, strict",
        lambda: ([path_sum(m, n, weak=True, limits=ctx.limits) for m, n in coprime_pairs(DINV_MAX_SUM)],
                 [path_sum(m, n, weak=False, limits=ctx.limits) for m, n in coprime_pairs(DINV_MAX_SUM)]),
    ))
    return out


# truncation stabilization ---------------------------------------------------------------

def _path_stable(u: int, v: int, limits):
    got, want = [], []
    for gamma in above_diagonal_paths(u, v):
        st = path_ct_t_stabilized(gamma, limits)
        got.append([st.value] + [path_ct_t_at_bound(gamma, k * st.bound, limits) for k in (2, 4)])
        want.append([path_sum_t(gamma)] * 3)
    return got, want


def _stabilize_contract():
    # a sequence that settles only at 40; the protocol must not stop early
    return stabilize(lambda bound: min(bound, 40), 3).value, 40


def stabilization_cases(ctx: Context) -> list[Check]:
    out = []
    for m, n in ((2, 3), (3, 4), (3, 5), (2, 5)):
        out.append(_check(
            f"stable-catalan-{m}-{n}", {"m": m, "n": n}, "Catalan series at 2B, 4B, 8B", "value at B",
            lambda m=m, n=n: stabilized_bounds(m, n, ctx.limits),
        ))
    for u, v in ((2, 3), (3, 3), (3, 4)):
        out.append(_check(
            f"stable-path-ct-{u}x{v}", {"u": u, "v": v}, "t-chain series at B, 2B, 4B",
            "direct enumeration over paths above gamma", lambda u=u, v=v: _path_stable(u, v, ctx.limits),
        ))
    out.append(_check("stable-protocol", {}, "doubling protocol on a late-settling sequence",
                      "the settled value", _stabilize_contract))
    return out


# reports and caches ---------------------------------------------------------------------

def _determinism():
    from ..config import Config
    from ..report import build_report, dumps_json, strip_timing
    from ..runner import run_suite
    from .common import Selection

    config = Config()
    texts = []
    for _ in range(2):
        run = run_suite("catalan", config, selection=Selection(m=2, n=3))
        texts.append(dumps_json(strip_timing(build_report("catalan", run.cases, config.to_dict()))))
    return texts[0], texts[1]


def _cache_coherence(limits):
    from ..cache import JsonCache

    degrees = range(1, 5)
    with tempfile.TemporaryDirectory() as tmp:
        cache = JsonCache(tmp)
        forget_bases()
        fresh = {n: build_basis(n, limits, cache) for n in degrees}
        stored = {n: MacdonaldBasis.from_json(cache.get_json(f"macdonald-v{FORMAT_VERSION}-n{n}")) for n in degrees}
        forget_bases()
        reloaded = {n: build_basis(n, limits, cache) for n in degrees}
        forget_bases()
    got = [[stored[n][mu] for mu in partitions(n)] + [reloaded[n][mu] for mu in partitions(n)] for n in degrees]
    want = [[fresh[n][mu] for mu in partitions(n)] * 2 for n in degrees]
    return got, want


def report_cases(ctx: Context) -> list[Check]:
    return [
        _check("report-determinism", {"suite": "catalan", "m": 2, "n": 3},
               "report of a first run, timing stripped", "report of a second run, timing stripped",
               _determinism),
        _check("cache-coherence", {"max_degree": 4},
               "Macdonald bases stored in and reloaded from the cache", "freshly built bases",
               lambda: _cache_coherence(ctx.limits)),
    ]


GROUPS = (qsym_cases, llt_cases, dinv_cases, stabilization_cases, report_cases)


def build(ctx: Context) -> list[Check]:
    out = []
    for group in GROUPS:
        out.extend(group(ctx))
    return out


__all__ = ["GROUPS", "build"]
