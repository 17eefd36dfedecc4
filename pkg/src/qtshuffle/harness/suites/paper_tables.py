"""Printed values reproduced exactly and compared against the packaged golden files."""
from __future__ import annotations

from ...coeffs import parse, specialize, specialize_q
from ...operators import Q, algF_expand, apply_tree, basis_up_to, bracketing_pairs, bracketing_tree, e_operator_value, split
from ...ratpark import enum_paths, path_sum
from ...symfunc.sym import e, hall, s
from .. import goldens
from ..cases import PROVED, Check
from .common import Context

# the (12,8) bracketings raise degree by 12, above the default cap
BRACKETING_LIMITS = {"degree_cap": 15, "mn_cap": 20}


def _check(case_id, params, lhs, rhs, compute) -> Check:
    return Check(case_id, "identity", PROVED, params, lhs, rhs, compute)


def _e36(ctx: Context):
    return e_operator_value(1, 2, 3, ctx.limits)


def q_word_cases(ctx: Context) -> list[Check]:
    data = goldens.load("q35_word", ctx.golden_dir)
    m, n = data["op"]
    return [_check(
        f"golden-q-word-{m}-{n}", {"m": m, "n": n}, f"Q({m},{n}) word expansion", "golden q35_word",
        lambda: (Q(m, n, ctx.limits), goldens.word_expansion(data)),
    )]


def split_cases(ctx: Context) -> list[Check]:
    data = goldens.load("splits", ctx.golden_dir)
    out = []
    for item in data["splits"]:
        m, n = item["pair"]
        out.append(_check(
            f"golden-split-{m}-{n}", {"m": m, "n": n}, f"split({m},{n})", "golden splits",
            lambda m=m, n=n, want=(item["ab"], item["cd"]): (
                [list(split(m, n).ab), list(split(m, n).cd)], [list(x) for x in want]),
        ))
    for item in data["multi"]:
        m, n, k = item["m"], item["n"], item["k"]
        out.append(_check(
            f"golden-multi-split-{m}-{n}-{k}", {"m": m, "n": n, "k": k},
            f"the {k} splits of ({k * m},{k * n})", "golden splits",
            lambda m=m, n=n, k=k, want=item["pairs"]: (
                [[list(right), list(left)] for left, right in bracketing_pairs(m, n, k)], want),
        ))
        out.append(_check(
            f"bracketings-agree-{k * m}-{k * n}", {"m": m, "n": n, "k": k, "max_degree": 3},
            f"the {k} bracketings of Q({k * m},{k * n}) on s_lam, |lam| <= 3", "one another",
            lambda m=m, n=n, k=k: _bracketings(ctx, m, n, k, 3),
        ))
    return out


def _bracketings(ctx: Context, m: int, n: int, k: int, degree: int):
    caps = {key: max(getattr(ctx.limits, key), value) for key, value in BRACKETING_LIMITS.items()}
    lim = ctx.limits.with_(**caps)
    trees = [bracketing_tree(m, n, k, u) for u in range(1, k + 1)]
    lhs, rhs = [], []
    for _, f in basis_up_to(degree):
        vals = [apply_tree(x, f, lim) for x in trees]
        lhs.append(vals[1:])
        rhs.append([vals[0]] * (k - 1))
    return lhs, rhs


def e36_cases(ctx: Context) -> list[Check]:
    schur = goldens.load("e36_schur", ctx.golden_dir)
    pairs = goldens.load("e36_pairings", ctx.golden_dir)
    f = lambda: _e36(ctx)  # noqa: E731
    out = [_check(
        "golden-e36-schur", {"m": 1, "n": 2, "k": 3}, "e_{3,6} . (-1) in the Schur basis", "golden e36_schur",
        lambda: (f(), goldens.symf(schur)),
    )]
    out.append(_check(
        "golden-e36-hilbert", {"m": 1, "n": 2, "k": 3}, "<e_{3,6} . (-1), e_1^6>", "golden hilbert",
        lambda: (hall(f(), e(1) ** 6), parse(pairs["hilbert"])),
    ))
    out.append(_check(
        "golden-e36-hilbert-q1", {"m": 1, "n": 2, "k": 3}, "<e_{3,6} . (-1), e_1^6> at q = 1", "golden hilbert_q1",
        lambda: (specialize_q(hall(f(), e(1) ** 6), 1), parse(pairs["hilbert_q1"])),
    ))
    out.append(_check(
        "golden-e36-hilbert-value", {"m": 1, "n": 2, "k": 3}, "<e_{3,6} . (-1), e_1^6> at q = t = 1",
        "golden hilbert_value",
        lambda: (int(specialize(hall(f(), e(1) ** 6), 1, 1)), pairs["hilbert_value"]),
    ))
    alt = lambda: hall(f(), s((1,) * 6))  # noqa: E731
    out.append(_check(
        "golden-e36-alternants", {"m": 1, "n": 2, "k": 3}, "<e_{3,6} . (-1), s_{1^6}>", "golden alternants",
        lambda: (alt(), parse(pairs["alternants"])),
    ))
    out.append(_check(
        "golden-e36-alternants-value", {"m": 1, "n": 2, "k": 3}, "<e_{3,6} . (-1), s_{1^6}> at q = t = 1",
        "golden alternants_value",
        lambda: (int(specialize(alt(), 1, 1)), pairs["alternants_value"]),
    ))
    out.append(_check(
        "e36-alternants-path-sum", {"m": 1, "n": 2, "k": 3}, "<e_{3,6} . (-1), s_{1^6}>",
        "sum over (3,6)-Dyck paths of q^dinv t^area",
        lambda: (alt(), path_sum(1, 2, 3, limits=ctx.limits)),
    ))
    out.append(_check(
        "golden-e36-path-count", {"m": 1, "n": 2, "k": 3}, "number of (3,6)-Dyck paths", "golden dyck_paths",
        lambda: (len(enum_paths(1, 2, 3, ctx.limits)), pairs["dyck_paths"]),
    ))
    return out


def algf_cases(ctx: Context) -> list[Check]:
    data = goldens.load("e3_algF", ctx.golden_dir)
    return [_check(
        "golden-e3-algF", {"k": 3}, "e_3 in the basis h_lam[x;q,t]", "golden e3_algF",
        lambda: (algF_expand(e(3)), goldens.coefficients(data)),
    )]


GROUPS = (q_word_cases, split_cases, e36_cases, algf_cases)


def build(ctx: Context) -> list[Check]:
    out = []
    for group in GROUPS:
        out.extend(group(ctx))
    return out
