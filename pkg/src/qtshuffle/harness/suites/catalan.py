"""Rational q,t-Catalan numbers computed four ways."""
from __future__ import annotations

from fractions import Fraction
from math import comb

from ...coeffs import specialize, swap_qt
from ...ctengine import catalan_pairing, catalan_tableaux, negut_ct_at_bound, negut_ct_stabilized
from ...ratpark import path_sum
from ..cases import CONJECTURE, OBSERVATION, PROVED, Check
from .common import Context, coprime_pairs

MAX_SUM = 8
METHODS = ("ct", "tableaux", "pairing", "paths")


def catalan_by(method: str, m: int, n: int, limits):
    if method == "ct":
        return negut_ct_stabilized(m, n, limits).value
    if method == "tableaux":
        return catalan_tableaux(m, n, limits)
    if method == "pairing":
        return catalan_pairing(m, n, limits)
    if method == "paths":
        return path_sum(m, n, limits=limits)
    raise ValueError(f"unknown Catalan method {method!r}; choose from {', '.join(METHODS)}")


def catalan_count(m: int, n: int) -> Fraction:
    return Fraction(comb(m + n, n), m + n)


def pairs(ctx: Context) -> list[tuple[int, int]]:
    sel = ctx.selection
    out = [(m, n) for m, n in coprime_pairs(MAX_SUM)
           if sel.admits({"m": m, "n": n})]
    if sel.m is not None and sel.n is not None and (sel.m, sel.n) not in out:
        out.append((sel.m, sel.n))
    return out


def agreement_cases(ctx: Context) -> list[Check]:
    lim = ctx.limits
    out = []
    for m, n in pairs(ctx):
        p = {"m": m, "n": n}
        ct = lambda m=m, n=n: catalan_by("ct", m, n, lim)  # noqa: E731
        out += [
            Check(f"catalan-ct-tableaux-{m}-{n}", "identity", PROVED, p,
                  "constant term by truncated series", "sum over standard tableaux",
                  lambda m=m, n=n, ct=ct: (ct(), catalan_by("tableaux", m, n, lim))),
            Check(f"catalan-ct-pairing-{m}-{n}", "identity", PROVED, p,
                  "constant term by truncated series", "<Q_{m,n} (-1)^n, e_n>",
                  lambda m=m, n=n, ct=ct: (ct(), catalan_by("pairing", m, n, lim))),
            Check(f"catalan-count-{m}-{n}", "identity", PROVED, p,
                  "C_{m,n}(1,1)", "binomial(m+n, n)/(m+n)",
                  lambda m=m, n=n, ct=ct: (specialize(ct(), 1, 1), catalan_count(m, n))),
            Check(f"catalan-paths-{m}-{n}", "conjecture", CONJECTURE, p,
                  "C_{m,n}(q,t)", "sum over (m,n)-Dyck paths of q^dinv t^area",
                  lambda m=m, n=n, ct=ct: (ct(), catalan_by("paths", m, n, lim))),
            Check(f"catalan-qt-symmetry-{m}-{n}", "observation", OBSERVATION, p,
                  "C_{m,n}(q,t)", "C_{m,n}(t,q)",
                  lambda ct=ct: (ct(), swap_qt(ct()))),
        ]
        if (n, m) in pairs(ctx):
            out.append(Check(
                f"catalan-transpose-{m}-{n}", "observation", OBSERVATION, p, "C_{m,n}(q,t)", "C_{n,m}(q,t)",
                lambda m=m, n=n, ct=ct: (ct(), catalan_by("ct", n, m, lim)),
            ))
    return out


def stabilized_bounds(m: int, n: int, limits):
    """The series at three larger bounds against the first stable value."""
    st = negut_ct_stabilized(m, n, limits)
    later = [negut_ct_at_bound(m, n, k * st.bound, limits) for k in (2, 4, 8)]
    return later, [st.value] * 3


def stabilization_cases(ctx: Context) -> list[Check]:
    out = []
    for m, n in pairs(ctx):
        out.append(Check(
            f"catalan-stable-{m}-{n}", "identity", PROVED, {"m": m, "n": n},
            "series at 2B, 4B, 8B", "series at the stabilization bound B",
            lambda m=m, n=n: stabilized_bounds(m, n, ctx.limits),
        ))
    return out


GROUPS = (agreement_cases, stabilization_cases)


def build(ctx: Context) -> list[Check]:
    out = []
    for group in GROUPS:
        out.extend(group(ctx))
    return out
