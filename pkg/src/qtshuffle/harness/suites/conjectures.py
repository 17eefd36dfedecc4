"""Conjectured identities.  Mismatches are recorded as findings and never gate."""
from __future__ import annotations

from math import gcd

from ...coeffs import q, render, t
from ...ctengine import above_diagonal_paths, conjV_check
from ...macdonald import nabla
from ...operators import (C_alpha, Q, apply, apply_to_sign, build_F, compositional_op, conjecture_sign)
from ...partitions import compositions, partitions
from ...ratpark import Filter, all_parks, hikita_sum, pairing_rhs
from ...symfunc.qsym import QSymCoords, qsym_coords
from ...symfunc.sym import SymF, e, h, hall, schur_negative_terms
from ..cases import CONJECTURE, Check
from .common import Context, constant, coprime_pairs, reversed_refinements

CLASSICAL_MAX = 4
GN_MAX_SUM = 8
COMPOSITIONAL = ((1, 1, 2), (1, 1, 3), (1, 2, 2), (2, 1, 2), (1, 2, 3))
CONJ_V_LATTICE = (3, 4)
POSITIVITY_MAX_DEGREE = 6


def _check(case_id, params, lhs, rhs, compute, compare=None) -> Check:
    return Check(case_id, "conjecture", CONJECTURE, params, lhs, rhs, compute, compare)


def _label(seq) -> str:
    return "_".join(map(str, seq))


# classical and HMZ ------------------------------------------------------------------------

def classical_cases(ctx: Context) -> list[Check]:
    out = []
    for n in range(1, CLASSICAL_MAX + 1):
        count = len(all_parks(1, 1, n, ctx.limits))

        def nabla_en(n=n):
            ctx.bases(n)
            return nabla(e(n))

        out.append(_check(
            f"shuffle-classical-n{n}", {"n": n, "parking_functions": count},
            "nabla e_n in fundamental coordinates", "sum over parking functions t^area q^dinv F_ides",
            lambda n=n, f=nabla_en: (qsym_coords(f(), n), hikita_sum(1, 1, n, limits=ctx.limits)),
        ))
        for mu in partitions(n):
            out.append(_check(
                f"shuffle-classical-n{n}-h{_label(mu)}", {"n": n, "mu": list(mu)},
                "<nabla e_n, h_mu>", "parking functions whose word is a shuffle of blocks mu",
                lambda n=n, mu=mu, f=nabla_en: (hall(f(), h(mu)), pairing_rhs(1, 1, n, Filter(), mu, ctx.limits)),
            ))
    return out


def hmz_cases(ctx: Context) -> list[Check]:
    out = []
    for n in range(1, CLASSICAL_MAX + 1):
        for alpha in compositions(n):
            def compute(n=n, alpha=alpha):
                ctx.bases(n)
                return (qsym_coords(nabla(C_alpha(alpha)), n),
                        hikita_sum(1, 1, n, filt=Filter.hits_exactly(alpha), limits=ctx.limits))

            out.append(_check(
                f"hmz-{_label(alpha)}", {"n": n, "alpha": list(alpha)},
                "nabla C_alpha 1", "parking functions with diagonal composition alpha", compute,
            ))
    return out


# rational and compositional -------------------------------------------------------------

def gn_cases(ctx: Context) -> list[Check]:
    out = []
    lim = ctx.limits
    for m, n in coprime_pairs(GN_MAX_SUM):
        out.append(_check(
            f"gn-{m}-{n}", {"m": m, "n": n, "k": 1},
            "Q_{m,n} (-1)^n", "Hikita polynomial H_{m,n}",
            lambda m=m, n=n: (qsym_coords(apply(Q(m, n, lim), constant((-1) ** n), lim), n),
                              hikita_sum(m, n, limits=lim)),
        ))
    return out


def _op_side(kind: str, data, m: int, n: int, k: int, lim) -> QSymCoords:
    x = compositional_op(kind, data, m, n, k, lim)
    return qsym_coords(apply_to_sign(x, conjecture_sign(n, k), lim), k * n)


def compositional_triples(ctx: Context) -> list[tuple[int, int, int]]:
    out = list(COMPOSITIONAL)
    sel = ctx.selection
    if None not in (sel.m, sel.n, sel.k) and (sel.m, sel.n, sel.k) not in out:
        out.append((sel.m, sel.n, sel.k))
    return out


def compositional_cases(ctx: Context) -> list[Check]:
    out = []
    lim = ctx.limits
    for m, n, k in compositional_triples(ctx):
        base = {"m": m, "n": n, "k": k}
        out.append(_check(
            f"compositional-e-{m}-{n}-{k}", base,
            "e_{km,kn} (-1)^{k(n+1)}", "all (km,kn) parking functions",
            lambda m=m, n=n, k=k: (_op_side("e", None, m, n, k, lim), hikita_sum(m, n, k, limits=lim)),
        ))
        for r in range(1, k + 1):
            out.append(_check(
                f"compositional-E{r}-{m}-{n}-{k}", {**base, "r": r},
                "E^r_{km,kn} (-1)^{k(n+1)}", f"parking functions hitting the diagonal {r} times",
                lambda m=m, n=n, k=k, r=r: (_op_side("E", r, m, n, k, lim),
                                            hikita_sum(m, n, k, Filter.hits_count(r), lim)),
            ))
        for alpha in compositions(k):
            out.append(_check(
                f"compositional-C{_label(alpha)}-{m}-{n}-{k}", {**base, "alpha": list(alpha)},
                "C^(alpha)_{km,kn} (-1)^{k(n+1)}", "parking functions with diagonal composition alpha",
                lambda m=m, n=n, k=k, alpha=alpha: (_op_side("C", alpha, m, n, k, lim),
                                                    hikita_sum(m, n, k, Filter.hits_exactly(alpha), lim)),
            ))
    return out


def _b_rhs(m: int, n: int, k: int, beta, lim) -> QSymCoords:
    acc = QSymCoords(k * n)
    for alpha, c in reversed_refinements(beta):
        acc = acc + hikita_sum(m, n, k, Filter.hits_exactly(alpha), lim).scale(q**c)
    return acc


def b_version_cases(ctx: Context) -> list[Check]:
    out = []
    lim = ctx.limits
    for m, n, k in compositional_triples(ctx):
        for beta in compositions(k):
            out.append(_check(
                f"compositional-B{_label(beta)}-{m}-{n}-{k}", {"m": m, "n": n, "k": k, "alpha": list(beta)},
                "B^(beta)_{km,kn} (-1)^{k(n+1)}",
                "sum over reversed refinements alpha of q^c(alpha,beta) times the alpha parking functions",
                lambda m=m, n=n, k=k, beta=beta: (_op_side("B", beta, m, n, k, lim), _b_rhs(m, n, k, beta, lim)),
            ))
    return out


# paths above a fixed path ------------------------------------------------------------------

def conj_v_cases(ctx: Context) -> list[Check]:
    out = []
    top_u, top_v = CONJ_V_LATTICE
    for u in range(1, top_u + 1):
        for v in range(1, top_v + 1):
            for gamma in above_diagonal_paths(u, v):
                def compute(u=u, v=v, gamma=gamma):
                    rep = conjV_check(u, v, gamma, ctx.limits)
                    return rep.lhs, rep.rhs

                out.append(_check(
                    f"paths-above-{u}x{v}-{_label(gamma.e)}", {"u": u, "v": v, "gamma": list(gamma.e)},
                    "constant term with the qt-chain and Omega[-M z_j/z_i] factors",
                    "sum over delta >= gamma of t^area(delta/gamma) q^dinv(delta)", compute,
                ))
    return out


# Schur positivity -----------------------------------------------------------------------

def e_value(a: int, b: int, lim) -> SymF:
    """e_{a,b} applied to its conjecture sign (-1)^{g(b/g + 1)}, g = gcd(a, b)."""
    g = gcd(a, b)
    x = build_F(e(g), a // g, b // g, lim)
    return apply(x, constant(conjecture_sign(b // g, g)), lim)


def points_between(a: int, b: int) -> int:
    """Lattice points (x, y), 0 < y < b, with a y < b x <= (a + 1) y: those strictly past the
    (a,b) diagonal and weakly inside the (a+1,b) diagonal, top row excluded."""
    return sum(1 for y in range(1, b) for x in range(a + 2) if a * y < b * x <= (a + 1) * y)


def cells_above(a: int, b: int) -> int:
    """Unit cells of the a x b rectangle lying entirely above its diagonal."""
    return sum(1 for i in range(a) for j in range(b) if (i + 1) * b <= j * a)


def area_between(a: int, c: int, b: int) -> int:
    """Cells between the (a,b) and (c,b) diagonals, a <= c."""
    return cells_above(c, b) - cells_above(a, b)


def _positive(diff: SymF, _unused) -> str | None:
    bad = schur_negative_terms(diff)
    if not bad:
        return None
    lam = bad[0]
    return f"coefficient of s{list(lam)} is {render(diff.coefficient('s', lam))}"


def positivity_triples(limits, max_degree: int = POSITIVITY_MAX_DEGREE) -> list[tuple[int, int, int]]:
    """(k, m, n) with kn <= max_degree and the larger operator within the m+n cap."""
    out = []
    for k in range(1, max_degree + 1):
        for m, n in coprime_pairs(max_degree + 1):
            if k * n <= min(max_degree, limits.degree_cap) and k * (m + n) + 1 <= limits.mn_cap:
                out.append((k, m, n))
    return sorted(out, key=lambda x: (x[0] * x[2], x))


def schur_positivity_scan(triples, limits) -> list[Check]:
    out = []
    for k, m, n in triples:
        a, b = k * m, k * n
        d = points_between(a, b)
        out.append(Check(
            f"positivity-step-{k}-{m}-{n}", "conjecture", CONJECTURE, {"m": m, "n": n, "k": k, "d": d},
            f"e_{{{a + 1},{b}}} - t^{d} e_{{{a},{b}}}", "Schur positive",
            lambda a=a, b=b, d=d: (e_value(a + 1, b, limits) - e_value(a, b, limits).scale(t**d), None),
            _positive,
        ))
        if m <= n:
            area = area_between(a, b, b)
            out.append(Check(
                f"positivity-square-{k}-{m}-{n}", "conjecture", CONJECTURE, {"m": m, "n": n, "k": k, "a": area},
                f"e_{{{b},{b}}} - t^{area} e_{{{a},{b}}}", "Schur positive",
                lambda a=a, b=b, area=area: (e_value(b, b, limits) - e_value(a, b, limits).scale(t**area), None),
                _positive,
            ))
    return out


def positivity_cases(ctx: Context) -> list[Check]:
    return schur_positivity_scan(positivity_triples(ctx.limits), ctx.limits)


GROUPS = (classical_cases, hmz_cases, gn_cases, compositional_cases, b_version_cases, conj_v_cases,
          positivity_cases)


def build(ctx: Context) -> list[Check]:
    out = []
    for group in GROUPS:
        out.extend(group(ctx))
    return out
