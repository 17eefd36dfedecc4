"""Proved identities of the operator calculus.  Every case gates."""
from __future__ import annotations

from math import comb

from ...coeffs import M, M_TILDE, QTRatio, invert_qt, q, t
from ...ctengine import above_diagonal_paths, d_chain_ct, path_ct_t, path_sum_t
from ...macdonald import build_basis, delta, en_hn_coefficients, mu_stats, nabla, nabla_inverse
from ...operators import (B_alpha, C_alpha, OpExpr, Phi, Psi, Q, N_act, S_act, apply, bracketing_pairs,
                          compositional_op, conjecture_sign, e1_perp, split)
from ...partitions import compositions, partitions
from ...ratpark import all_parks, stats
from ...symfunc.plethysm import plethysm_scalar, schur_hook_closed_form, schur_hook_eval
from ...symfunc.qsym import from_ides, qsym_coords
from ...symfunc.sym import SymF, e, h, s
from ..cases import PROVED, Check
from .common import (QT, Context, D, Dstar, bracket_ops, conj_nabla, constant, coprime_pairs,
                     hn_multiplier, hook, on_all, reversed_refinements, scaled, schur_basis, times,
                     word_op)


def _check(case_id, params, lhs, rhs, compute) -> Check:
    return Check(case_id, "identity", PROVED, params, lhs, rhs, compute)


# D_k through e_1 and D_0 ------------------------------------------------------------------

def _dk_from_d0(k: int, f: SymF, star: bool) -> SymF:
    d0 = Dstar(0) if star else D(0)
    acc = SymF.zero()
    for r in range(k + 1):
        g = f * e(1) ** (k - r)
        g = d0(g) * e(1) ** r
        sign = (-1) ** (k - r) if star else (-1) ** r
        acc = acc + g.scale(comb(k, r) * sign)
    return acc.scale((M_TILDE if star else M) ** (-k))


def d_from_d0_cases(ctx: Context) -> list[Check]:
    fns = schur_basis(3)
    out = []
    for star in (False, True):
        name = "Dstar" if star else "D"
        for k in range(1, 4):
            out.append(_check(
                f"{name.lower()}-from-{name.lower()}0-k{k}", {"k": k, "operator": name},
                f"{name}_{k} f", f"{name}_{k} via e_1 and {name}_0",
                lambda k=k, star=star: (on_all(Dstar(k) if star else D(k), fns),
                                        [_dk_from_d0(k, f, star) for f in fns]),
            ))
    return out


# the eight eigen/commutation identities ---------------------------------------------------

def formulaoper_cases(ctx: Context) -> list[Check]:
    out = []
    e1 = times(e(1))
    for n in range(1, 5):
        def hs(n=n):
            ctx.bases(n + 1)
            return [(mu, build_basis(n, ctx.limits, ctx.cache)[mu]) for mu in partitions(n)]

        def eig(star, n=n):
            pairs = hs(n)
            op = Dstar(0) if star else D(0)
            lhs = [op(H) for _, H in pairs]
            rhs = [H.scale(-(invert_qt(mu_stats(mu).D) if star else mu_stats(mu).D)) for mu, H in pairs]
            return lhs, rhs

        out.append(_check(f"d0-eigen-n{n}", {"n": n}, "D_0 H~_mu", "-D_mu(q,t) H~_mu",
                          lambda n=n: eig(False, n)))
        out.append(_check(f"d0star-eigen-n{n}", {"n": n}, "D*_0 H~_mu", "-D_mu(1/q,1/t) H~_mu",
                          lambda n=n: eig(True, n)))

        def comm(star, n=n):
            Hs = [H for _, H in hs(n)]
            lhs, rhs = [], []
            for k in range(-2, 3):
                op = Dstar(k) if star else D(k)
                nxt = Dstar(k + 1) if star else D(k + 1)
                lhs += on_all(bracket_ops(op, e1), Hs)
                rhs += on_all(scaled(nxt, -M_TILDE if star else M), Hs)
            return lhs, rhs

        out.append(_check(f"dk-e1-commutator-n{n}", {"n": n}, "[D_k, e_1] H~_mu", "M D_{k+1} H~_mu",
                          lambda n=n: comm(False, n)))
        out.append(_check(f"dkstar-e1-commutator-n{n}", {"n": n}, "[D*_k, e_1] H~_mu",
                          "-M~ D*_{k+1} H~_mu", lambda n=n: comm(True, n)))

        def conj(which, n=n):
            Hs = [H for _, H in hs(n)]
            if which == "iii":
                return on_all(conj_nabla(e1), Hs), on_all(scaled(D(1), -1), Hs)
            if which == "iii*":
                return on_all(conj_nabla(Dstar(1)), Hs), on_all(e1, Hs)
            if which == "iv":
                return [nabla_inverse(e1_perp(nabla(H))) for H in Hs], on_all(scaled(D(-1), M**-1), Hs)
            return [nabla_inverse(Dstar(-1)(nabla(H))) for H in Hs], [e1_perp(H).scale(-M_TILDE) for H in Hs]

        for which, lhs, rhs in (
            ("iii", "nabla e_1 nabla^-1", "-D_1"),
            ("iii*", "nabla D*_1 nabla^-1", "e_1"),
            ("iv", "nabla^-1 e_1^perp nabla", "(1/M) D_-1"),
            ("iv*", "nabla^-1 D*_-1 nabla", "-M~ e_1^perp"),
        ):
            slug = which.replace("*", "star")
            out.append(_check(f"nabla-conjugation-{slug}-n{n}", {"n": n}, lhs + " on H~_mu", rhs + " on H~_mu",
                              lambda which=which, n=n: conj(which, n)))
    return out


# Phi, Psi and their brackets ----------------------------------------------------------------

def phi_psi_cases(ctx: Context) -> list[Check]:
    out = []
    fns = schur_basis(2)

    def phi(k):
        ctx.bases(2 + k)
        return on_all(word_op(Phi(k), ctx.limits), fns), on_all(conj_nabla(D(k)), fns)

    def psi(k):
        ctx.bases(2 + k)
        target = scaled(conj_nabla(Dstar(k)), -(QT ** (1 - k)))
        return on_all(Psi(k, ctx.limits), fns), on_all(target, fns)

    for k in range(1, 4):
        out.append(_check(f"phi-recursion-k{k}", {"k": k}, "Phi_k by the bracket recursion",
                          "nabla D_k nabla^-1", lambda k=k: phi(k)))
        out.append(_check(f"psi-recursion-k{k}", {"k": k}, "Psi_k by the bracket recursion",
                          "-(qt)^(1-k) nabla D*_k nabla^-1", lambda k=k: psi(k)))
    return out


def dd_star_cases(ctx: Context) -> list[Check]:
    """(1/M)[D_a, D*_b] acts as multiplication by (qt)^b/(qt-1) h_n[(1-qt)x/qt]."""
    out = []
    fns = schur_basis(2)
    for n in range(1, 5):
        for b in range(-2, n + 3):
            a = n - b

            def compute(a=a, b=b, n=n):
                lhs = on_all(scaled(bracket_ops(D(a), Dstar(b)), M**-1), fns)
                g = hn_multiplier(n).scale(QT ** (b - 1))
                return lhs, on_all(times(g), fns)

            out.append(_check(f"d-dstar-bracket-a{a}-b{b}", {"a": a, "b": b, "n": n},
                              "(1/M)(D_a D*_b - D*_b D_a) f", "(qt)^b/(qt-1) h_n[(1-qt)x/qt] f", compute))
    return out


def psi_phi_bracket_cases(ctx: Context) -> list[Check]:
    out = []
    fns = schur_basis(2)
    for n in range(2, 5):
        for a in range(1, n):
            b = n - a

            def compute(a=a, b=b, n=n):
                ctx.bases(2 + n)
                phi = word_op(Phi(a), ctx.limits)
                lhs = on_all(scaled(bracket_ops(Psi(b, ctx.limits), phi), M**-1), fns)
                return lhs, on_all(conj_nabla(times(hn_multiplier(n))), fns)

            out.append(_check(f"psi-phi-bracket-a{a}-b{b}", {"a": a, "b": b, "n": n},
                              "(1/M)[Psi_b, Phi_a] f", "(qt/(qt-1)) nabla h_n[(1-qt)x/qt] nabla^-1 f", compute))
    return out


def d_chain_cases(ctx: Context) -> list[Check]:
    out = []
    fns = schur_basis(2)
    letters = (-1, 0, 1, 2)
    chains = [(a,) for a in letters]
    chains += [(a, b) for a in letters for b in letters]
    chains += [(a, b, c) for a in letters for b in letters for c in letters if a + b + c >= 0]
    for alpha in chains:
        def compute(alpha=alpha):
            word = OpExpr.word(*reversed(alpha))
            return [d_chain_ct(alpha, f) for f in fns], [apply(word, f, ctx.limits) for f in fns]

        out.append(_check(f"d-chain-constant-term-{'_'.join(map(str, alpha))}", {"alpha": list(alpha)},
                          "constant term of the chain integrand", "D_{a_m} ... D_{a_1} f", compute))
    return out


# the SL2 action and the Q operators --------------------------------------------------------

def _q_op(m: int, n: int, limits):
    if m == 0 and n == 1:
        return times(-e(1))
    return word_op(Q(m, n, limits), limits)


def q_cases(ctx: Context) -> list[Check]:
    out = []
    fns = schur_basis(2)
    lim = ctx.limits
    for m, n in [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)]:
        def nabla_conj(m=m, n=n):
            ctx.bases(2 + n)
            return on_all(_q_op(m + n, n, lim), fns), on_all(conj_nabla(_q_op(m, n, lim)), fns)

        out.append(_check(f"q-nabla-conjugation-{m}-{n}", {"m": m, "n": n}, "Q_{m+n,n}",
                          "nabla Q_{m,n} nabla^-1", nabla_conj))
    for k in range(1, 4):
        def phi_eq(k=k):
            return on_all(_q_op(k + 1, k, lim), fns), on_all(word_op(Phi(k), lim), fns)

        def psi_eq(k=k):
            ctx.bases(2 + k)
            return on_all(_q_op(k - 1, k, lim), fns), on_all(Psi(k, lim), fns)

        out.append(_check(f"q-equals-phi-k{k}", {"k": k}, "Q_{k+1,k}", "Phi_k", phi_eq))
        out.append(_check(f"q-equals-psi-k{k}", {"k": k}, "Q_{k-1,k}", "Psi_k", psi_eq))
    for n in range(2, 5):
        for a in range(1, n):
            b = n - a

            def bracket_hn(a=a, b=b, n=n):
                # the bracket in the order [Q_{a-1,a}, Q_{b+1,b}] gives the multiplier;
                # the reversed order gives its negative
                ctx.bases(2 + n)
                psi, phi = _q_op(a - 1, a, lim), _q_op(b + 1, b, lim)
                target = on_all(conj_nabla(times(hn_multiplier(n))), fns)
                direct = on_all(scaled(bracket_ops(psi, phi), M**-1), fns)
                reverse = on_all(scaled(bracket_ops(phi, psi), M**-1), fns)
                return [direct, reverse], [target, [-x for x in target]]

            out.append(_check(f"q-bracket-hn-a{a}-b{b}", {"a": a, "b": b, "n": n},
                              "(1/M)[Q_{a-1,a}, Q_{b+1,b}] and (1/M)[Q_{b+1,b}, Q_{a-1,a}]",
                              "(qt/(qt-1)) nabla h_n[(1-qt)x/qt] nabla^-1 and its negative", bracket_hn))
    return out


def _gamma_word(gamma) -> list[str]:
    """Write a matrix of SL2 with non-negative entries as a product of N and S."""
    (a, c), (b, d) = gamma
    out = []
    while (a, b, c, d) != (1, 0, 0, 1):
        if a >= b and c >= d:
            out.append("N")
            a, c = a - b, c - d
        elif b >= a and d >= c:
            out.append("S")
            b, d = b - a, d - c
        else:
            raise ValueError(f"matrix {gamma} is not a product of N and S")
    return out


def _gamma_act(gamma, x: OpExpr) -> OpExpr:
    for g in reversed(_gamma_word(gamma)):
        x = N_act(x) if g == "N" else S_act(x)
    return x


def qkk_cases(ctx: Context) -> list[Check]:
    out = []
    lim = ctx.limits
    fns = schur_basis(2)
    for k in range(1, 4):
        def qkk(k=k):
            ctx.bases(2 + k)
            return on_all(_q_op(k, k, lim), fns), on_all(conj_nabla(times(hn_multiplier(k))), fns)

        out.append(_check(f"qkk-nabla-hk-k{k}", {"k": k}, "Q_{k,k}",
                          "(qt/(qt-1)) nabla h_k[(1-qt)x/qt] nabla^-1", qkk))
    small = [(1, 1, 2), (1, 1, 3), (1, 2, 2), (2, 1, 2), (1, 3, 2), (3, 1, 2)]
    for m, n, k in small:
        fns_mn = schur_basis(1)

        def u_indep(m=m, n=n, k=k):
            ref = on_all(_q_op(k * m, k * n, lim), fns_mn)
            ways = []
            for left, right in bracketing_pairs(m, n, k):
                op = scaled(bracket_ops(_q_op(*left, lim), _q_op(*right, lim)), M**-1)
                ways.append(on_all(op, fns_mn))
            return ways, [ref] * k

        def gamma(m=m, n=n, k=k):
            sp = split(m, n)
            x = _gamma_act(sp.gamma(), Q(k, k, lim))
            return on_all(word_op(x, lim), fns_mn), on_all(_q_op(k * m, k * n, lim), fns_mn)

        params = {"m": m, "n": n, "k": k}
        out.append(_check(f"q-bracketings-agree-{m}-{n}-{k}", params,
                          "the k bracketings of Q_{km,kn}", "Q_{km,kn} by the SL2 recursion", u_indep))
        out.append(_check(f"q-gamma-image-{m}-{n}-{k}", params, "Gamma Q_{k,k}", "Q_{km,kn}", gamma))
    for m, n in [(1, 1), (1, 2), (2, 1)]:
        def commute(m=m, n=n):
            a, b = _q_op(m, n, lim), _q_op(2 * m, 2 * n, lim)
            fs = schur_basis(1)
            return on_all(lambda f: a(b(f)), fs), on_all(lambda f: b(a(f)), fs)

        out.append(_check(f"q-commuting-{m}-{n}", {"m": m, "n": n}, "Q_{m,n} Q_{2m,2n}",
                          "Q_{2m,2n} Q_{m,n}", commute))
    return out


# Q_{n,n} and its brackets -----------------------------------------------------------------

def qnn_cases(ctx: Context) -> list[Check]:
    out = []
    lim = ctx.limits
    for n in range(1, 6):
        sign = constant((-1) ** n)

        def a(n=n, sign=sign):
            ctx.bases(n)
            return apply(Q(n + 1, n, lim), sign, lim), nabla(e(n))

        def b(n=n, sign=sign):
            ctx.bases(n)
            val = apply(Q(n, n, lim), sign, lim)
            mid = nabla(delta(e(1), h(n))).scale((-QT) ** (1 - n))
            return [val, val], [mid, delta(e(n - 1), e(n))]

        out.append(_check(f"q-n1n-nabla-en-n{n}", {"n": n}, "Q_{n+1,n} (-1)^n", "nabla e_n", a))
        out.append(_check(f"q-nn-delta-n{n}", {"n": n}, "Q_{n,n} (-1)^n",
                          "(-qt)^(1-n) nabla Delta_{e_1} h_n and Delta_{e_{n-1}} e_n", b))
    return out


def schur_cases(ctx: Context) -> list[Check]:
    out = []
    monomials = {"q": q, "t": t, "qt": QT, "q^2t": q * q * t, "qt^3": q * t**3}
    for n in range(1, 7):
        def hooks(n=n):
            lhs, rhs = [], []
            for m in monomials.values():
                for lam in partitions(n):
                    lhs.append(schur_hook_eval(lam, m))
                    rhs.append(schur_hook_closed_form(lam, m))
            return lhs, rhs

        def mult(n=n):
            rhs = SymF.zero()
            for k in range(n):
                rhs = rhs + s(hook(n, k)).scale((-QT) ** k)
            return hn_multiplier(n), rhs.scale(-(QT ** (1 - n)))

        def delta_hn(n=n):
            ctx.bases(n)
            rhs = SymF.zero()
            for k in range(n):
                rhs = rhs + s(hook(n, k)).scale((-QT) ** k)
            return delta(e(1), h(n)), rhs

        out.append(_check(f"schur-at-one-minus-monomial-n{n}", {"n": n}, "s_lam[1-m]",
                          "(-m)^k (1-m) on hooks, 0 otherwise", hooks))
        out.append(_check(f"hn-multiplier-hooks-n{n}", {"n": n}, "(qt/(qt-1)) h_n[(1-qt)x/qt]",
                          "-(qt)^(1-n) sum (-qt)^k s_{n-k,1^k}", mult))
        out.append(_check(f"delta-e1-hn-n{n}", {"n": n}, "Delta_{e_1} h_n", "sum (-qt)^k s_{n-k,1^k}",
                          delta_hn))
    for n in range(1, 6):
        def expansions(n=n):
            basis = build_basis(n, ctx.limits, ctx.cache)
            en, hn = en_hn_coefficients(n)
            sign = (-QT) ** (n - 1)
            hn_printed = {mu: sign * M * invert_qt(mu_stats(mu).B) * mu_stats(mu).Pi / mu_stats(mu).w
                          for mu in partitions(n)}
            return [basis.assemble(en), basis.assemble(hn_printed), hn], [e(n), h(n), hn_printed]

        def tb(n=n):
            lhs = [mu_stats(mu).T * invert_qt(mu_stats(mu).B) for mu in partitions(n)]
            rhs = [plethysm_scalar(e(n - 1), mu_stats(mu).B) for mu in partitions(n)]
            return lhs, rhs

        out.append(_check(f"en-hn-macdonald-expansion-n{n}", {"n": n}, "sum of closed coefficients times H~_mu",
                          "e_n and h_n", expansions))
        out.append(_check(f"t-times-b-inverse-n{n}", {"n": n}, "T_mu B_mu(1/q,1/t)", "e_{n-1}[B_mu]", tb))
    return out


# compositional creation operators ---------------------------------------------------------------

def _hook_combination(a: int, b: int) -> SymF:
    x = -1 / q
    out = s(hook(a + b, b)).scale(x ** (a - 1))
    if b >= 1:
        out = out - s(hook(a + b, b - 1)).scale(x**a)
    return out


def compositional_cases(ctx: Context) -> list[Check]:
    out = []
    for n in range(2, 7):
        for a in range(1, n):
            b = n - a

            def ce(a=a, b=b, n=n):
                via_b = C_alpha((a,), B_alpha((b,)))
                via_e = C_alpha((a,), e(b))
                total = SymF.zero()
                for beta in compositions(b):
                    total = total + C_alpha((a,) + beta)
                target = _hook_combination(a, b)
                return [via_b, via_e, total], [target] * 3

            out.append(_check(f"c-a-e-b-hooks-a{a}-b{b}", {"a": a, "b": b},
                              "C_a B_b 1, C_a e_b and sum_beta C_a C_beta 1",
                              "(-1/q)^(a-1) s_{a,1^b} - (-1/q)^a s_{1+a,1^(b-1)}", ce))
    for b in range(1, 6):
        out.append(_check(f"b-on-one-b{b}", {"b": b}, "B_b 1", "e_b",
                          lambda b=b: (B_alpha((b,)), e(b))))
    for n in range(1, 6):
        def i7(n=n):
            total = SymF.zero()
            for alpha in compositions(n):
                total = total + C_alpha(alpha)
            return total, e(n)

        out.append(_check(f"sum-c-alpha-en-n{n}", {"n": n}, "sum_alpha C_alpha 1", "e_n", i7))
    fns = schur_basis(2)
    for b in range(1, 4):
        for size in range(1, 5 - b):
            for gamma in compositions(size):
                def bc(b=b, gamma=gamma):
                    lhs = [B_alpha((b,), C_alpha(gamma, f)) for f in fns]
                    rhs = [C_alpha(gamma, B_alpha((b,), f)).scale(q ** len(gamma)) for f in fns]
                    return lhs, rhs

                out.append(_check(f"b-c-commutation-b{b}-{'_'.join(map(str, gamma))}",
                                  {"b": b, "gamma": list(gamma)}, "B_b C_gamma f",
                                  "q^l(gamma) C_gamma B_b f", bc))
    for k in range(1, 5):
        for beta in compositions(k):
            def b_expansion(beta=beta):
                total = SymF.zero()
                for alpha, c in reversed_refinements(beta):
                    total = total + C_alpha(alpha).scale(q**c)
                return B_alpha(beta), total

            out.append(_check(f"b-beta-expansion-{'_'.join(map(str, beta))}", {"beta": list(beta), "k": k},
                              "B_beta 1", "sum over reversed refinements q^c C_alpha 1", b_expansion))
    return out


def ret_cases(ctx: Context) -> list[Check]:
    out = []
    lim = ctx.limits
    for n in range(1, 5):
        def compute(n=n):
            val = apply(Q(n, n, lim), constant((-1) ** n), lim)
            pairs = []
            for pf in all_parks(1, 1, n, lim):
                st = stats(pf)
                ret_t = sum((t**i for i in range(st.ret)), QTRatio(0))
                pairs.append((st.ides, ret_t * t ** (st.area - st.ret + 1) * q**st.dinv))
            return qsym_coords(val, n), from_ides(n, pairs)

        out.append(_check(f"q-nn-return-statistic-n{n}", {"n": n}, "Q_{n,n} (-1)^n in fundamental coordinates",
                          "sum [ret]_t t^(area-ret+1) q^dinv F_ides", compute))
    return out


def path_ct_cases(ctx: Context) -> list[Check]:
    out = []
    for u in range(1, 5):
        for v in range(1, 5):
            def compute(u=u, v=v):
                paths = above_diagonal_paths(u, v)
                return ([path_ct_t(g, ctx.limits) for g in paths], [path_sum_t(g) for g in paths])

            out.append(_check(f"path-constant-term-{u}x{v}", {"u": u, "v": v},
                              "constant term of Omega[z]/z_gamma times the t-chain",
                              "sum over delta >= gamma of t^area(delta/gamma)", compute))
    return out


def sign_cases(ctx: Context) -> list[Check]:
    out = []
    lim = ctx.limits
    for m, n in coprime_pairs(7):
        def compute(m=m, n=n):
            x = compositional_op("e", None, m, n, 1, lim)
            return (apply(x, constant(conjecture_sign(n, 1)), lim),
                    apply(Q(m, n, lim), constant((-1) ** n), lim))

        out.append(_check(f"k1-sign-consistency-{m}-{n}", {"m": m, "n": n, "k": 1},
                          "e_{m,n} (-1)^(n+1)", "Q_{m,n} (-1)^n", compute))
    return out


GROUPS = (
    d_from_d0_cases, formulaoper_cases, phi_psi_cases, dd_star_cases, psi_phi_bracket_cases,
    d_chain_cases, q_cases, qkk_cases, qnn_cases, schur_cases, compositional_cases, ret_cases,
    path_ct_cases, sign_cases,
)


def build(ctx: Context) -> list[Check]:
    out = []
    for group in GROUPS:
        out.extend(group(ctx))
    return out
