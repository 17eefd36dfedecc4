"""The modified Macdonald basis: characterization and small values."""
from __future__ import annotations

from ...coeffs import ZERO, q, swap_qt, t
from ...macdonald import build_basis, en_hn_coefficients, modified_schur_coords, mu_stats
from ...partitions import conjugate, dominates, partitions
from ...symfunc.plethysm import plethysm_linear
from ...symfunc.sym import SymF, e, star
from ..cases import PROVED, Check
from .common import Context

MAX_DEGREE = 5

# Schur expansions for n <= 3, written out by hand from the q,t-Kostka tables
SMALL_VALUES = {
    (1,): {(1,): 1},
    (2,): {(2,): 1, (1, 1): q},
    (1, 1): {(2,): 1, (1, 1): t},
    (3,): {(3,): 1, (2, 1): q + q**2, (1, 1, 1): q**3},
    (2, 1): {(3,): 1, (2, 1): q + t, (1, 1, 1): q * t},
    (1, 1, 1): {(3,): 1, (2, 1): t + t**2, (1, 1, 1): t**3},
}


def _check(case_id, params, lhs, rhs, compute) -> Check:
    return Check(case_id, "identity", PROVED, params, lhs, rhs, compute)


def _basis(ctx: Context, n: int):
    return build_basis(n, ctx.limits, ctx.cache)


def _gram(ctx: Context, n: int):
    basis = _basis(ctx, n)
    parts = partitions(n)
    got = {(lam, mu): star(basis[lam], basis[mu]) for lam in parts for mu in parts}
    want = {(lam, mu): mu_stats(mu).w if lam == mu else ZERO for lam in parts for mu in parts}
    return got, want


def _outside(coords, allowed) -> list:
    return sorted(lam for lam in coords if not allowed(lam))


def _triangular(ctx: Context, n: int, side: str):
    basis = _basis(ctx, n)
    got, want = {}, {}
    for mu in partitions(n):
        if side == "t":
            coords = modified_schur_coords(basis[mu], n)
            top = mu
        else:
            coords = plethysm_linear(basis[mu], q - 1).to_basis("s")
            top = conjugate(mu)
        got[mu] = _outside(coords, lambda lam, top=top: dominates(top, lam))
        want[mu] = []
    return got, want


def _swap_symmetry(ctx: Context, n: int):
    basis = _basis(ctx, n)
    got = {mu: basis[mu].map_coefficients(swap_qt) for mu in partitions(n)}
    want = {mu: basis[conjugate(mu)] for mu in partitions(n)}
    return got, want


def _normalized(ctx: Context, n: int):
    basis = _basis(ctx, n)
    return ({mu: basis[mu].coefficient("s", (n,)) for mu in partitions(n)},
            {mu: 1 for mu in partitions(n)})


def _reassembles(ctx: Context, n: int):
    basis = _basis(ctx, n)
    en, hn = en_hn_coefficients(n)
    return [basis.assemble(en), basis.assemble(hn)], [e(n), SymF.from_basis("h", {(n,): 1})]


def characterization_cases(ctx: Context) -> list[Check]:
    out = []
    for n in range(1, MAX_DEGREE + 1):
        p = {"n": n}
        out += [
            _check(f"macdonald-orthogonal-n{n}", p, "<H~_lam, H~_mu>_*", "delta_{lam,mu} w_mu",
                   lambda n=n: _gram(ctx, n)),
            _check(f"macdonald-triangular-t-n{n}", p, "Schur support of H~_mu[x(t-1)]", "lam <= mu",
                   lambda n=n: _triangular(ctx, n, "t")),
            _check(f"macdonald-triangular-q-n{n}", p, "Schur support of H~_mu[x(q-1)]", "lam <= mu'",
                   lambda n=n: _triangular(ctx, n, "q")),
            _check(f"macdonald-normalized-n{n}", p, "<H~_mu, s_n>", "1", lambda n=n: _normalized(ctx, n)),
            _check(f"macdonald-swap-n{n}", p, "H~_mu(t,q)", "H~_mu'(q,t)", lambda n=n: _swap_symmetry(ctx, n)),
            _check(f"macdonald-reassemble-n{n}", p, "e_n and h_n from their H~ coordinates", "e_n, h_n",
                   lambda n=n: _reassembles(ctx, n)),
        ]
    return out


def small_value_cases(ctx: Context) -> list[Check]:
    out = []
    for mu, coeffs in SMALL_VALUES.items():
        n = sum(mu)
        label = "".join(map(str, mu))
        out.append(_check(
            f"macdonald-value-{label}", {"mu": list(mu)}, f"H~_{label}", "Schur expansion by hand",
            lambda mu=mu, n=n, coeffs=coeffs: (_basis(ctx, n)[mu], SymF.from_basis("s", coeffs)),
        ))
    return out


GROUPS = (characterization_cases, small_value_cases)


def build(ctx: Context) -> list[Check]:
    out = []
    for group in GROUPS:
        out.extend(group(ctx))
    return out


__all__ = ["SMALL_VALUES", "GROUPS", "build"]
