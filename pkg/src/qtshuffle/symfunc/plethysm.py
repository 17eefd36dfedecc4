"""Plethystic substitution, the Omega kernels, and the creation operators.

Every creation operator here has the shape

    F[x]  ->  prefactor * F[x + shift/z] * K(z) |_{z^k}

where the shift acts on power sums by ``p_j -> p_j + shift_j z^{-j}`` and
K(z) = sum_r kernel_r z^r is one of the Omega series.  On a power sum p_lam
this reduces to a finite sum over sub-multisets of the parts of lam, which
is what :func:`creation_on_p` evaluates and caches.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product as iproduct
from math import comb
from typing import Callable

import flint

from ..coeffs import ONE, ZERO, QTRatio, adams, q, t
from ..partitions import Partition, as_partition, hook_leg, partitions, sign, z_lambda
from .sym import SymF, h

KERNELS = ("H", "E", "Eplus")
MODES = ("D", "Dstar", "C", "B")


def merge(a: Partition, b: Partition) -> Partition:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


# ZSeries ----------------------------------------------------------------------

class ZSeries:
    """Finitely supported Laurent series in one auxiliary variable z with
    symmetric-function coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, SymF] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    def coefficient(self, a: int) -> SymF:
        return self.terms.get(a, SymF.zero())

    def support(self) -> list[int]:
        return sorted(self.terms)

    def __add__(self, other: "ZSeries") -> "ZSeries":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return ZSeries(out)

    def __mul__(self, other):
        if isinstance(other, SymF):
            return ZSeries({k: v * other for k, v in self.terms.items()})
        out: dict[int, SymF] = {}
        for a, f in self.terms.items():
            for b, g in other.terms.items():
                out[a + b] = out[a + b] + f * g if a + b in out else f * g
        return ZSeries(out)

    def truncate(self, top: int) -> "ZSeries":
        return ZSeries({k: v for k, v in self.terms.items() if k <= top})

    def __eq__(self, other):
        return isinstance(other, ZSeries) and self.terms == other.terms

    def __repr__(self):
        return f"ZSeries({self.terms!r})"


Rule = Callable[[int], tuple[QTRatio, QTRatio]]


def plethystic_substitute(f: SymF, rule: Rule) -> ZSeries:
    """Substitute p_k -> scale_k p_k + shift_k z^{-k} in f."""
    cache: dict[int, tuple[QTRatio, QTRatio]] = {}
    out: dict[int, dict[Partition, QTRatio]] = {}
    for lam, c in f.terms.items():
        # each part contributes either its scaled p_j or the z-shift
        factors = []
        for j in lam:
            if j not in cache:
                sc, sh = rule(j)
                cache[j] = (QTRatio.coerce(sc), QTRatio.coerce(sh))
            factors.append((j, cache[j]))
        for choice in iproduct((0, 1), repeat=len(lam)):
            coeff, kept, zexp = c, [], 0
            for (j, (sc, sh)), pick in zip(factors, choice):
                if pick:
                    coeff = coeff * sh
                    zexp -= j
                else:
                    coeff = coeff * sc
                    kept.append(j)
                if coeff.is_zero():
                    break
            if coeff.is_zero():
                continue
            bucket = out.setdefault(zexp, {})
            key = tuple(kept)
            bucket[key] = bucket[key] + coeff if key in bucket else coeff
    return ZSeries({k: SymF(v) for k, v in out.items()})


def alphabet_rule(scale=1, shift=0, shift_sign_alternates: bool = False) -> Rule:
    """Rule for x -> scale*x + shift/z; the epsilon sign is requested by the caller."""
    sc, sh = QTRatio.coerce(scale), QTRatio.coerce(shift)

    def rule(k: int):
        s = adams(sh, k)
        if shift_sign_alternates and k % 2:
            s = -s
        return adams(sc, k), s

    return rule


# kernels ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def kernel_p(kind: str, r: int) -> dict[Partition, flint.fmpq]:
    """p-expansion of the z^r coefficient of the Omega series ``kind``."""
    if r < 0:
        return {}
    if kind == "H":
        return {mu: flint.fmpq(1, z_lambda(mu)) for mu in partitions(r)}
    if kind == "E":
        # (-1)^r e_r = (-1)^r sum sign(mu) p_mu / z_mu = sum (-1)^{l(mu)} p_mu / z_mu
        return {mu: flint.fmpq((-1) ** len(mu), z_lambda(mu)) for mu in partitions(r)}
    if kind == "Eplus":
        return {mu: flint.fmpq(sign(mu), z_lambda(mu)) for mu in partitions(r)}
    raise ValueError(f"unknown kernel {kind!r}")


def omega_series(kind: str, top_degree: int) -> ZSeries:
    """H: sum z^m h_m,  E: sum (-z)^i e_i,  Eplus: sum z^b e_b, truncated at top_degree."""
    return ZSeries({
        r: SymF({mu: QTRatio(c) for mu, c in kernel_p(kind, r).items()}, clean=True)
        for r in range(top_degree + 1)
    })


# creation operators -------------------------------------------------------------

@lru_cache(maxsize=None)
def _shift(mode: str, j: int) -> QTRatio:
    if mode == "D":
        return adams((1 - t) * (1 - q), j)
    if mode == "Dstar":
        return -adams((1 - 1 / t) * (1 - 1 / q), j)
    if mode == "C":
        return q ** (-j) - 1
    if mode == "B":
        return (-1) ** j * (1 - q**j)
    raise ValueError(f"unknown creation mode {mode!r}")


_KERNEL_OF = {"D": "E", "Dstar": "H", "C": "H", "B": "Eplus"}


@lru_cache(maxsize=None)
def _shift_power(mode: str, j: int, s: int) -> QTRatio:
    return _shift(mode, j) ** s


def _prefactor(mode: str, index: int) -> QTRatio:
    if mode == "C":
        return (-q) ** (1 - index)
    return ONE


@lru_cache(maxsize=None)
def creation_on_p(mode: str, index: int, lam: Partition) -> dict[Partition, QTRatio]:
    """The creation operator of ``mode`` and ``index`` applied to p_lam, in the p-basis."""
    kernel = _KERNEL_OF[mode]
    mult = sorted(Counter(lam).items(), reverse=True)
    acc: dict[Partition, QTRatio] = {}
    for choice in iproduct(*(range(c + 1) for _, c in mult)):
        removed = sum(j * s for (j, _), s in zip(mult, choice))
        r = index + removed
        if r < 0:
            continue
        coeff = ONE
        rest: list[int] = []
        for (j, c), s in zip(mult, choice):
            if s:
                coeff = coeff * _shift_power(mode, j, s) * comb(c, s)
            rest.extend([j] * (c - s))
        rest_t = tuple(rest)
        for mu, k in kernel_p(kernel, r).items():
            key = merge(rest_t, mu)
            v = QTRatio(coeff.num * k, coeff.den, reduced=True)
            acc[key] = acc[key] + v if key in acc else v
    pre = _prefactor(mode, index)
    return {k: v * pre for k, v in acc.items() if not v.is_zero()}


def creation_op(mode: str, index: int, f: SymF) -> SymF:
    """Apply D_k, D*_k, C_a or B_b.  Extraction below the support gives zero."""
    if mode not in MODES:
        raise ValueError(f"unknown creation mode {mode!r}")
    if mode in ("C", "B") and index < 0:
        raise ValueError("C and B need a non-negative index")
    acc: dict[Partition, QTRatio] = {}
    for lam, c in f.terms.items():
        for mu, d in creation_on_p(mode, index, lam).items():
            v = c * d
            acc[mu] = acc[mu] + v if mu in acc else v
    return SymF({k: v for k, v in acc.items() if not v.is_zero()}, clean=True)


def creation_op_by_series(mode: str, index: int, f: SymF) -> SymF:
    """Reference implementation through plethystic_substitute and omega_series."""
    shifted = plethystic_substitute(f, lambda j: (ONE, _shift(mode, j)))
    top = max(f.degrees() | {0}) + max(index, 0)
    series = shifted * omega_series(_KERNEL_OF[mode], top)
    return series.coefficient(index).scale(_prefactor(mode, index))


def D(k: int, f: SymF) -> SymF:
    return creation_op("D", k, f)


def Dstar(k: int, f: SymF) -> SymF:
    return creation_op("Dstar", k, f)


def C(a: int, f: SymF) -> SymF:
    return creation_op("C", a, f)


def B(b: int, f: SymF) -> SymF:
    return creation_op("B", b, f)


# scalar and linear plethysm -----------------------------------------------------

def plethysm_scalar(f: SymF, alphabet) -> QTRatio:
    """f[A] for an alphabet A in Q(q,t): p_k -> A(q^k, t^k)."""
    a = QTRatio.coerce(alphabet)
    powers: dict[int, QTRatio] = {}
    acc = ZERO
    for lam, c in f.terms.items():
        term = c
        for j in lam:
            if j not in powers:
                powers[j] = adams(a, j)
            term = term * powers[j]
        acc = acc + term
    return acc


def plethysm_linear(f: SymF, factor) -> SymF:
    """f[c x] for a scalar c in Q(q,t): p_k -> c(q^k, t^k) p_k."""
    c = QTRatio.coerce(factor)
    powers: dict[int, QTRatio] = {}
    out = {}
    for lam, v in f.terms.items():
        for j in lam:
            if j not in powers:
                powers[j] = adams(c, j)
            v = v * powers[j]
        out[lam] = v
    return SymF(out)


def schur_hook_eval(lam, m) -> QTRatio:
    """s_lam[1 - m], computed by plethysm."""
    from .sym import s

    return plethysm_scalar(s(as_partition(lam)), 1 - QTRatio.coerce(m))


def schur_hook_closed_form(lam, m) -> QTRatio:
    lam = as_partition(lam)
    k = hook_leg(lam)
    if k is None:
        return ZERO
    m = QTRatio.coerce(m)
    return (-m) ** k * (1 - m)


@lru_cache(maxsize=None)
def omega_minus_uM(order: int) -> tuple[QTRatio, ...]:
    """Coefficients of u^0..u^order in Omega[-uM] = (1-u)(1-qtu)/((1-tu)(1-qu))."""
    return tuple(plethysm_scalar(h(r), -(1 - t) * (1 - q)) for r in range(order + 1))


def omega_minus_uM_closed(order: int) -> tuple[QTRatio, ...]:
    # series of the closed form, used as an independent check
    geo_t = [t**i for i in range(order + 1)]
    geo_q = [q**i for i in range(order + 1)]
    den = [sum((geo_t[i] * geo_q[r - i] for i in range(r + 1)), ZERO) for r in range(order + 1)]
    num = {0: ONE, 1: -(1 + q * t), 2: q * t}
    return tuple(
        sum((num[i] * den[r - i] for i in num if i <= r), ZERO) for r in range(order + 1)
    )


__all__ = [
    "ZSeries", "plethystic_substitute", "alphabet_rule", "omega_series", "creation_op",
    "creation_op_by_series", "creation_on_p", "D", "Dstar", "C", "B", "plethysm_scalar",
    "plethysm_linear", "schur_hook_eval", "schur_hook_closed_form", "omega_minus_uM",
    "kernel_p", "merge",
]
