"""Shared helpers for building suites."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ...coeffs import q, t
from ...macdonald import ensure_bases, nabla, nabla_inverse
from ...operators import OpExpr, apply
from ...partitions import compositions, partitions
from ...symfunc.plethysm import creation_op, plethysm_linear
from ...symfunc.sym import SymF, e, h, s

QT = q * t


@dataclass(frozen=True)
class Selection:
    """Optional parameters narrowing a suite to particular cases."""

    m: int | None = None
    n: int | None = None
    k: int | None = None
    alpha: tuple[int, ...] | None = None

    def is_empty(self) -> bool:
        return self.m is None and self.n is None and self.k is None and self.alpha is None

    def admits(self, params: dict) -> bool:
        for key in ("m", "n", "k"):
            want = getattr(self, key)
            if want is not None and key in params and params[key] != want:
                return False
        if self.alpha is not None and "alpha" in params and tuple(params["alpha"]) != self.alpha:
            return False
        return True


@dataclass
class Context:
    """What every suite builder receives."""

    limits: object
    cache: object = None
    golden_dir: object = None
    selection: Selection = Selection()

    def bases(self, degree: int) -> None:
        ensure_bases(degree, self.limits, self.cache)


def schur_basis(max_degree: int, min_degree: int = 0) -> list[SymF]:
    return [s(lam) if lam else SymF.one() for d in range(min_degree, max_degree + 1) for lam in partitions(d)]


def on_all(op, fns) -> list[SymF]:
    return [op(f) for f in fns]


def D(k: int):
    return lambda f: creation_op("D", k, f)


def Dstar(k: int):
    return lambda f: creation_op("Dstar", k, f)


def word_op(x: OpExpr, limits):
    return lambda f: apply(x, f, limits)


def times(g: SymF):
    return lambda f: g * f


def conj_nabla(op):
    """nabla . op . nabla^{-1}."""
    return lambda f: nabla(op(nabla_inverse(f)))


def bracket_ops(a, b):
    return lambda f: a(b(f)) - b(a(f))


def scaled(op, c):
    return lambda f: op(f).scale(c)


def hn_multiplier(n: int) -> SymF:
    """(qt/(qt-1)) h_n[(1-qt) x / qt], built directly by plethysm."""
    return plethysm_linear(h(n), (1 - QT) / QT).scale(QT / (QT - 1))


def hook(n: int, k: int) -> tuple[int, ...]:
    return (n - k,) + (1,) * k


def constant(c) -> SymF:
    return SymF.one().scale(c)


def coprime_pairs(max_sum: int, min_each: int = 1) -> list[tuple[int, int]]:
    return [(m, n) for total in range(2, max_sum + 1) for m in range(min_each, total)
            if (n := total - m) >= min_each and gcd(m, n) == 1]


def reversed_refinements(beta) -> list[tuple[tuple[int, ...], int]]:
    """All alpha = alpha^(k) ... alpha^(1) with alpha^(i) |= beta_i, with c(alpha, beta)."""
    pieces = [[()]]
    weights = [0]
    for i, part in enumerate(beta, start=1):
        new, neww = [], []
        for prefix, w in zip(pieces, weights):
            for comp in compositions(part):
                new.append([comp] + prefix)
                neww.append(w + (i - 1) * len(comp))
        pieces, weights = new, neww
    return [(tuple(x for comp in p for x in comp), w) for p, w in zip(pieces, weights)]


__all__ = [
    "QT", "Selection", "Context", "schur_basis", "on_all", "D", "Dstar", "word_op", "times",
    "conj_nabla", "bracket_ops", "scaled", "hn_multiplier", "hook", "constant", "coprime_pairs",
    "reversed_refinements",
    "e", "h", "s",
]
