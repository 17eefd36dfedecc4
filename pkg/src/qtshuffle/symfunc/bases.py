"""Rational transition tables between the p, e, h, m and s bases.

Everything here is built once per degree and cached; the tables are plain
dicts of ``flint.fmpq`` and are never mutated after construction.
"""
from __future__ import annotations

from functools import lru_cache

import flint

from ..partitions import Partition, as_partition, partitions, sign, z_lambda

BASES = ("p", "e", "h", "m", "s")


@lru_cache(maxsize=None)
def character(lam: Partition, mu: Partition) -> int:
    """chi^lam evaluated on cycle type mu (Murnaghan-Nakayama on beta-sets)."""
    if sum(lam) != sum(mu):
        raise ValueError("character needs partitions of the same size")
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new = sorted((x if x != b else nb for x in beta), reverse=True)
        k = len(new)
        nu = as_partition(new[i] - (k - 1 - i) for i in range(k))
        total += (-1) ** height * character(nu, rest)
    return total


def _product_table(n: int, one_part) -> dict[Partition, dict[Partition, flint.fmpq]]:
    """p-expansion of f_lam = prod f_{lam_i} given f_j via one_part(j)."""
    out = {}
    for lam in partitions(n):
        acc = {(): flint.fmpq(1)}
        for part in lam:
            nxt: dict = {}
            for nu, c in acc.items():
                for mu, d in one_part(part).items():
                    key = tuple(sorted(nu + mu, reverse=True))
                    nxt[key] = nxt.get(key, 0) + c * d
            acc = nxt
        out[lam] = {k: v for k, v in acc.items() if v != 0}
    return out


@lru_cache(maxsize=None)
def _e_single(j: int):
    return {mu: flint.fmpq(sign(mu), z_lambda(mu)) for mu in partitions(j)}


@lru_cache(maxsize=None)
def _h_single(j: int):
    return {mu: flint.fmpq(1, z_lambda(mu)) for mu in partitions(j)}


def _invert(table, n):
    parts = partitions(n)
    idx = {lam: i for i, lam in enumerate(parts)}
    d = len(parts)
    mat = flint.fmpq_mat(d, d)
    for lam, row in table.items():
        for mu, c in row.items():
            mat[idx[lam], idx[mu]] = c
    inv = mat.inv()
    return {
        parts[i]: {parts[j]: inv[i, j] for j in range(d) if inv[i, j] != 0}
        for i in range(d)
    }


@lru_cache(maxsize=None)
def to_p(basis: str, n: int) -> dict[Partition, dict[Partition, flint.fmpq]]:
    """``table[lam][mu]`` = coefficient of p_mu in b_lam."""
    if basis == "p":
        return {lam: {lam: flint.fmpq(1)} for lam in partitions(n)}
    if basis == "e":
        return _product_table(n, _e_single)
    if basis == "h":
        return _product_table(n, _h_single)
    if basis == "s":
        return {
            lam: {mu: flint.fmpq(character(lam, mu), z_lambda(mu)) for mu in partitions(n)
                  if character(lam, mu)}
            for lam in partitions(n)
        }
    if basis == "m":
        return _invert(from_p("m", n), n)
    raise ValueError(f"unknown basis {basis!r}")


@lru_cache(maxsize=None)
def from_p(basis: str, n: int) -> dict[Partition, dict[Partition, flint.fmpq]]:
    """``table[mu][lam]`` = coefficient of b_lam in p_mu."""
    if basis == "p":
        return to_p("p", n)
    if basis == "s":
        return {
            mu: {lam: flint.fmpq(character(lam, mu)) for lam in partitions(n)
                 if character(lam, mu)}
            for mu in partitions(n)
        }
    if basis == "m":
        # <p_mu, h_lam> is the m_lam coordinate of p_mu
        h = to_p("h", n)
        return {
            mu: {lam: h[lam][mu] * z_lambda(mu) for lam in partitions(n) if mu in h[lam]}
            for mu in partitions(n)
        }
    if basis in ("e", "h"):
        return _invert(to_p(basis, n), n)
    raise ValueError(f"unknown basis {basis!r}")
