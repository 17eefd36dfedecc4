"""Partitions, compositions and descent sets as plain integer tuples."""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations
from math import factorial, prod

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def is_partition(parts) -> bool:
    return all(p >= 1 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def as_partition(parts) -> Partition:
    lam = tuple(sorted((int(p) for p in parts if p), reverse=True))
    if any(p < 0 for p in lam):
        raise ValueError(f"negative part in {parts!r}")
    return lam


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order, ``(n,)`` first."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)

    def gen(rem, largest):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, largest), 0, -1):
            for rest in gen(rem - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def n_stat(lam: Partition) -> int:
    """n(lambda) = sum (i-1) lambda_i."""
    return sum(i * p for i, p in enumerate(lam))


@lru_cache(maxsize=None)
def z_lambda(lam: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type lam."""
    return prod(k**m * factorial(m) for k, m in Counter(lam).items())


def sign(lam: Partition) -> int:
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def dominates(lam: Partition, mu: Partition) -> bool:
    """True when lam >= mu in dominance order (same size assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def cells(lam: Partition):
    """Cells (row, col), rows counted from the top (English convention)."""
    for i, p in enumerate(lam):
        for j in range(p):
            yield i, j


def arm(lam: Partition, i: int, j: int) -> int:
    return lam[i] - j - 1


def leg(lam: Partition, i: int, j: int) -> int:
    return sum(1 for p in lam[i + 1 :] if p > j)


def hook(n: int, k: int) -> Partition:
    """The hook (n-k, 1^k)."""
    return (n - k,) + (1,) * k


def hook_leg(lam: Partition) -> int | None:
    """k if lam = (n-k, 1^k), else None."""
    if not lam or any(p != 1 for p in lam[1:]):
        return None
    return len(lam) - 1


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[Composition, ...]:
    """Compositions of n ordered by their descent sets (lexicographic on subsets)."""
    if n == 0:
        return ((),)
    out = []
    for r in range(n):
        for subset in combinations(range(1, n), r):
            out.append(subset_to_composition(subset, n))
    return tuple(out)


def subset_to_composition(subset, n: int) -> Composition:
    pts = [0] + sorted(subset) + [n]
    return tuple(b - a for a, b in zip(pts, pts[1:]))


def composition_to_subset(alpha: Composition) -> tuple[int, ...]:
    out, s = [], 0
    for a in alpha[:-1]:
        s += a
        out.append(s)
    return tuple(out)


def refinements(alpha: Composition) -> list[Composition]:
    """All compositions obtained by splitting each part of alpha into a composition."""
    out: list[Composition] = [()]
    for a in alpha:
        out = [x + y for x in out for y in compositions(a)]
    return out


def permutations_with_descents(n: int):
    """Map each subset S of {1..n-1} to one permutation sigma with ides(sigma) = S."""
    out = {}
    for comp in compositions(n):
        # inverse is the concatenation of decreasing runs for the complement
        out[composition_to_subset(comp)] = _perm_with_inverse_descents(comp)
    return out


def _perm_with_inverse_descents(comp: Composition) -> tuple[int, ...]:
    # tau has descent set exactly S: take increasing blocks arranged so each
    # block boundary is a descent, then invert.
    n = sum(comp)
    blocks, hi = [], n
    for c in comp:
        blocks.append(list(range(hi - c + 1, hi + 1)))
        hi -= c
    tau = [x for b in blocks for x in b]
    sigma = [0] * n
    for pos, val in enumerate(tau, start=1):
        sigma[val - 1] = pos
    return tuple(sigma)


def descent_set(word) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])


def inverse_descent_set(sigma) -> tuple[int, ...]:
    """Descents of sigma^{-1}: i such that i+1 occurs before i in sigma."""
    pos = {v: i for i, v in enumerate(sigma)}
    return tuple(i for i in range(1, len(sigma)) if pos[i + 1] < pos[i])
