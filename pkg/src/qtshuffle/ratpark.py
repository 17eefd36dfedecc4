"""Rational Dyck paths and parking functions in the km x kn lattice.

A path is the vector u = (u_1, ..., u_kn) where u_i is the number of east
steps before the i-th north step; a parking function adds a permutation v
of the cars with v increasing up every column.  All statistics follow one
algorithm for every k, with exact rational ranks.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd

from .coeffs import ZERO, QTRatio, q, t
from .limits import DEFAULT_LIMITS, Limits
from .partitions import Composition, as_partition, subset_to_composition
from .symfunc.qsym import QSymCoords, from_ides


@dataclass(frozen=True)
class PathU:
    m: int
    n: int
    k: int
    u: tuple[int, ...]

    def __post_init__(self):
        if gcd(self.m, self.n) != 1 or self.m < 1 or self.n < 1 or self.k < 1:
            raise ValueError(f"need coprime positive (m,n) and k >= 1, got ({self.m},{self.n},{self.k})")
        if len(self.u) != self.k * self.n:
            raise ValueError(f"u must have length kn = {self.k * self.n}")
        for i, ui in enumerate(self.u, start=1):
            if ui < 0 or self.n * ui > (i - 1) * self.m or (i > 1 and self.u[i - 2] > ui):
                raise ValueError(f"u = {self.u} is not a ({self.k * self.m},{self.k * self.n}) Dyck path")

    @property
    def width(self) -> int:
        return self.k * self.m

    @property
    def height(self) -> int:
        return self.k * self.n

    def columns(self) -> list[list[int]]:
        """Indices (0-based) of the north steps grouped by column."""
        out: list[list[int]] = []
        for i, ui in enumerate(self.u):
            if i and self.u[i - 1] == ui:
                out[-1].append(i)
            else:
                out.append([i])
        return out


@dataclass(frozen=True)
class ParkingFn:
    path: PathU
    v: tuple[int, ...]

    def __post_init__(self):
        u, v = self.path.u, self.v
        if sorted(v) != list(range(1, len(u) + 1)):
            raise ValueError(f"v = {v} is not a permutation of 1..{len(u)}")
        for i in range(1, len(u)):
            if u[i - 1] == u[i] and v[i - 1] > v[i]:
                raise ValueError(f"cars must increase up each column: u={u}, v={v}")


@dataclass(frozen=True)
class ParkStats:
    area: int
    dinv_path: int
    tdinv: int
    maxtdinv: int
    dinv: int
    ranks: tuple[Fraction, ...]
    word: tuple[int, ...]
    ides: tuple[int, ...]
    pides: Composition
    ret: int
    comp_hits: Composition


# enumeration -------------------------------------------------------------------------

def enum_paths(m: int, n: int, k: int = 1, limits: Limits = DEFAULT_LIMITS) -> list[PathU]:
    """All (km, kn) Dyck paths, lexicographic in u."""
    if gcd(m, n) != 1:
        raise ValueError(f"({m},{n}) is not coprime; pass the primitive pair and k")
    limits.check_kn(k * n)
    return [PathU(m, n, k, u) for u in _paths(m, n, k)]


@lru_cache(maxsize=None)
def _paths(m: int, n: int, k: int) -> tuple[tuple[int, ...], ...]:
    N = k * n
    out: list[tuple[int, ...]] = []

    def grow(prefix: list[int]):
        i = len(prefix) + 1
        if i > N:
            out.append(tuple(prefix))
            return
        lo = prefix[-1] if prefix else 0
        hi = ((i - 1) * m) // n
        for x in range(lo, hi + 1):
            prefix.append(x)
            grow(prefix)
            prefix.pop()

    grow([])
    return tuple(out)


def enum_parks(path: PathU) -> list[ParkingFn]:
    """Park(u): column-increasing labelings, lexicographic in v."""
    cols = path.columns()
    N = path.height
    out: list[tuple[int, ...]] = []

    def assign(ci: int, remaining: tuple[int, ...], v: list[int]):
        if ci == len(cols):
            out.append(tuple(v))
            return
        for cars in combinations(remaining, len(cols[ci])):
            for idx, car in zip(cols[ci], cars):
                v[idx] = car
            rest = tuple(c for c in remaining if c not in cars)
            assign(ci + 1, rest, v)

    assign(0, tuple(range(1, N + 1)), [0] * N)
    return [ParkingFn(path, v) for v in sorted(out)]


def all_parks(m: int, n: int, k: int = 1, limits: Limits = DEFAULT_LIMITS) -> list[ParkingFn]:
    return [pf for path in enum_paths(m, n, k, limits) for pf in enum_parks(path)]


# statistics --------------------------------------------------------------------------

def area(path: PathU) -> int:
    km, kn, k = path.width, path.height, path.k
    return (km * kn - km - kn + k) // 2 - sum(path.u)


def diagram_cells(path: PathU):
    """(arm, leg) of every cell of the diagram above the path.

    Row of north step i holds u_i cells; the arm counts cells to the right in
    that row and the leg counts cells below in the same column.
    """
    u = path.u
    for i, ui in enumerate(u):
        for c in range(ui):
            yield ui - c - 1, sum(1 for j in range(i) if u[j] > c)


def dinv_path(path: PathU, weak: bool = True) -> int:
    """Cells with arm/(leg+1) <= m/n < (arm+1)/leg; ``weak=False`` makes the left inequality strict."""
    m, n = path.m, path.n
    count = 0
    for a, l in diagram_cells(path):
        left = a * n <= m * (l + 1) if weak else a * n < m * (l + 1)
        if left and m * l < n * (a + 1):
            count += 1
    return count


def step_ranks(path: PathU) -> tuple[Fraction, ...]:
    km, kn = path.width, path.height
    return tuple(
        Fraction(km * i - kn * ui) + Fraction(ui, km + 1) for i, ui in enumerate(path.u)
    )


def _tdinv(car_ranks: dict[int, Fraction], km: int) -> int:
    cars = sorted(car_ranks)
    total = 0
    for a, r in enumerate(cars):
        rr = car_ranks[r]
        for s_ in cars[a + 1:]:
            if rr < car_ranks[s_] < rr + km:
                total += 1
    return total


def tdinv(pf: ParkingFn) -> int:
    ranks = step_ranks(pf.path)
    return _tdinv({car: ranks[i] for i, car in enumerate(pf.v)}, pf.path.width)


@lru_cache(maxsize=None)
def _maxtdinv(path: PathU) -> int:
    # the labeling read as (kn ... 2 1) by decreasing rank: cars in rank order
    ranks = step_ranks(path)
    order = sorted(range(len(ranks)), key=lambda i: ranks[i])
    return _tdinv({car: ranks[i] for car, i in enumerate(order, start=1)}, path.width)


def maxtdinv(path: PathU) -> int:
    return _maxtdinv(path)


def maxtdinv_brute(path: PathU) -> int:
    return max(tdinv(pf) for pf in enum_parks(path))


def word(pf: ParkingFn) -> tuple[int, ...]:
    """Cars read by decreasing rank."""
    ranks = step_ranks(pf.path)
    order = sorted(range(len(ranks)), key=lambda i: ranks[i], reverse=True)
    return tuple(pf.v[i] for i in order)


def inverse_descents(sigma) -> tuple[int, ...]:
    pos = {x: i for i, x in enumerate(sigma)}
    return tuple(i for i in range(1, len(sigma)) if pos[i + 1] < pos[i])


def diagonal_hits(path: PathU) -> tuple[int, ...]:
    """The i in 1..k-1 where the path touches the diagonal at (i m, i n)."""
    m, n, u = path.m, path.n, path.u
    return tuple(i for i in range(1, path.k) if u[n * i] == i * m)


def comp_hits(path: PathU) -> Composition:
    return subset_to_composition(diagonal_hits(path), path.k)


def ret(path: PathU) -> int:
    hits = diagonal_hits(path)
    return hits[0] if hits else path.k


def stats(pf: ParkingFn) -> ParkStats:
    path = pf.path
    dp = dinv_path(path)
    td = tdinv(pf)
    mx = maxtdinv(path)
    sigma = word(pf)
    ides = inverse_descents(sigma)
    return ParkStats(
        area=area(path),
        dinv_path=dp,
        tdinv=td,
        maxtdinv=mx,
        dinv=dp + td - mx,
        ranks=step_ranks(path),
        word=sigma,
        ides=ides,
        pides=subset_to_composition(ides, len(sigma)),
        ret=ret(path),
        comp_hits=comp_hits(path),
    )


def classical_dinv(pf: ParkingFn) -> int:
    """Dinv of a square parking function from its area sequence a_i = (i-1) - u_i."""
    a = [i - ui for i, ui in enumerate(pf.path.u)]
    v = pf.v
    total = 0
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if a[i] == a[j] and v[i] < v[j]:
                total += 1
            elif a[i] == a[j] + 1 and v[i] > v[j]:
                total += 1
    return total


# filters -----------------------------------------------------------------------------

@dataclass(frozen=True)
class Filter:
    kind: str = "all"
    value: object = None

    @classmethod
    def all(cls) -> "Filter":
        return cls("all")

    @classmethod
    def hits_exactly(cls, alpha) -> "Filter":
        return cls("hits_exactly", tuple(alpha))

    @classmethod
    def hits_count(cls, r: int) -> "Filter":
        return cls("hits_count", int(r))

    @classmethod
    def ret_at_least(cls, a: int) -> "Filter":
        return cls("ret_at_least", int(a))

    def accepts(self, path: PathU) -> bool:
        if self.kind == "all":
            return True
        if self.kind == "hits_exactly":
            return comp_hits(path) == self.value
        if self.kind == "hits_count":
            # hits counted with (0,0) included: one per part of the hit composition
            return len(comp_hits(path)) == self.value
        if self.kind == "ret_at_least":
            return ret(path) >= self.value
        raise ValueError(f"unknown filter {self.kind!r}")

    def label(self) -> str:
        return self.kind if self.value is None else f"{self.kind}={self.value}"


def weight(st: ParkStats) -> QTRatio:
    return t**st.area * q**st.dinv


def hikita_sum(m: int, n: int, k: int = 1, filt: Filter = Filter(),
               limits: Limits = DEFAULT_LIMITS) -> QSymCoords:
    """sum t^area q^dinv F_ides over the parking functions of the filtered paths."""
    pairs = []
    for path in enum_paths(m, n, k, limits):
        if filt.accepts(path):
            for pf in enum_parks(path):
                st = stats(pf)
                pairs.append((st.ides, weight(st)))
    return from_ides(k * n, pairs)


def llt_path_sum(path: PathU) -> QSymCoords:
    pairs = []
    for pf in enum_parks(path):
        st = stats(pf)
        pairs.append((st.ides, weight(st)))
    return from_ides(path.height, pairs)


def llt_lambda(path: PathU) -> tuple[int, ...]:
    """Column heights of the path (multiplicities of the entries of u), as a partition.

    The q = 1 value of the per-path sum is t^area e_lambda for this lambda.
    """
    return as_partition(len(col) for col in path.columns())


def path_sum(m: int, n: int, k: int = 1, weak: bool = True,
             limits: Limits = DEFAULT_LIMITS) -> QTRatio:
    """sum over paths of q^{dinv_path} t^{area}."""
    acc = ZERO
    for path in enum_paths(m, n, k, limits):
        acc = acc + q ** dinv_path(path, weak) * t ** area(path)
    return acc


# shuffles and pairings -----------------------------------------------------------------

def shuffle_member(sigma, mu) -> bool:
    """True when sigma restricted to each consecutive block of 1..n (sizes mu) is increasing."""
    if sum(mu) != len(sigma):
        raise ValueError("block sizes must add up to the word length")
    pos = {x: i for i, x in enumerate(sigma)}
    start = 1
    for size in mu:
        for x in range(start, start + size - 1):
            if pos[x + 1] < pos[x]:
                return False
        start += size
    return True


def pairing_rhs(m: int, n: int, k: int, filt: Filter, mu, limits: Limits = DEFAULT_LIMITS) -> QTRatio:
    """sum t^area q^dinv over filtered parking functions whose word lies in E_1 ⧢ ... ⧢ E_l."""
    mu = tuple(mu)
    if sum(mu) != k * n:
        raise ValueError(f"|mu| must be kn = {k * n}")
    acc = ZERO
    for path in enum_paths(m, n, k, limits):
        if not filt.accepts(path):
            continue
        for pf in enum_parks(path):
            st = stats(pf)
            if shuffle_member(st.word, mu):
                acc = acc + weight(st)
    return acc


# export --------------------------------------------------------------------------------

CSV_FIELDS = ("u", "v", "area", "dinv_path", "tdinv", "maxtdinv", "dinv", "word", "ides", "comp_hits", "ret")


def _join(xs) -> str:
    return ",".join(str(x) for x in xs)


def records(m: int, n: int, k: int = 1, filt: Filter = Filter(), limits: Limits = DEFAULT_LIMITS):
    for path in enum_paths(m, n, k, limits):
        if not filt.accepts(path):
            continue
        for pf in enum_parks(path):
            st = stats(pf)
            yield {
                "u": _join(path.u), "v": _join(pf.v), "area": st.area, "dinv_path": st.dinv_path,
                "tdinv": st.tdinv, "maxtdinv": st.maxtdinv, "dinv": st.dinv, "word": _join(st.word),
                "ides": _join(st.ides), "comp_hits": _join(st.comp_hits), "ret": st.ret,
            }


def to_csv(m: int, n: int, k: int = 1, filt: Filter = Filter(), limits: Limits = DEFAULT_LIMITS) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, delimiter=";", lineterminator="\n")
    writer.writeheader()
    for row in records(m, n, k, filt, limits):
        writer.writerow(row)
    return buf.getvalue()


__all__ = [
    "PathU", "ParkingFn", "ParkStats", "Filter", "enum_paths", "enum_parks", "all_parks", "area",
    "dinv_path", "step_ranks", "tdinv", "maxtdinv", "maxtdinv_brute", "word", "inverse_descents",
    "diagonal_hits", "comp_hits", "ret", "stats", "classical_dinv", "hikita_sum", "llt_path_sum",
    "llt_lambda", "path_sum", "shuffle_member", "pairing_rhs", "records", "to_csv", "CSV_FIELDS",
    "weight",
]
