"""Constant terms of the rational functions behind the rational q,t-Catalan.

Two evaluation methods are provided and cross-checked:

* a truncated multivariate series, where every ratio z_i/z_j is expanded in
  non-negative powers and the constant term is read off at the end;
* the standard-tableaux substitution, which walks over tableaux by adding
  outer corners and substitutes z_d = 1/w_T(d) into a factored expression.

The series side works on prefix sums of the exponent vector.  A factor
z_i/z_j with i < j raises the prefix sums S_i..S_{j-1} by one and touches
nothing else, so partial products whose prefix sums already exceed those of
the target exponent can never reach the constant term and are dropped.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as iproduct
from math import comb, gcd

import flint

from .coeffs import CTX, ONE, ZERO, QTRatio, render, specialize_q
from .coeffs import Q as QP
from .coeffs import T as TP
from .limits import DEFAULT_LIMITS, Limits
from .partitions import Composition, Partition
from .symfunc.plethysm import kernel_p, merge
from .symfunc.sym import SymF, e, hall

Poly = flint.fmpq_mpoly


class ConstantTermError(ArithmeticError):
    pass


class NonStabilizingError(ConstantTermError):
    def __init__(self, bound: int):
        super().__init__(f"constant term did not stabilize up to truncation bound {bound}")
        self.bound = bound


class VanishingFactorError(ConstantTermError):
    """A denominator factor became zero during tableau substitution."""


# monomials and factored rational functions -------------------------------------

@dataclass(frozen=True)
class ZMonomial:
    """scalar * prod z_k^{a_k}; ``exps`` holds the non-zero (k, a_k), k from 1."""

    exps: tuple[tuple[int, int], ...] = ()
    scalar: QTRatio = ONE

    @classmethod
    def from_dict(cls, exps: dict[int, int], scalar=ONE) -> "ZMonomial":
        return cls(tuple(sorted((k, a) for k, a in exps.items() if a)), QTRatio.coerce(scalar))

    @classmethod
    def var(cls, k: int, a: int = 1) -> "ZMonomial":
        return cls.from_dict({k: a})

    def as_dict(self) -> dict[int, int]:
        return dict(self.exps)

    def degree_in(self, k: int) -> int:
        return self.as_dict().get(k, 0)

    def without(self, k: int) -> "ZMonomial":
        return ZMonomial(tuple(x for x in self.exps if x[0] != k), self.scalar)

    def is_constant(self) -> bool:
        return not self.exps

    def __mul__(self, other: "ZMonomial") -> "ZMonomial":
        d = self.as_dict()
        for k, a in other.exps:
            d[k] = d.get(k, 0) + a
        return ZMonomial.from_dict(d, self.scalar * other.scalar)

    def __str__(self):
        body = "*".join(f"z{k}" if a == 1 else f"z{k}^{a}" for k, a in self.exps) or "1"
        return body if self.scalar.is_one() else f"({render(self.scalar)})*{body}"


@dataclass(frozen=True)
class LinearFactor:
    """The factor 1 - c*w for a scalar c and a bare monomial w."""

    c: QTRatio
    w: ZMonomial

    def __str__(self):
        return f"(1 - {render(self.c)}*{self.w})"


def _lf(c, exps: dict[int, int]) -> LinearFactor:
    return LinearFactor(QTRatio.coerce(c), ZMonomial.from_dict(exps))


@dataclass(frozen=True)
class FactoredRat:
    """scalar * monomial * prod(num) / prod(den), factors kept as multisets."""

    scalar: QTRatio
    monomial: ZMonomial
    num: tuple[tuple[LinearFactor, int], ...]
    den: tuple[tuple[LinearFactor, int], ...]

    @classmethod
    def build(cls, scalar, monomial: ZMonomial, num, den) -> "FactoredRat":
        return cls._make(QTRatio.coerce(scalar), monomial, Counter(num), Counter(den))

    @classmethod
    def _make(cls, scalar, monomial, num: Counter, den: Counter) -> "FactoredRat":
        common = num & den
        num, den = num - common, den - common
        key = lambda kv: str(kv[0])
        return cls(scalar, monomial, tuple(sorted(num.items(), key=key)), tuple(sorted(den.items(), key=key)))

    def times(self, factor: LinearFactor, denominator: bool = False) -> "FactoredRat":
        num, den = Counter(dict(self.num)), Counter(dict(self.den))
        (den if denominator else num)[factor] += 1
        return FactoredRat._make(self.scalar, self.monomial, num, den)

    def substitute(self, k: int, value) -> "FactoredRat | None":
        """Set z_k = value; returns None when a numerator factor vanishes."""
        value = QTRatio.coerce(value)
        scalar = self.scalar * value ** self.monomial.degree_in(k)
        monomial = self.monomial.without(k)
        parts: list[Counter] = [Counter(), Counter()]
        vanished = False
        for side, factors in enumerate((self.num, self.den)):
            for f, mult in factors:
                a = f.w.degree_in(k)
                if not a:
                    parts[side][f] += mult
                    continue
                c = f.c * value**a
                w = f.w.without(k)
                if not w.is_constant():
                    parts[side][LinearFactor(c, w)] += mult
                    continue
                const = 1 - c
                if const.is_zero():
                    if side:
                        raise VanishingFactorError(f"denominator factor {f} vanishes at z{k} = {render(value)}")
                    vanished = True
                    continue
                scalar = scalar * const**mult if side == 0 else scalar / const**mult
        if vanished:
            return None
        return FactoredRat._make(scalar, monomial, parts[0], parts[1])

    def is_constant(self) -> bool:
        return self.monomial.is_constant() and not self.num and not self.den

    def value(self) -> QTRatio:
        if not self.is_constant():
            raise ConstantTermError("variables remain after substitution")
        return self.scalar * self.monomial.scalar


# standard tableaux -------------------------------------------------------------

@dataclass(frozen=True)
class StdTableau:
    """cells[k-1] = (row, col), 1-based, of the label k."""

    cells: tuple[tuple[int, int], ...] = ()

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def shape(self) -> Partition:
        rows = Counter(r for r, _ in self.cells)
        return tuple(rows[i] for i in range(1, len(rows) + 1))

    def weight(self, k: int) -> QTRatio:
        i, j = self.cells[k - 1]
        return QTRatio(QP ** (j - 1) * TP ** (i - 1), reduced=True)

    def outer_corners(self) -> list[tuple[int, int]]:
        sh = self.shape
        out = [(i + 1, sh[i] + 1) for i in range(len(sh)) if i == 0 or sh[i - 1] > sh[i]]
        return out + [(len(sh) + 1, 1)]

    def add(self, cell: tuple[int, int]) -> "StdTableau":
        return StdTableau(self.cells + (cell,))

    def rows(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.shape]
        for k, (i, _) in enumerate(self.cells, start=1):
            out[i - 1].append(k)
        return out


def standard_tableaux(n: int) -> list[StdTableau]:
    level = [StdTableau()]
    for _ in range(n):
        level = [T.add(c) for T in level for c in T.outer_corners()]
    return level


# lattice paths ------------------------------------------------------------------

@dataclass(frozen=True)
class NEPath:
    """A path in the m x n lattice; e[j-1] east steps are taken at height j."""

    m: int
    n: int
    e: tuple[int, ...]

    def __post_init__(self):
        if self.m < 0 or self.n < 1 or len(self.e) != self.n:
            raise ValueError(f"need n >= 1 and n = len(e), got n={self.n}, e={self.e}")
        if any(x < 0 for x in self.e) or sum(self.e) != self.m:
            raise ValueError(f"east steps {self.e} must be non-negative and sum to m={self.m}")

    @classmethod
    def from_heights(cls, m: int, n: int, heights) -> "NEPath":
        c = Counter(heights)
        return cls(m, n, tuple(c[j] for j in range(1, n + 1)))

    @classmethod
    def closest(cls, m: int, n: int) -> "NEPath":
        """The path weakly above the diagonal that stays closest to it."""
        return cls(m, n, tuple((j * m) // n - ((j - 1) * m) // n for j in range(1, n + 1)))

    @classmethod
    def topmost(cls, m: int, n: int) -> "NEPath":
        return cls(m, n, (0,) * (n - 1) + (m,))

    def heights(self) -> tuple[int, ...]:
        """r_1 <= ... <= r_m, the heights of the east steps."""
        return tuple(j for j, c in enumerate(self.e, start=1) for _ in range(c))

    def is_above_diagonal(self) -> bool:
        return all(i * self.n <= r * self.m for i, r in enumerate(self.heights(), start=1))

    def __ge__(self, other: "NEPath") -> bool:
        return all(s >= r for s, r in zip(self.heights(), other.heights()))

    def area_over(self, other: "NEPath") -> int:
        return sum(s - r for s, r in zip(self.heights(), other.heights()))

    def u_vector(self) -> tuple[int, ...]:
        """East steps before each north step."""
        out, acc = [], 0
        for x in self.e:
            out.append(acc)
            acc += x
        return tuple(out)


def paths_above(gamma: NEPath) -> list[NEPath]:
    """All NE-paths delta >= gamma in the same lattice."""
    m, n, r = gamma.m, gamma.n, gamma.heights()
    out: list[NEPath] = []

    def grow(prefix: list[int]):
        i = len(prefix)
        if i == m:
            out.append(NEPath.from_heights(m, n, prefix))
            return
        lo = max(r[i], prefix[-1] if prefix else 1)
        for s in range(lo, n + 1):
            grow(prefix + [s])

    grow([])
    return out


def path_dinv(delta: NEPath) -> int:
    from .ratpark import PathU, dinv_path

    g = gcd(delta.m, delta.n)
    return dinv_path(PathU(delta.m // g, delta.n // g, g, delta.u_vector()))


# series engine --------------------------------------------------------------------

# a ratio factor (i, j, c, den) stands for (1 - c z_i/z_j)^{-1 if den else 1}, i < j (0-based)
RatioFactor = tuple[int, int, Poly, bool]


def _omega_ratio_factors(i: int, j: int) -> list[RatioFactor]:
    """Omega[-M z_i/z_j] = (1-u)(1-qtu) / ((1-tu)(1-qu)), u = z_i/z_j."""
    return [(i, j, CTX.constant(1), False), (i, j, QP * TP, False), (i, j, TP, True), (i, j, QP, True)]


def _ratio_series(n: int, factors: list[RatioFactor], caps: tuple[int, ...],
                  bound: int | None) -> dict[tuple[int, ...], Poly]:
    """Product of the ratio factors as prefix-sum vector -> coefficient.

    Terms with S_k > caps[k] or sum(S) > bound are dropped.
    """
    if any(c < 0 for c in caps):
        return {}
    zero = (0,) * (n - 1)
    state: dict[tuple[int, ...], Poly] = {zero: CTX.constant(1)}

    def step(s: tuple[int, ...], i: int, j: int, r: int):
        if r == 0:
            return s
        new = list(s)
        for k in range(i, j):
            new[k] += r
            if new[k] > caps[k]:
                return None
        if bound is not None and sum(new) > bound:
            return None
        return tuple(new)

    for i, j, c, den in factors:
        out: dict[tuple[int, ...], Poly] = {}
        for s, v in state.items():
            if den:
                r, cr = 0, CTX.constant(1)
                while True:
                    key = step(s, i, j, r)
                    if key is None:
                        break
                    out[key] = out.get(key, 0) + cr * v
                    r += 1
                    cr = cr * c
            else:
                out[s] = out.get(s, 0) + v
                key = step(s, i, j, 1)
                if key is not None:
                    out[key] = out.get(key, 0) - c * v
        state = {k: v for k, v in out.items() if not v.is_zero()}
    return state


def _beta(s: tuple[int, ...]) -> tuple[int, ...]:
    """Exponent vector from its prefix sums (total exponent zero)."""
    full = (0,) + s + (0,)
    return tuple(full[k + 1] - full[k] for k in range(len(s) + 1))


def _prefix(a) -> tuple[int, ...]:
    out, acc = [], 0
    for x in a[:-1]:
        acc += x
        out.append(acc)
    return tuple(out)


def _chain_and_omega(n: int, chain: Poly, omega: bool) -> list[RatioFactor]:
    factors: list[RatioFactor] = [(i, i + 1, chain, True) for i in range(n - 1)]
    if omega:
        for i in range(n):
            for j in range(i + 1, n):
                factors.extend(_omega_ratio_factors(i, j))
    return factors


def _ct_at_bound(a: tuple[int, ...], chain: Poly, omega: bool, bound: int | None) -> QTRatio:
    """Constant term of Omega[z] z^{-a} prod 1/(1 - chain z_i/z_{i+1}) [prod Omega[-M z_i/z_j]]."""
    n = len(a)
    series = _ratio_series(n, _chain_and_omega(n, chain, omega), _prefix(a), bound)
    # Omega[z] = prod 1/(1 - z_k) supplies a - beta whenever that is non-negative
    acc = CTX.from_dict({})
    for s, v in series.items():
        if all(b <= x for b, x in zip(_beta(s), a)):
            acc += v
    return QTRatio(acc, reduced=True)


@dataclass(frozen=True)
class Stabilized:
    value: QTRatio
    bound: int


def stabilize(evaluate, start: int, max_bound: int = 1 << 16) -> Stabilized:
    """Double the truncation bound until two successive doublings leave the value unchanged."""
    if start < 1:
        start = 1
    bound = start
    values = [evaluate(bound), evaluate(2 * bound)]
    while True:
        values.append(evaluate(4 * bound))
        if values[-3] == values[-2] == values[-1]:
            return Stabilized(values[-3], bound)
        bound *= 2
        values = values[-2:]
        if 4 * bound > max_bound:
            raise NonStabilizingError(4 * bound)


def _series_ct(a: tuple[int, ...], chain: Poly, omega: bool, m: int) -> Stabilized:
    n = len(a)
    b0 = (m - 1) * (n - 1) + n * n
    return stabilize(lambda bound: _ct_at_bound(a, chain, omega, bound), b0)


# Catalan constant terms ---------------------------------------------------------

def a_sequence(m: int, n: int) -> tuple[int, ...]:
    return tuple((i * m) // n - ((i - 1) * m) // n for i in range(1, n + 1))


def _check_coprime(m: int, n: int, limits: Limits) -> None:
    if m < 1 or n < 1 or gcd(m, n) != 1:
        raise ValueError(f"need coprime positive (m, n), got ({m}, {n})")
    limits.check_mn(m, n)


def check_admissible(b) -> tuple[int, ...]:
    b = tuple(int(x) for x in b)
    if not b:
        raise ValueError("empty exponent sequence")
    if b[0] < 0 or any(x < -1 for x in b[1:]):
        raise ValueError(f"inadmissible exponents {b}: need b_1 >= 0 and b_i >= -1")
    return b


def negut_ct_stabilized(m: int, n: int, limits: Limits = DEFAULT_LIMITS) -> Stabilized:
    _check_coprime(m, n, limits)
    return _series_ct(a_sequence(m, n), QP * TP, True, m)


def negut_ct_at_bound(m: int, n: int, bound: int, limits: Limits = DEFAULT_LIMITS) -> QTRatio:
    """The truncated series at one fixed bound, without the stabilization loop."""
    _check_coprime(m, n, limits)
    return _ct_at_bound(a_sequence(m, n), QP * TP, True, bound)


def negut_ct(m: int, n: int, limits: Limits = DEFAULT_LIMITS) -> QTRatio:
    """C_{m,n}(q,t) from the constant term with exponents a_i(m,n), by truncated series."""
    return negut_ct_stabilized(m, n, limits).value


def _tableaux_integrand(b: tuple[int, ...]) -> FactoredRat:
    """Omega[z] z^{-b} prod_{i>=2} 1/(1 - qt z_i/z_{i-1}) prod_{i<j} Omega[-M z_j/z_i]."""
    n = len(b)
    num: list[LinearFactor] = []
    den: list[LinearFactor] = [_lf(1, {k: 1}) for k in range(1, n + 1)]
    qt = QTRatio(QP * TP, reduced=True)
    den += [_lf(qt, {i: 1, i - 1: -1}) for i in range(2, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            u = {j: 1, i: -1}
            num += [_lf(1, u), _lf(qt, u)]
            den += [_lf(QTRatio(TP, reduced=True), u), _lf(QTRatio(QP, reduced=True), u)]
    mono = ZMonomial.from_dict({k: -x for k, x in enumerate(b, start=1)})
    return FactoredRat.build(ONE, mono, num, den)


def tableaux_ct(b) -> QTRatio:
    """Sum over standard tableaux of the iteratively substituted integrand.

    At step d the guard factor (1 - z_d w_T(d)) is multiplied in and cancelled
    against the identical denominator factor before z_d = 1/w_T(d).
    """
    b = check_admissible(b)
    n = len(b)
    total = ZERO

    def walk(T: StdTableau, expr: FactoredRat):
        nonlocal total
        d = T.size + 1
        if d > n:
            total = total + expr.value()
            return
        for cell in T.outer_corners():
            T2 = T.add(cell)
            w = T2.weight(d)
            guarded = expr.times(LinearFactor(w, ZMonomial.var(d)))
            nxt = guarded.substitute(d, w.inverse())
            if nxt is not None:
                walk(T2, nxt)

    walk(StdTableau(), _tableaux_integrand(b))
    return total


def catalan_tableaux(m: int, n: int, limits: Limits = DEFAULT_LIMITS) -> QTRatio:
    _check_coprime(m, n, limits)
    return tableaux_ct(tuple(reversed(a_sequence(m, n))))


def catalan_pairing(m: int, n: int, limits: Limits = DEFAULT_LIMITS) -> QTRatio:
    """<Q_{m,n} (-1)^n, e_n> under the Hall scalar product."""
    from .operators import Q, apply

    _check_coprime(m, n, limits)
    value = apply(Q(m, n, limits), SymF.one().scale((-1) ** n), limits)
    return hall(value, e((n,)))


def generalized_b_ct_stabilized(b) -> Stabilized:
    b = check_admissible(b)
    a = tuple(reversed(b))
    return _series_ct(a, QP * TP, True, max(sum(b), 1))


def generalized_b_ct(b, method: str = "series") -> QTRatio:
    """The Catalan constant term with exponent sequence b in place of a(m,n), read right to left."""
    if method == "series":
        return generalized_b_ct_stabilized(b).value
    if method == "tableaux":
        return tableaux_ct(b)
    raise ValueError(f"unknown method {method!r}")


# path constant terms ------------------------------------------------------------

def _check_path(gamma: NEPath, limits: Limits) -> None:
    limits.check_lattice(gamma.m, gamma.n)


def path_ct_t_stabilized(gamma: NEPath, limits: Limits = DEFAULT_LIMITS) -> Stabilized:
    _check_path(gamma, limits)
    return _series_ct(gamma.e, TP, False, gamma.m)


def path_ct_t_at_bound(gamma: NEPath, bound: int, limits: Limits = DEFAULT_LIMITS) -> QTRatio:
    _check_path(gamma, limits)
    return _ct_at_bound(gamma.e, TP, False, bound)


def path_ct_t(gamma: NEPath, limits: Limits = DEFAULT_LIMITS) -> QTRatio:
    """Constant term with the t-chain only; a polynomial in t."""
    return path_ct_t_stabilized(gamma, limits).value


def path_sum_t(gamma: NEPath) -> QTRatio:
    """Direct enumeration: sum over delta >= gamma of t^{area(delta/gamma)}."""
    acc = CTX.from_dict({})
    for d in paths_above(gamma):
        acc += TP ** d.area_over(gamma)
    return QTRatio(acc, reduced=True)


@dataclass(frozen=True)
class ConjVReport:
    u: int
    v: int
    gamma: NEPath
    lhs: QTRatio
    rhs: QTRatio
    stabilized_at: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "u": self.u, "v": self.v, "gamma": list(self.gamma.e),
            "lhs": render(self.lhs), "rhs": render(self.rhs), "equal": self.equal,
            "stabilized_at": self.stabilized_at,
        }


def conjV_rhs(gamma: NEPath) -> QTRatio:
    acc = CTX.from_dict({})
    for d in paths_above(gamma):
        acc += TP ** d.area_over(gamma) * QP ** path_dinv(d)
    return QTRatio(acc, reduced=True)


def conjV_check(u: int, v: int, gamma: NEPath | None = None, limits: Limits = DEFAULT_LIMITS) -> ConjVReport:
    """Compare the full constant term against sum t^{area(delta/gamma)} q^{dinv(delta)}."""
    gamma = gamma or NEPath.closest(u, v)
    if (gamma.m, gamma.n) != (u, v):
        raise ValueError(f"path lives in the {gamma.m}x{gamma.n} lattice, not {u}x{v}")
    if not gamma.is_above_diagonal():
        raise ValueError(f"path {gamma.e} is not weakly above the diagonal")
    _check_path(gamma, limits)
    lhs = _series_ct(gamma.e, QP * TP, True, u)
    return ConjVReport(u, v, gamma, lhs.value, conjV_rhs(gamma), lhs.bound)


def q_one_slice(r: QTRatio) -> QTRatio:
    return specialize_q(r, 1)


def above_diagonal_paths(u: int, v: int) -> list[NEPath]:
    return [d for d in paths_above(NEPath.closest(u, v)) if d.is_above_diagonal()]


# operator chains ------------------------------------------------------------------

@lru_cache(maxsize=None)
def _m_power(j: int) -> Poly:
    return (1 - QP**j) * (1 - TP**j)


def _shift_terms(f: SymF, m: int) -> dict[tuple[tuple[int, ...], Partition], QTRatio]:
    """f[x + sum_i M/z_i] as (z exponents, kept p-partition) -> coefficient."""
    out: dict[tuple[tuple[int, ...], Partition], QTRatio] = {}
    for lam, c in f.terms.items():
        for choice in iproduct(range(-1, m), repeat=len(lam)):
            z = [0] * m
            kept: list[int] = []
            coeff = CTX.constant(1)
            for part, i in zip(lam, choice):
                if i < 0:
                    kept.append(part)
                else:
                    z[i] -= part
                    coeff *= _m_power(part)
            key = (tuple(z), tuple(kept))
            v = c * QTRatio(coeff, reduced=True)
            out[key] = out[key] + v if key in out else v
    return out


def d_chain_ct(alpha: Composition, f: SymF) -> SymF:
    """D_{a_m} ... D_{a_1} f through the multivariate constant term.

    The constant term is of f[x + sum M/z_i] Omega[-z x] z^{-alpha}
    prod_{i<j} Omega[-M z_i/z_j], with Omega[-z_i x] = sum_r (-z_i)^r e_r.
    """
    alpha = tuple(int(x) for x in alpha)
    m = len(alpha)
    if m == 0:
        return f
    shifted = _shift_terms(f, m)
    targets = {z: tuple(a - g for a, g in zip(alpha, z)) for z, _ in shifted}
    caps = tuple(max(p[k] for p in map(_prefix, targets.values())) for k in range(m - 1))
    factors: list[RatioFactor] = []
    for i in range(m):
        for j in range(i + 1, m):
            factors.extend(_omega_ratio_factors(i, j))
    series = {_beta(s): QTRatio(v, reduced=True) for s, v in _ratio_series(m, factors, caps, None).items()}
    acc: dict[Partition, QTRatio] = {}
    for (z, kept), c in shifted.items():
        need = targets[z]
        for beta, rv in series.items():
            r = [x - b for x, b in zip(need, beta)]
            if min(r) < 0:
                continue
            # kernel_p("E", r) is the p-expansion of (-1)^r e_r
            pieces: list[tuple[Partition, flint.fmpq]] = [(tuple(sorted(kept, reverse=True)), flint.fmpq(1))]
            for ri in r:
                pieces = [(merge(lam, mu), x * y) for lam, x in pieces for mu, y in kernel_p("E", ri).items()]
            w = c * rv
            for lam, x in pieces:
                v = w * QTRatio(x)
                acc[lam] = acc[lam] + v if lam in acc else v
    return SymF({k: v for k, v in acc.items() if not v.is_zero()}, clean=True)


# reports --------------------------------------------------------------------------

@dataclass(frozen=True)
class CTReport:
    method: str
    input: dict
    result: QTRatio
    stabilized_at: int | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"method": self.method, "input": self.input, "result": render(self.result),
               "stabilized_at": self.stabilized_at}
        out.update(self.extra)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def catalan_report(m: int, n: int, method: str, limits: Limits = DEFAULT_LIMITS) -> CTReport:
    inp = {"m": m, "n": n}
    if method == "series":
        st = negut_ct_stabilized(m, n, limits)
        return CTReport("series", inp, st.value, st.bound)
    if method == "tableaux":
        return CTReport("tableaux", inp, catalan_tableaux(m, n, limits))
    if method == "pairing":
        return CTReport("pairing", inp, catalan_pairing(m, n, limits))
    raise ValueError(f"unknown method {method!r}")


def catalan_count(m: int, n: int) -> int:
    return comb(m + n, n) // (m + n)


__all__ = [
    "ConstantTermError", "NonStabilizingError", "VanishingFactorError", "ZMonomial",
    "LinearFactor", "FactoredRat", "StdTableau", "standard_tableaux", "NEPath", "paths_above",
    "path_dinv", "Stabilized", "stabilize", "a_sequence", "check_admissible", "negut_ct",
    "negut_ct_stabilized", "negut_ct_at_bound", "tableaux_ct", "catalan_tableaux", "catalan_pairing",
    "generalized_b_ct", "generalized_b_ct_stabilized", "path_ct_t", "path_ct_t_stabilized", "path_ct_t_at_bound",
    "path_sum_t", "ConjVReport", "conjV_rhs", "conjV_check", "q_one_slice",
    "above_diagonal_paths", "d_chain_ct", "CTReport", "catalan_report", "catalan_count",
]
