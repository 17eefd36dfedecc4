"""Modified Macdonald polynomials H~_mu and the operators diagonal in them.

H~_mu is computed as the eigenvector of D_0 on the degree-n space with
eigenvalue -D_mu, where D_mu = M B_mu - 1, scaled so that its s_(n)
coefficient is 1.  Each built basis is checked for *-orthogonality,
dominance triangularity and the e_n reassembly before it is handed out.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import flint

from .coeffs import M, ONE, ZERO, QTRatio, invert_qt, q, t
from .limits import DEFAULT_LIMITS, Limits
from .partitions import Partition, arm, as_partition, cells, conjugate, dominates, leg, n_stat, partitions
from .symfunc.plethysm import creation_on_p, plethysm_scalar
from .symfunc.sym import SymF, e, h, s, star

FORMAT_VERSION = 1


class MacdonaldError(RuntimeError):
    """A basis failed one of its construction checks."""


class MissingBasisError(LookupError):
    """An operator needed a degree whose basis has not been built."""


# partition statistics --------------------------------------------------------------

@dataclass(frozen=True)
class CellData:
    row: int
    col: int
    arm: int
    leg: int

    @property
    def coarm(self) -> int:
        return self.col

    @property
    def coleg(self) -> int:
        return self.row


@dataclass(frozen=True)
class MuStats:
    mu: Partition
    n_mu: int
    T: QTRatio
    B: QTRatio
    Pi: QTRatio
    w: QTRatio
    D: QTRatio
    cells: tuple[CellData, ...] = field(repr=False)


@lru_cache(maxsize=None)
def mu_stats(mu) -> MuStats:
    mu = as_partition(mu)
    data = tuple(CellData(i, j, arm(mu, i, j), leg(mu, i, j)) for i, j in cells(mu))
    B, Pi, w = ZERO, ONE, ONE
    for c in data:
        mono = t**c.coleg * q**c.coarm
        B = B + mono
        if (c.row, c.col) != (0, 0):
            Pi = Pi * (1 - mono)
        w = w * (q**c.arm - t ** (c.leg + 1)) * (t**c.leg - q ** (c.arm + 1))
    n_mu = n_stat(mu)
    T = t**n_mu * q ** n_stat(conjugate(mu))
    return MuStats(mu, n_mu, T, B, Pi, w, M * B - 1, data)


# exact eigenvector ---------------------------------------------------------------------

def _null_vector(rows: list[list[flint.fmpq_mpoly]]) -> list[QTRatio]:
    """A non-zero kernel vector of a polynomial matrix of corank one.

    Fraction-free elimination with the content of every row divided out,
    then back substitution over Q(q,t).
    """
    rows = [list(r) for r in rows]
    d = len(rows[0])
    pivots: list[int] = []
    r0 = 0
    for col in range(d):
        piv = next((i for i in range(r0, len(rows)) if not rows[i][col].is_zero()), None)
        if piv is None:
            continue
        rows[r0], rows[piv] = rows[piv], rows[r0]
        p_row = rows[r0]
        a = p_row[col]
        for i in range(r0 + 1, len(rows)):
            b = rows[i][col]
            if b.is_zero():
                continue
            g = a.gcd(b)
            fa, fb = a / g, b / g
            new = [fa * x - fb * y for x, y in zip(rows[i], p_row)]
            content = None
            for x in new:
                if not x.is_zero():
                    content = x if content is None else content.gcd(x)
                    if content.is_constant():
                        break
            if content is not None and not content.is_constant():
                new = [x / content for x in new]
            rows[i] = new
        pivots.append(col)
        r0 += 1
        if r0 == len(rows):
            break
    free = [c for c in range(d) if c not in pivots]
    if len(free) != 1:
        raise MacdonaldError(f"eigenspace has dimension {len(free)}, expected 1")
    v: list[QTRatio] = [ZERO] * d
    v[free[0]] = ONE
    for i in reversed(range(len(pivots))):
        col = pivots[i]
        acc = ZERO
        for j in range(col + 1, d):
            if not rows[i][j].is_zero() and not v[j].is_zero():
                acc = acc + QTRatio(rows[i][j]) * v[j]
        v[col] = -acc / QTRatio(rows[i][col])
    return v


@lru_cache(maxsize=None)
def _d0_matrix(n: int) -> tuple[tuple[flint.fmpq_mpoly, ...], ...]:
    """Row mu, column lam: coefficient of p_mu in D_0 p_lam."""
    parts = partitions(n)
    idx = {lam: i for i, lam in enumerate(parts)}
    mat = [[flint.fmpq_mpoly(0, M.num.context()) for _ in parts] for _ in parts]
    for j, lam in enumerate(parts):
        for mu, c in creation_on_p("D", 0, lam).items():
            mat[idx[mu]][j] = c.num
    return tuple(tuple(r) for r in mat)


def _eigenvector(mu: Partition) -> SymF:
    n = sum(mu)
    parts = partitions(n)
    shift = mu_stats(mu).D.num
    mat = [list(r) for r in _d0_matrix(n)]
    for i in range(len(parts)):
        mat[i][i] = mat[i][i] + shift
    v = _null_vector(mat)
    # the s_(n) coefficient of sum c_lam p_lam is sum c_lam
    total = ZERO
    for c in v:
        total = total + c
    if total.is_zero():
        raise MacdonaldError(f"H~_{list(mu)} has zero s_({n}) coefficient; normalization undefined")
    return SymF({lam: c / total for lam, c in zip(parts, v) if not c.is_zero()}, clean=True)


# the basis -----------------------------------------------------------------------------

class MacdonaldBasis:
    """H~_mu for all mu |- n, with the expansion maps into and out of it."""

    def __init__(self, degree: int, htilde: dict[Partition, SymF]):
        self.degree = degree
        self.htilde = dict(htilde)
        self._schur_inverse: dict[Partition, dict[Partition, QTRatio]] | None = None

    def __getitem__(self, mu) -> SymF:
        return self.htilde[as_partition(mu)]

    def expand(self, f: SymF) -> dict[Partition, QTRatio]:
        """Coordinates of a degree-n function: c_mu = <f, H~_mu>_* / w_mu."""
        out = {}
        for mu, H in self.htilde.items():
            c = star(f, H) / mu_stats(mu).w
            if not c.is_zero():
                out[mu] = c
        return out

    def assemble(self, coords: dict) -> SymF:
        out: dict[Partition, QTRatio] = {}
        for mu, c in coords.items():
            c = QTRatio.coerce(c)
            for lam, d in self.htilde[as_partition(mu)].terms.items():
                v = c * d
                out[lam] = out[lam] + v if lam in out else v
        return SymF({k: v for k, v in out.items() if not v.is_zero()}, clean=True)

    def schur_inverse(self) -> dict[Partition, dict[Partition, QTRatio]]:
        """s_lam in the H~ basis."""
        if self._schur_inverse is None:
            self._schur_inverse = {lam: self.expand(s(lam)) for lam in partitions(self.degree)}
        return self._schur_inverse

    def to_json(self) -> dict:
        return {
            "version": FORMAT_VERSION,
            "degree": self.degree,
            "entries": [
                {"mu": list(mu), "Htilde": self.htilde[mu].to_json("s")}
                for mu in partitions(self.degree)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MacdonaldBasis":
        if data.get("version") != FORMAT_VERSION:
            raise MacdonaldError(f"unsupported basis format version {data.get('version')!r}")
        n = int(data["degree"])
        return cls(n, {tuple(item["mu"]): SymF.from_json(item["Htilde"]) for item in data["entries"]})


def modified_schur_coords(f: SymF, n: int) -> dict[Partition, QTRatio]:
    """Coordinates of f in the basis s_lam[x/(t-1)], i.e. the Schur coordinates of f[x(t-1)]."""
    from .symfunc.plethysm import plethysm_linear

    return plethysm_linear(f, t - 1).to_basis("s")


def validate(basis: MacdonaldBasis) -> None:
    """Orthogonality, dominance triangularity and e_n reassembly; raises on failure."""
    n = basis.degree
    parts = partitions(n)
    for i, lam in enumerate(parts):
        for mu in parts[i:]:
            val = star(basis[lam], basis[mu])
            want = mu_stats(mu).w if lam == mu else ZERO
            if val != want:
                raise MacdonaldError(f"<H~_{list(lam)}, H~_{list(mu)}>_* is {val}, expected {want}")
    for mu in parts:
        for lam in modified_schur_coords(basis[mu], n):
            if not dominates(mu, lam):
                raise MacdonaldError(
                    f"H~_{list(mu)} has a modified Schur term s_{list(lam)} outside the dominance order ideal"
                )
    en, _ = en_hn_coefficients(n)
    if basis.assemble(en) != e(n):
        raise MacdonaldError(f"the e_{n} expansion does not reassemble at degree {n}")


# registry --------------------------------------------------------------------------------

_BUILT: dict[int, MacdonaldBasis] = {}


def build_basis(n: int, limits: Limits = DEFAULT_LIMITS, cache=None, check: bool = True) -> MacdonaldBasis:
    """Build (or fetch) the H~ basis of degree n.

    ``cache`` is any object with ``get_json(key)`` and ``put_json(key, data)``;
    the harness cache fits.  A basis loaded from the cache is validated like
    a fresh one.
    """
    if n < 1:
        raise ValueError("the Macdonald basis is built for degree >= 1")
    limits.check_degree(n)
    if n in _BUILT:
        return _BUILT[n]
    key = f"macdonald-v{FORMAT_VERSION}-n{n}"
    basis = None
    if cache is not None:
        data = cache.get_json(key)
        if data is not None:
            basis = MacdonaldBasis.from_json(data)
    fresh = basis is None
    if fresh:
        basis = MacdonaldBasis(n, {mu: _eigenvector(mu) for mu in partitions(n)})
    if check:
        validate(basis)
    if fresh and cache is not None:
        cache.put_json(key, basis.to_json())
    _BUILT[n] = basis
    return basis


def built_degrees() -> list[int]:
    return sorted(_BUILT)


def forget_bases() -> None:
    """Drop the in-memory bases; the next request rebuilds or reloads them."""
    _BUILT.clear()


def _require(n: int) -> MacdonaldBasis:
    if n not in _BUILT:
        raise MissingBasisError(f"no Macdonald basis of degree {n}; call build_basis({n}) first")
    return _BUILT[n]


def ensure_bases(max_degree: int, limits: Limits = DEFAULT_LIMITS, cache=None) -> None:
    for n in range(1, max_degree + 1):
        build_basis(n, limits, cache)


# eigenoperators -----------------------------------------------------------------------------

def _diagonal(f: SymF, weight) -> SymF:
    out = SymF.zero()
    for d in sorted(f.degrees()):
        part = f.homogeneous(d)
        if d == 0:
            out = out + part.scale(weight(()))
            continue
        basis = _require(d)
        coords = {mu: c * weight(mu) for mu, c in basis.expand(part).items()}
        out = out + basis.assemble(coords)
    return out


def nabla(f: SymF) -> SymF:
    """nabla H~_mu = T_mu H~_mu (and nabla 1 = 1)."""
    return _diagonal(f, lambda mu: mu_stats(mu).T if mu else ONE)


def nabla_inverse(f: SymF) -> SymF:
    return _diagonal(f, lambda mu: 1 / mu_stats(mu).T if mu else ONE)


def delta(g: SymF, f: SymF) -> SymF:
    """Delta_g H~_mu = g[B_mu] H~_mu."""
    return _diagonal(f, lambda mu: plethysm_scalar(g, mu_stats(mu).B if mu else ZERO))


def en_hn_coefficients(n: int) -> tuple[dict[Partition, QTRatio], dict[Partition, QTRatio]]:
    """H~-coordinates of e_n and h_n from the closed products."""
    sign = (-q * t) ** (n - 1)
    en, hn = {}, {}
    for mu in partitions(n):
        st = mu_stats(mu)
        en[mu] = M * st.B * st.Pi / st.w
        hn[mu] = sign * M * invert_qt(st.B) * st.Pi / st.w
    return en, hn


def en_hn_expansions(n: int) -> tuple[dict[Partition, QTRatio], dict[Partition, QTRatio]]:
    """The closed-form coordinates, checked against the built basis."""
    basis = _require(n)
    en, hn = en_hn_coefficients(n)
    if basis.assemble(en) != e(n) or basis.assemble(hn) != h(n):
        raise MacdonaldError(f"e_{n}/h_{n} closed forms do not reassemble")
    return en, hn


__all__ = [
    "MuStats", "CellData", "mu_stats", "MacdonaldBasis", "MacdonaldError", "MissingBasisError",
    "build_basis", "ensure_bases", "built_degrees", "forget_bases", "validate", "modified_schur_coords", "nabla",
    "nabla_inverse", "delta", "en_hn_coefficients", "en_hn_expansions", "FORMAT_VERSION",
]
