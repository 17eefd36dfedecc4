"""Symmetric functions with Q(q,t) coefficients, stored in the power-sum basis."""
from __future__ import annotations

import flint

from ..coeffs import ONE, QTRatio, adams, coefficients_nonnegative_integers, parse, q, render, t
from ..partitions import Partition, as_partition, partitions, sign, z_lambda
from . import bases

Scalar = QTRatio


def _scale(r: QTRatio, c: flint.fmpq) -> QTRatio:
    if c == 1:
        return r
    return QTRatio(r.num * c, r.den, reduced=True)


class SymF:
    """A finitely supported symmetric function sum c_lam p_lam.

    The mapping ``terms`` never holds zero coefficients.  Values are treated
    as immutable; all operations return new instances.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Partition, QTRatio] | None = None, *, clean: bool = False):
        if terms is None:
            terms = {}
        elif not clean:
            terms = {as_partition(k): QTRatio.coerce(v) for k, v in terms.items()}
            terms = {k: v for k, v in terms.items() if not v.is_zero()}
        self.terms = terms

    # construction ------------------------------------------------------------
    @classmethod
    def from_basis(cls, basis: str, coords: dict) -> "SymF":
        acc: dict[Partition, QTRatio] = {}
        for lam, c in coords.items():
            lam = as_partition(lam)
            c = QTRatio.coerce(c)
            if c.is_zero():
                continue
            for mu, d in bases.to_p(basis, sum(lam))[lam].items():
                acc[mu] = acc[mu] + _scale(c, d) if mu in acc else _scale(c, d)
        return cls({k: v for k, v in acc.items() if not v.is_zero()}, clean=True)

    @classmethod
    def one(cls) -> "SymF":
        return cls({(): ONE}, clean=True)

    @classmethod
    def zero(cls) -> "SymF":
        return cls({}, clean=True)

    # basis views -------------------------------------------------------------
    def to_basis(self, basis: str) -> dict[Partition, QTRatio]:
        if basis == "p":
            return dict(self.terms)
        acc: dict[Partition, QTRatio] = {}
        for mu, c in self.terms.items():
            for lam, d in bases.from_p(basis, sum(mu))[mu].items():
                acc[lam] = acc[lam] + _scale(c, d) if lam in acc else _scale(c, d)
        return {k: v for k, v in acc.items() if not v.is_zero()}

    def coefficient(self, basis: str, lam) -> QTRatio:
        return self.to_basis(basis).get(as_partition(lam), QTRatio(0))

    # grading -----------------------------------------------------------------
    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self.terms}

    def degree(self) -> int:
        """Degree of a homogeneous function (0 for the zero function)."""
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError(f"not homogeneous: degrees {sorted(ds)}")
        return ds.pop() if ds else 0

    def homogeneous(self, d: int) -> "SymF":
        return SymF({k: v for k, v in self.terms.items() if sum(k) == d}, clean=True)

    def is_zero(self) -> bool:
        return not self.terms

    # arithmetic --------------------------------------------------------------
    def __add__(self, other: "SymF") -> "SymF":
        if not isinstance(other, SymF):
            return NotImplemented
        acc = dict(self.terms)
        for k, v in other.terms.items():
            if k in acc:
                s = acc[k] + v
                if s.is_zero():
                    del acc[k]
                else:
                    acc[k] = s
            else:
                acc[k] = v
        return SymF(acc, clean=True)

    def __neg__(self) -> "SymF":
        return SymF({k: -v for k, v in self.terms.items()}, clean=True)

    def __sub__(self, other: "SymF") -> "SymF":
        return self + (-other)

    def scale(self, c) -> "SymF":
        c = QTRatio.coerce(c)
        if c.is_zero():
            return SymF.zero()
        return SymF({k: v * c for k, v in self.terms.items()}, clean=True)

    def __mul__(self, other):
        if isinstance(other, SymF):
            acc: dict[Partition, QTRatio] = {}
            for a, c in self.terms.items():
                for b, d in other.terms.items():
                    key = tuple(sorted(a + b, reverse=True))
                    v = c * d
                    acc[key] = acc[key] + v if key in acc else v
            return SymF({k: v for k, v in acc.items() if not v.is_zero()}, clean=True)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "SymF":
        out = SymF.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, SymF):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_coefficients(self, fn) -> "SymF":
        return SymF({k: fn(v) for k, v in self.terms.items()})

    def omega(self) -> "SymF":
        return SymF({k: v if sign(k) == 1 else -v for k, v in self.terms.items()}, clean=True)

    def __repr__(self):
        body = " + ".join(f"({render(c)})*p{list(lam)}" for lam, c in sorted(self.terms.items()))
        return f"SymF({body or '0'})"

    # serialization -----------------------------------------------------------
    def to_json(self, basis: str = "s") -> dict:
        coords = self.to_basis(basis)
        ds = sorted({sum(k) for k in coords}) or [0]
        order = {lam: i for d in ds for i, lam in enumerate(partitions(d))}
        keys = sorted(coords, key=lambda lam: (sum(lam), order[lam]))
        return {
            "basis": basis,
            "degree": ds[-1] if len(ds) == 1 else ds,
            "terms": [{"index": list(k), "coeff": render(coords[k])} for k in keys],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymF":
        coords = {tuple(item["index"]): parse(item["coeff"]) for item in data["terms"]}
        return cls.from_basis(data["basis"], coords)


# named functions ---------------------------------------------------------------

def _basis_element(basis: str, lam) -> SymF:
    if isinstance(lam, int):
        lam = (lam,) if lam else ()
    return SymF.from_basis(basis, {as_partition(lam): 1})


def p(lam) -> SymF:
    return _basis_element("p", lam)


def e(lam) -> SymF:
    return _basis_element("e", lam)


def h(lam) -> SymF:
    return _basis_element("h", lam)


def s(lam) -> SymF:
    return _basis_element("s", lam)


def m(lam) -> SymF:
    return _basis_element("m", lam)


def convert_basis(f: SymF, basis: str) -> dict[Partition, QTRatio]:
    return f.to_basis(basis)


def basis_functions(max_degree: int, basis: str = "p") -> list[SymF]:
    """All basis elements of degree <= max_degree."""
    return [_basis_element(basis, lam) for d in range(max_degree + 1) for lam in partitions(d)]


# scalar products ---------------------------------------------------------------

def hall(f: SymF, g: SymF) -> QTRatio:
    """Hall scalar product, <p_lam, p_mu> = z_mu delta."""
    acc = QTRatio(0)
    small, big = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    for lam, c in small.terms.items():
        d = big.terms.get(lam)
        if d is not None:
            acc = acc + c * d * z_lambda(lam)
    return acc


def _star_weight(mu: Partition) -> QTRatio:
    w = QTRatio(sign(mu) * z_lambda(mu))
    for part in mu:
        w = w * adams((1 - t) * (1 - q), part)
    return w


def star(f: SymF, g: SymF) -> QTRatio:
    """The *-scalar product <p_lam,p_mu>_* = (-1)^{|mu|-l(mu)} prod (1-t^mu_i)(1-q^mu_i) z_mu."""
    acc = QTRatio(0)
    for lam, c in f.terms.items():
        d = g.terms.get(lam)
        if d is not None:
            acc = acc + c * d * _star_weight(lam)
    return acc


def is_schur_positive(f: SymF) -> bool:
    return all(coefficients_nonnegative_integers(c) for c in f.to_basis("s").values())


def schur_negative_terms(f: SymF) -> list[Partition]:
    return [lam for lam, c in f.to_basis("s").items() if not coefficients_nonnegative_integers(c)]


def total(fs) -> SymF:
    out = SymF.zero()
    for f in fs:
        out = out + f
    return out


__all__ = [
    "SymF", "p", "e", "h", "s", "m", "hall", "star", "convert_basis", "basis_functions",
    "is_schur_positive", "schur_negative_terms", "total",
]
