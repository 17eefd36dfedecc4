"""Coordinates in the Gessel fundamental basis of quasisymmetric functions."""
from __future__ import annotations

from itertools import combinations

from ..coeffs import ZERO, QTRatio, render
from ..partitions import composition_to_subset, compositions, subset_to_composition
from .sym import SymF

Subset = tuple[int, ...]


class QSymCoords:
    """A degree-n element sum c_S F_S, keyed by subsets S of {1..n-1}."""

    __slots__ = ("degree", "coords")

    def __init__(self, degree: int, coords: dict[Subset, QTRatio] | None = None):
        self.degree = degree
        clean = {}
        for s_, c in (coords or {}).items():
            key = tuple(sorted(s_))
            if key and (key[0] < 1 or key[-1] > degree - 1):
                raise ValueError(f"subset {key} out of range for degree {degree}")
            c = QTRatio.coerce(c)
            if not c.is_zero():
                clean[key] = clean[key] + c if key in clean else c
        self.coords = {k: v for k, v in clean.items() if not v.is_zero()}

    def __getitem__(self, subset) -> QTRatio:
        return self.coords.get(tuple(sorted(subset)), ZERO)

    def __add__(self, other: "QSymCoords") -> "QSymCoords":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out[k] + v if k in out else v
        return QSymCoords(self.degree, out)

    def scale(self, c) -> "QSymCoords":
        c = QTRatio.coerce(c)
        return QSymCoords(self.degree, {k: v * c for k, v in self.coords.items()})

    def __eq__(self, other):
        if not isinstance(other, QSymCoords):
            return NotImplemented
        return self.degree == other.degree and self.coords == other.coords

    def __hash__(self):
        return hash((self.degree, frozenset(self.coords.items())))

    def map(self, fn) -> "QSymCoords":
        return QSymCoords(self.degree, {k: fn(v) for k, v in self.coords.items()})

    def differences(self, other: "QSymCoords") -> list[Subset]:
        keys = sorted(set(self.coords) | set(other.coords), key=lambda s: (len(s), s))
        return [k for k in keys if self[k] != other[k]]

    def pair_h(self, mu) -> QTRatio:
        """<f, h_mu> for symmetric f: the sum of c_S over S inside the partial sums of mu."""
        allowed = set(composition_to_subset(tuple(mu)))
        acc = ZERO
        for s_, c in self.coords.items():
            if allowed.issuperset(s_):
                acc = acc + c
        return acc

    def is_symmetric(self) -> bool:
        try:
            return qsym_coords(self.to_symf(check=False), self.degree) == self
        except ArithmeticError:
            return False

    def to_symf(self, check: bool = True) -> SymF:
        """The symmetric function with these coordinates: sum_mu <f, h_mu> m_mu."""
        from ..partitions import partitions

        coords = {mu: self.pair_h(mu) for mu in partitions(self.degree)} if self.degree else {(): self[()]}
        f = SymF.from_basis("m", {mu: c for mu, c in coords.items() if not c.is_zero()})
        if check and qsym_coords(f, self.degree) != self:
            raise ArithmeticError("coordinates are not those of a symmetric function")
        return f

    def to_json(self) -> dict:
        keys = sorted(self.coords, key=lambda s: (len(s), s))
        return {
            "degree": self.degree,
            "terms": [{"subset": list(k), "coeff": render(self.coords[k])} for k in keys],
        }

    def __repr__(self):
        inner = ", ".join(f"{list(k)}: {render(v)}" for k, v in sorted(self.coords.items()))
        return f"QSymCoords({self.degree}, {{{inner}}})"


def qsym_coords(f: SymF, n: int | None = None) -> QSymCoords:
    """Fundamental coordinates of a homogeneous symmetric function.

    The coefficient of M_alpha in f is the m-coefficient of sort(alpha); the
    relation F_S = sum_{T containing S} M_T is then inverted by inclusion-exclusion
    over subsets.
    """
    if n is None:
        n = f.degree()
    if f.degrees() - {n}:
        raise ValueError(f"expected a homogeneous function of degree {n}")
    mono = f.to_basis("m")
    mcoef: dict[Subset, QTRatio] = {}
    for alpha in compositions(n):
        c = mono.get(tuple(sorted(alpha, reverse=True)))
        if c is not None:
            mcoef[composition_to_subset(alpha)] = c
    out: dict[Subset, QTRatio] = {}
    for r in range(n):
        for sset in combinations(range(1, n), r):
            acc = ZERO
            for drop in range(r + 1):
                for sub in combinations(sset, r - drop):
                    c = mcoef.get(sub)
                    if c is not None:
                        acc = acc - c if drop % 2 else acc + c
            if not acc.is_zero():
                out[sset] = acc
    result = QSymCoords(n, out)
    _check_consistent(result, mcoef)
    return result


def _check_consistent(coords: QSymCoords, mcoef: dict[Subset, QTRatio]) -> None:
    for tset in set(mcoef) | set(coords.coords):
        total = ZERO
        for sset, c in coords.coords.items():
            if set(sset) <= set(tset):
                total = total + c
        if total != mcoef.get(tset, ZERO):
            raise ArithmeticError(f"fundamental expansion inconsistent at {tset}")


def from_ides(degree: int, weighted) -> QSymCoords:
    """Accumulate (subset, weight) pairs into coordinates."""
    acc: dict[Subset, QTRatio] = {}
    for sset, w in weighted:
        key = tuple(sset)
        acc[key] = acc[key] + w if key in acc else QTRatio.coerce(w)
    return QSymCoords(degree, acc)


def composition_of(subset: Subset, n: int):
    return subset_to_composition(subset, n)
