"""Words in the D_k operators, the SL2(Z) action on them, and Algorithm F.

An :class:`OpExpr` is a linear combination of words ``(k_1, ..., k_r)``, each
standing for the composite D_{k_1} D_{k_2} ... D_{k_r}; the rightmost letter
acts first.  The Q operators are produced by the recursion

    Q(1, v) = D_v
    Q(u, v) = S Q(u, v - u)        if u < v
    Q(u, v) = N Q(u - v, v)        if u > v
    Q(u, u) = M^{1-u} [delta_{D_1}^{u-2} D_2, D_0]

where S shifts every letter up by one and N replaces D_k by
(-1)^k M^{-k} delta_{D_1}^k D_0, with delta_Y X = XY - YX.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd

import flint

from .coeffs import M, ONE, QTRatio, lcm_poly, parse, q, render, t
from .limits import DEFAULT_LIMITS, LimitError, Limits
from .partitions import Partition, compositions, partitions
from .symfunc.plethysm import creation_op, kernel_p, merge, plethysm_linear
from .symfunc.sym import SymF, e, h

Word = tuple[int, ...]


# split --------------------------------------------------------------------------

@dataclass(frozen=True)
class SplitResult:
    ab: tuple[int, int]
    cd: tuple[int, int]

    def __iter__(self):
        return iter((self.ab, self.cd))

    def gamma(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """The matrix [[a, c], [b, d]]; its determinant is 1."""
        (a, b), (c, d) = self.ab, self.cd
        return ((a, c), (b, d))


def split(m: int, n: int) -> SplitResult:
    """Decompose a coprime (m, n) through the closest lattice point below its diagonal."""
    if m < 1 or n < 1:
        raise ValueError("split needs positive integers")
    if gcd(m, n) != 1:
        raise ValueError(f"split({m},{n}): pair is not coprime; divide out the gcd first")
    if m == 1:
        return SplitResult((1, n - 1), (0, 1))
    if n == 1:
        return SplitResult((1, 0), (m - 1, 1))
    for b in range(1, n):
        if (m * b + 1) % n == 0:
            a = (m * b + 1) // n
            return SplitResult((a, b), (m - a, n - b))
    raise AssertionError("no split found for a coprime pair")  # unreachable


def bracketing_pairs(m: int, n: int, k: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """For u = 1..k the pair ((k-u)m + c, (k-u)n + d), ((u-1)m + a, (u-1)n + b)."""
    (a, b), (c, d) = split(m, n)
    return [
        (((k - u) * m + c, (k - u) * n + d), ((u - 1) * m + a, (u - 1) * n + b))
        for u in range(1, k + 1)
    ]


# OpExpr -------------------------------------------------------------------------

class OpExpr:
    """Formal linear combination of words in the generators D_k."""

    __slots__ = ("words",)

    def __init__(self, words: dict[Word, QTRatio] | None = None):
        clean: dict[Word, QTRatio] = {}
        for w, c in (words or {}).items():
            c = QTRatio.coerce(c)
            if not c.is_zero():
                clean[tuple(int(k) for k in w)] = c
        self.words = clean

    @classmethod
    def identity(cls) -> "OpExpr":
        return cls({(): ONE})

    @classmethod
    def letter(cls, k: int) -> "OpExpr":
        return cls({(k,): ONE})

    @classmethod
    def word(cls, *letters: int) -> "OpExpr":
        return cls({tuple(letters): ONE})

    def is_zero(self) -> bool:
        return not self.words

    def __add__(self, other: "OpExpr") -> "OpExpr":
        out = dict(self.words)
        for w, c in other.words.items():
            out[w] = out[w] + c if w in out else c
        return OpExpr(out)

    def __neg__(self) -> "OpExpr":
        return OpExpr({w: -c for w, c in self.words.items()})

    def __sub__(self, other: "OpExpr") -> "OpExpr":
        return self + (-other)

    def scale(self, c) -> "OpExpr":
        c = QTRatio.coerce(c)
        return OpExpr({w: v * c for w, v in self.words.items()})

    def __mul__(self, other):
        """Composition: (x * y) applies y first."""
        if not isinstance(other, OpExpr):
            return self.scale(other)
        out: dict[Word, QTRatio] = {}
        for w1, c1 in self.words.items():
            for w2, c2 in other.words.items():
                w = w1 + w2
                v = c1 * c2
                out[w] = out[w] + v if w in out else v
        return OpExpr(out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "OpExpr":
        out = OpExpr.identity()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, OpExpr):
            return NotImplemented
        return self.words == other.words

    def __hash__(self):
        return hash(frozenset(self.words.items()))

    def degree_shifts(self) -> set[int]:
        return {sum(w) for w in self.words}

    def max_length(self) -> int:
        return max((len(w) for w in self.words), default=0)

    def sorted_words(self) -> list[Word]:
        return sorted(self.words, key=lambda w: (len(w), tuple(-k for k in w)))

    def to_json(self) -> dict:
        return {
            "words": [
                {"letters": list(w), "coeff": render(self.words[w])} for w in self.sorted_words()
            ]
        }

    @classmethod
    def from_json(cls, data: dict) -> "OpExpr":
        return cls({tuple(item["letters"]): parse(item["coeff"]) for item in data["words"]})

    def __repr__(self):
        parts = [f"({render(self.words[w])})*D{list(w)}" for w in self.sorted_words()]
        return "OpExpr(" + (" + ".join(parts) or "0") + ")"


def bracket(x: OpExpr, y: OpExpr) -> OpExpr:
    return x * y - y * x


def lie_derivative(x: OpExpr, y: OpExpr, times: int = 1) -> OpExpr:
    """delta_Y^times X, with delta_Y X = XY - YX."""
    for _ in range(times):
        x = bracket(x, y)
    return x


# SL2 action -----------------------------------------------------------------------

def S_act(x: OpExpr) -> OpExpr:
    return OpExpr({tuple(k + 1 for k in w): c for w, c in x.words.items()})


@lru_cache(maxsize=None)
def _n_image(k: int) -> OpExpr:
    if k < 0:
        raise ValueError("the N action is only expanded on non-negative letters")
    return lie_derivative(OpExpr.letter(0), OpExpr.letter(1), k).scale((-1) ** k * M ** (-k))


def N_act(x: OpExpr) -> OpExpr:
    out = OpExpr()
    for w, c in x.words.items():
        acc = OpExpr({(): c})
        for k in w:
            acc = acc * _n_image(k)
        out = out + acc
    return out


@lru_cache(maxsize=None)
def _q_cached(u: int, v: int) -> OpExpr:
    if u < 1:
        raise ValueError(f"Q({u},{v}) is not a word in the D_k (Q(0,1) multiplies by -e_1)")
    if u == 1:
        return OpExpr.letter(v)
    if v < 1:
        raise ValueError(f"Q({u},{v}) is not produced by the word recursion")
    if u < v:
        return S_act(_q_cached(u, v - u))
    if u > v:
        return N_act(_q_cached(u - v, v))
    inner = lie_derivative(OpExpr.letter(2), OpExpr.letter(1), u - 2)
    return bracket(inner, OpExpr.letter(0)).scale(M ** (1 - u))


def Q(m: int, n: int, limits: Limits = DEFAULT_LIMITS) -> OpExpr:
    """Q_{m,n} for positive m and non-negative n (Q_{1,0} = D_0)."""
    if m < 1 or n < 0:
        raise ValueError(f"Q({m},{n}) needs m >= 1 and n >= 0")
    limits.check_mn(m, n)
    return _q_cached(m, n)


def Q_by_split(m: int, n: int) -> OpExpr:
    """Q_{m,n} for coprime pairs through the commutator recursion on splits."""
    if m == 1:
        return OpExpr.letter(n)
    (a, b), (c, d) = split(m, n)
    return bracket(Q_by_split(c, d), Q_by_split(a, b)).scale(M**-1)


def Q_bracketing(m: int, n: int, k: int, u: int) -> OpExpr:
    """The u-th bracketing (1/M)[Q_{(k-u)m+c,(k-u)n+d}, Q_{(u-1)m+a,(u-1)n+b}]."""
    left, right = bracketing_pairs(m, n, k)[u - 1]
    return bracket(_q_cached(*left), _q_cached(*right)).scale(M**-1)


# commutator trees ---------------------------------------------------------------------
#
# The word expansions of large Q_{m,n} have hundreds of words with long
# letters; the same operators are far cheaper to evaluate in the nested
# commutator form the recursion produces.  A tree node is one of
#   ("D", k)            the letter D_k
#   ("c", coeff, X)     coeff * X
#   ("br", X, Y)        XY - YX
# Nodes are plain tuples built through cached constructors, so equal
# subtrees are shared objects.

OpTree = tuple


def tree_S(x: OpTree) -> OpTree:
    if x[0] == "D":
        return ("D", x[1] + 1)
    if x[0] == "c":
        return ("c", x[1], tree_S(x[2]))
    return ("br", tree_S(x[1]), tree_S(x[2]))


@lru_cache(maxsize=None)
def _n_tree(k: int) -> OpTree:
    if k < 0:
        raise ValueError("the N action is only expanded on non-negative letters")
    x: OpTree = ("D", 0)
    for _ in range(k):
        x = ("br", x, ("D", 1))
    return ("c", (-1) ** k * M ** (-k), x)


def tree_N(x: OpTree) -> OpTree:
    if x[0] == "D":
        return _n_tree(x[1])
    if x[0] == "c":
        return ("c", x[1], tree_N(x[2]))
    return ("br", tree_N(x[1]), tree_N(x[2]))


@lru_cache(maxsize=None)
def Q_tree(u: int, v: int) -> OpTree:
    """Q_{u,v} as a commutator tree; expands to the same words as :func:`Q`."""
    if u < 1:
        raise ValueError(f"Q({u},{v}) is not a word in the D_k (Q(0,1) multiplies by -e_1)")
    if u == 1:
        return ("D", v)
    if v < 1:
        raise ValueError(f"Q({u},{v}) is not produced by the word recursion")
    if u < v:
        return tree_S(Q_tree(u, v - u))
    if u > v:
        return tree_N(Q_tree(u - v, v))
    x: OpTree = ("D", 2)
    for _ in range(u - 2):
        x = ("br", x, ("D", 1))
    return ("c", M ** (1 - u), ("br", x, ("D", 0)))


def bracketing_tree(m: int, n: int, k: int, u: int) -> OpTree:
    left, right = bracketing_pairs(m, n, k)[u - 1]
    return ("c", M**-1, ("br", Q_tree(*left), Q_tree(*right)))


def expand_tree(x: OpTree) -> OpExpr:
    if x[0] == "D":
        return OpExpr.letter(x[1])
    if x[0] == "c":
        return expand_tree(x[2]).scale(x[1])
    return bracket(expand_tree(x[1]), expand_tree(x[2]))


@lru_cache(maxsize=None)
def _tree_profile(x: OpTree) -> tuple[int, int]:
    """(degree shift, largest rise above the input degree) of a homogeneous tree."""
    if x[0] == "D":
        return x[1], max(x[1], 0)
    if x[0] == "c":
        return _tree_profile(x[2])
    sa, pa = _tree_profile(x[1])
    sb, pb = _tree_profile(x[2])
    return sa + sb, max(pb, sb + pa, pa, sa + pb)


# application ------------------------------------------------------------------------

PolyVec = dict[Partition, flint.fmpq_mpoly]


@lru_cache(maxsize=None)
def _qt_powers(j: int) -> tuple[flint.fmpq_mpoly, flint.fmpq_mpoly]:
    return (q**j).num, (t**j).num


def _times_m(c: flint.fmpq_mpoly, j: int) -> flint.fmpq_mpoly:
    # (1 - q^j)(1 - t^j) c as two binomial steps; cheaper than one 4-term product
    qj, tj = _qt_powers(j)
    c = c - c * qj
    return c - c * tj


def _shifted(vec: PolyVec) -> dict[tuple[Partition, int], flint.fmpq_mpoly]:
    """Coefficients of z^{-r} p_kappa in f[x + M/z], keyed by (kappa, r).

    The parts are shifted one size at a time, so every product is by a single
    M(q^j, t^j) rather than by a product of them.
    """
    state = {(lam, 0): c for lam, c in vec.items()}
    for j in sorted({j for lam in vec for j in lam}):
        nxt: dict[tuple[Partition, int], flint.fmpq_mpoly] = {}
        for (lam, r), c in state.items():
            mult = lam.count(j)
            if not mult:
                key = (lam, r)
                nxt[key] = nxt[key] + c if key in nxt else c
                continue
            i = lam.index(j)
            cur = c
            for s in range(mult + 1):
                if s:
                    cur = _times_m(cur, j)
                key = (lam[:i] + lam[i + s:], r + j * s)
                v = cur * comb(mult, s) if 0 < s < mult else cur
                nxt[key] = nxt[key] + v if key in nxt else v
        state = nxt
    return state


def _apply_letter(k: int, vec: PolyVec, shifted=None) -> PolyVec:
    """D_k on a polynomial vector: sum_r (-1)^{k+r} e_{k+r} times the z^{-r} part."""
    if shifted is None:
        shifted = _shifted(vec)
    out: PolyVec = {}
    for (kappa, r), c in shifted.items():
        if k + r < 0:
            continue
        for mu, x in kernel_p("E", k + r).items():
            key = merge(kappa, mu)
            v = c * x
            out[key] = out[key] + v if key in out else v
    return {mu: v for mu, v in out.items() if not v.is_zero()}


def _to_polyvec(f: SymF) -> tuple[PolyVec, flint.fmpq_mpoly]:
    den = lcm_poly([c.den for c in f.terms.values()])
    return {lam: c.num * (den / c.den) for lam, c in f.terms.items()}, den


def _check_word_degrees(x: OpExpr, f: SymF, limits: Limits) -> None:
    top = max(f.degrees() | {0})
    for w in x.words:
        d, peak = top, top
        for k in reversed(w):
            d += k
            peak = max(peak, d)
        if peak > limits.degree_cap:
            raise LimitError(
                f"word D{list(w)} reaches degree {peak}, above the degree cap {limits.degree_cap}"
            )


def apply(x: OpExpr, f: SymF, limits: Limits = DEFAULT_LIMITS) -> SymF:
    """Apply a word expansion to f.

    Words sharing a right factor share the work: the words are arranged in a
    trie keyed by their reversed letters and evaluated depth first on vectors
    of polynomials (the D_k have polynomial coefficients in the p-basis).
    """
    if x.is_zero() or f.is_zero():
        return SymF.zero()
    _check_word_degrees(x, f, limits)
    vec, fden = _to_polyvec(f)
    opden = lcm_poly([c.den for c in x.words.values()])

    trie: dict = {}
    for w, c in x.words.items():
        node = trie
        for k in reversed(w):
            node = node.setdefault(k, {})
        node[None] = c.num * (opden / c.den)

    acc: PolyVec = {}

    def visit(node: dict, v: PolyVec) -> None:
        shifted = _shifted(v) if len(node) > 1 or None not in node else None
        for key, child in node.items():
            if key is None:
                for mu, val in v.items():
                    term = val * child
                    acc[mu] = acc[mu] + term if mu in acc else term
            else:
                nxt = _apply_letter(key, v, shifted)
                if nxt:
                    visit(child, nxt)

    visit(trie, vec)
    den = opden * fden
    return SymF({mu: QTRatio(v, den) for mu, v in acc.items() if not v.is_zero()})


class _Lazy:
    """M^{-e} (done + sum_k D_k pending[k]); the pending letters are applied
    only when the value is needed, so sums of terms ending in the same letter
    cost one application."""

    __slots__ = ("e", "done", "pending")

    def __init__(self, e: int, done: PolyVec, pending: dict[int, PolyVec]):
        self.e = e
        self.done = done
        self.pending = pending


def _vec_combine(a: PolyVec, b: PolyVec, sign: int = 1) -> PolyVec:
    out = dict(a)
    for k, v in b.items():
        if sign < 0:
            v = -v
        out[k] = out[k] + v if k in out else v
    return {k: v for k, v in out.items() if not v.is_zero()}


def _vec_scale(a: PolyVec, c) -> PolyVec:
    return {k: v * c for k, v in a.items()}


class _TreeEvaluator:
    def __init__(self):
        self.memo: dict = {}
        self.shift_cache: dict = {}
        self.mp = M.num

    def letter(self, k: int, vec: PolyVec) -> PolyVec:
        if not vec:
            return {}
        hit = self.shift_cache.get(id(vec))
        if hit is None or hit[0] is not vec:
            hit = (vec, _shifted(vec))
            self.shift_cache[id(vec)] = hit
        return _apply_letter(k, vec, hit[1])

    def force(self, val: _Lazy) -> tuple[PolyVec, int]:
        vec = val.done
        for k, v in val.pending.items():
            vec = _vec_combine(vec, self.letter(k, v))
        e = val.e
        while e > 0 and vec:
            try:
                vec = {k: v / self.mp for k, v in vec.items()}
            except Exception:
                break
            e -= 1
        return vec, e

    def scaled(self, val: _Lazy, c) -> _Lazy:
        return _Lazy(val.e, _vec_scale(val.done, c),
                     {k: _vec_scale(v, c) for k, v in val.pending.items()})

    def diff(self, a: _Lazy, b: _Lazy) -> _Lazy:
        if a.e < b.e:
            s = self.scaled(a, self.mp ** (b.e - a.e))
            a = _Lazy(b.e, s.done, s.pending)
        elif b.e < a.e:
            s = self.scaled(b, self.mp ** (a.e - b.e))
            b = _Lazy(a.e, s.done, s.pending)
        pending = dict(a.pending)
        for k, v in b.pending.items():
            pending[k] = _vec_combine(pending[k], v, -1) if k in pending else _vec_scale(v, -1)
        return _Lazy(a.e, _vec_combine(a.done, b.done, -1), pending)

    def run(self, x: OpTree, val: _Lazy) -> _Lazy:
        key = (id(x), id(val))
        hit = self.memo.get(key)
        if hit is not None:
            return hit[0]
        if x[0] == "D":
            vec, e = self.force(val)
            out = _Lazy(e, {}, {x[1]: vec})
        elif x[0] == "c":
            c, j = x[1], 0
            while not c.is_polynomial():
                c, j = c * M, j + 1
            inner = self.scaled(self.run(x[2], val), c.num)
            out = _Lazy(inner.e + j, inner.done, inner.pending)
        else:
            a, b = x[1], x[2]
            out = self.diff(self.run(a, self.run(b, val)), self.run(b, self.run(a, val)))
        # keep x and val alive so their ids stay unique for the memo's lifetime
        self.memo[key] = (out, x, val)
        return out


def apply_tree(x: OpTree, f: SymF, limits: Limits = DEFAULT_LIMITS) -> SymF:
    """Apply a commutator tree to f; agrees with ``apply(expand_tree(x), f)``."""
    if f.is_zero():
        return SymF.zero()
    top = max(f.degrees())
    peak = top + _tree_profile(x)[1]
    if peak > limits.degree_cap:
        raise LimitError(f"operator tree reaches degree {peak}, above the degree cap {limits.degree_cap}")
    ev = _TreeEvaluator()
    vec, fden = _to_polyvec(f)
    vec, e = ev.force(ev.run(x, _Lazy(0, vec, {})))
    den = fden * ev.mp**e
    return SymF({mu: QTRatio(v, den) for mu, v in vec.items()})


# operators as callables ---------------------------------------------------------------

class LinOp:
    """A linear operator on symmetric functions given by a Python callable.

    Used for the identities that mix D-words with multiplication operators,
    nabla and adjoints, which have no word expansion.
    """

    __slots__ = ("fn", "name")

    def __init__(self, fn: Callable[[SymF], SymF], name: str = "op"):
        self.fn = fn
        self.name = name

    def __call__(self, f: SymF) -> SymF:
        return self.fn(f)

    def __matmul__(self, other: "LinOp") -> "LinOp":
        return LinOp(lambda f: self(other(f)), f"{self.name}.{other.name}")

    def __add__(self, other: "LinOp") -> "LinOp":
        return LinOp(lambda f: self(f) + other(f), f"({self.name}+{other.name})")

    def __sub__(self, other: "LinOp") -> "LinOp":
        return LinOp(lambda f: self(f) - other(f), f"({self.name}-{other.name})")

    def scale(self, c) -> "LinOp":
        c = QTRatio.coerce(c)
        return LinOp(lambda f: self(f).scale(c), f"c*{self.name}")

    @classmethod
    def of(cls, x: OpExpr, limits: Limits = DEFAULT_LIMITS) -> "LinOp":
        return cls(lambda f: apply(x, f, limits), "word")

    @classmethod
    def creation(cls, mode: str, k: int) -> "LinOp":
        return cls(lambda f: creation_op(mode, k, f), f"{mode}{k}")

    @classmethod
    def multiply(cls, g: SymF) -> "LinOp":
        return cls(lambda f: g * f, "mult")


def commutator(a: LinOp, b: LinOp) -> LinOp:
    return a @ b - b @ a


def e1_perp(f: SymF) -> SymF:
    """Adjoint of multiplication by e_1: the derivative in p_1."""
    out: dict[Partition, QTRatio] = {}
    for lam, c in f.terms.items():
        ones = lam.count(1)
        if ones:
            key = lam[:-1]
            out[key] = out[key] + c * ones if key in out else c * ones
    return SymF(out)


# Phi and Psi ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def Phi(k: int) -> OpExpr:
    """Phi_1 = (1/M)[D_1, D_0], Phi_{k+1} = (1/M)[D_1, Phi_k]."""
    if k < 1:
        raise ValueError("Phi_k needs k >= 1")
    if k == 1:
        return bracket(OpExpr.letter(1), OpExpr.letter(0)).scale(M**-1)
    return bracket(OpExpr.letter(1), Phi(k - 1)).scale(M**-1)


def Psi(k: int, limits: Limits = DEFAULT_LIMITS) -> LinOp:
    """Psi_1 = -e_1 (multiplication), Psi_{k+1} = (1/M)[Psi_k, D_1]."""
    if k < 1:
        raise ValueError("Psi_k needs k >= 1")
    op = LinOp.multiply(-e(1))
    d1 = LinOp.of(OpExpr.letter(1), limits)
    for _ in range(k - 1):
        op = commutator(op, d1).scale(M**-1)
    return op


# Algorithm F ------------------------------------------------------------------------------

QT = q * t
_A = (1 - QT) / QT


def q0_multiplier(k: int) -> SymF:
    """The symmetric function whose multiplication operator is Q_{0,k}:
    (qt/(qt-1)) h_k[(1-qt) x / qt]."""
    return plethysm_linear(h(k), _A).scale(QT / (QT - 1))


def hl_basis(lam) -> SymF:
    """h_lam[x;q,t] = prod_i Q_{0,lam_i} applied to 1."""
    out = SymF.one()
    for part in lam:
        out = out * q0_multiplier(part)
    return out


def algF_expand(f: SymF) -> dict[Partition, QTRatio]:
    """Coordinates c_lam of f in the basis h_lam[x;q,t].

    Since h_lam[x;q,t] = (qt/(qt-1))^l h_lam[A x] with A = (1-qt)/qt, the
    coordinates are the h-coordinates of f[x/A] times ((qt-1)/qt)^l.
    """
    k = f.degree()
    if k < 1:
        raise ValueError("Algorithm F needs a homogeneous function of positive degree")
    g = plethysm_linear(f, 1 / _A)
    ratio = (QT - 1) / QT
    return {lam: c * ratio ** len(lam) for lam, c in g.to_basis("h").items()}


def build_F(f: SymF, m: int, n: int, limits: Limits = DEFAULT_LIMITS) -> OpExpr:
    """sum_lam c_lam prod_i Q_{m lam_i, n lam_i}."""
    if gcd(m, n) != 1:
        raise ValueError(f"build_F needs a coprime pair, got ({m},{n})")
    k = f.degree()
    limits.check_mn(k * m, k * n)
    out = OpExpr()
    for lam, c in algF_expand(f).items():
        term = OpExpr({(): c})
        for part in lam:
            term = term * _q_cached(m * part, n * part)
        out = out + term
    return out


# compositional operators ---------------------------------------------------------------------

def C_alpha(alpha: Iterable[int], f: SymF | None = None) -> SymF:
    """C_{a_1} C_{a_2} ... C_{a_r} f, the last factor acting first."""
    out = SymF.one() if f is None else f
    for a in reversed(tuple(alpha)):
        out = creation_op("C", a, out)
    return out


def B_alpha(beta: Iterable[int], f: SymF | None = None) -> SymF:
    out = SymF.one() if f is None else f
    for b in reversed(tuple(beta)):
        out = creation_op("B", b, out)
    return out


def E_kr(k: int, r: int) -> SymF:
    """E_{k,r} = sum over compositions of k with r parts of C_alpha . 1."""
    out = SymF.zero()
    for alpha in compositions(k):
        if len(alpha) == r:
            out = out + C_alpha(alpha)
    return out


def hl_vector(kind: str, data) -> SymF:
    if kind == "C":
        return C_alpha(data)
    if kind == "B":
        return B_alpha(data)
    if kind == "E":
        k, r = data
        return E_kr(k, r)
    raise ValueError(f"unknown vector kind {kind!r}")


def compositional_op(kind: str, data, m: int, n: int, k: int,
                     limits: Limits = DEFAULT_LIMITS) -> OpExpr:
    """Algorithm F applied to C_alpha.1, B_alpha.1, E_{k,r} or e_k."""
    if kind == "C" or kind == "B":
        alpha = tuple(data)
        if sum(alpha) != k:
            raise ValueError(f"composition {alpha} is not a composition of {k}")
        f = hl_vector(kind, alpha)
    elif kind == "E":
        if not 1 <= int(data) <= k:
            raise ValueError(f"E needs 1 <= r <= {k}")
        f = E_kr(k, int(data))
    elif kind == "e":
        f = e(k)
    else:
        raise ValueError(f"unknown compositional kind {kind!r}")
    return build_F(f, m, n, limits)


def conjecture_sign(n: int, k: int) -> int:
    """(-1)^{k(n+1)}, the sign of the constant the compositional operators act on."""
    return -1 if (k * (n + 1)) % 2 else 1


def apply_to_sign(x: OpExpr, sign: int, limits: Limits = DEFAULT_LIMITS) -> SymF:
    return apply(x, SymF.one().scale(sign), limits)


def e_operator_value(m: int, n: int, k: int, limits: Limits = DEFAULT_LIMITS) -> SymF:
    """e_{km,kn} applied to (-1)^{k(n+1)}."""
    return apply_to_sign(compositional_op("e", None, m, n, k, limits), conjecture_sign(n, k), limits)


def basis_up_to(degree: int, basis: str = "s") -> list[tuple[Partition, SymF]]:
    from .symfunc.sym import basis_functions

    parts = [lam for d in range(degree + 1) for lam in partitions(d)]
    return list(zip(parts, basis_functions(degree, basis)))


__all__ = [
    "SplitResult", "split", "bracketing_pairs", "OpExpr", "bracket", "lie_derivative",
    "S_act", "N_act", "Q", "Q_by_split", "Q_bracketing", "apply", "OpTree", "tree_S",
    "tree_N", "Q_tree", "bracketing_tree", "expand_tree", "apply_tree", "LinOp", "commutator",
    "e1_perp", "Phi", "Psi", "q0_multiplier", "hl_basis", "algF_expand", "build_F",
    "C_alpha", "B_alpha", "E_kr", "hl_vector", "compositional_op", "conjecture_sign",
    "apply_to_sign", "e_operator_value", "basis_up_to",
]
