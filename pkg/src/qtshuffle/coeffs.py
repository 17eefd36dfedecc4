"""Exact arithmetic in the field Q(q, t).

Polynomials are flint ``fmpq_mpoly`` objects in a single two-variable
context.  :class:`QTRatio` is a reduced fraction of two such polynomials and
is the coefficient type used everywhere else in the package.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from numbers import Rational

import flint

CTX = flint.fmpq_mpoly_ctx.get(("q", "t"), "lex")
Q, T = CTX.gens()
ZERO_POLY = CTX.from_dict({})
ONE_POLY = CTX.constant(1)


class EvaluationError(ArithmeticError):
    """Raised when a reduced denominator vanishes at the evaluation point."""


def to_fmpq(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    if isinstance(x, int):
        return flint.fmpq(x)
    if isinstance(x, Rational):
        return flint.fmpq(x.numerator, x.denominator)
    raise TypeError(f"not an exact rational: {x!r}")


def to_fraction(x: flint.fmpq) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def poly(x) -> flint.fmpq_mpoly:
    """Coerce ints, rationals and polynomials into the (q, t) polynomial ring."""
    if isinstance(x, flint.fmpq_mpoly):
        return x
    return CTX.constant(to_fmpq(x))


def poly_from_terms(terms: dict[tuple[int, int], object]) -> flint.fmpq_mpoly:
    return CTX.from_dict({e: to_fmpq(c) for e, c in terms.items() if c != 0})


def poly_terms(p: flint.fmpq_mpoly) -> dict[tuple[int, int], Fraction]:
    """Map ``(deg_q, deg_t) -> coefficient``; no zero entries."""
    return {tuple(e): to_fraction(c) for e, c in p.to_dict().items()}


def _lowest_coefficient(p: flint.fmpq_mpoly) -> flint.fmpq:
    # lex order lists terms with the largest (deg_q, deg_t) first
    return p.coeffs()[-1]


def _canon(num, den):
    if den.is_zero():
        raise ZeroDivisionError("QTRatio with zero denominator")
    if num.is_zero():
        return ZERO_POLY, ONE_POLY
    if not den.is_constant():
        g = num.gcd(den)
        if not g.is_one():
            num = num / g
            den = den / g
    c = _lowest_coefficient(den)
    if c != 1:
        num = num / c
        den = den / c
    return num, den


class QTRatio:
    """An element of Q(q, t) kept in reduced canonical form.

    The denominator is normalized so that its first term in ascending
    ``(deg_q, deg_t)`` order has coefficient 1.  Instances are immutable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1, *, reduced: bool = False):
        num = poly(num)
        den = poly(den)
        if not reduced:
            num, den = _canon(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("QTRatio is immutable")

    @classmethod
    def coerce(cls, x) -> "QTRatio":
        if isinstance(x, QTRatio):
            return x
        return cls(x)

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, QTRatio):
            try:
                other = QTRatio(other)
            except TypeError:
                return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return QTRatio(self.num + other.num, ONE_POLY, reduced=True)
        if self.den == other.den:
            return QTRatio(self.num + other.num, self.den)
        return QTRatio(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QTRatio(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        if not isinstance(other, QTRatio):
            try:
                other = QTRatio(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QTRatio):
            try:
                other = QTRatio(other)
            except TypeError:
                return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return QTRatio(self.num * other.num, ONE_POLY, reduced=True)
        return QTRatio(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "QTRatio":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q,t)")
        return QTRatio(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, QTRatio):
            try:
                other = QTRatio(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QTRatio(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return QTRatio(self.num**k, self.den**k, reduced=True)

    # comparison -------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, QTRatio):
            try:
                other = QTRatio(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((str(self.num), str(self.den)))

    def __repr__(self):
        return f"QTRatio({render(self)!r})"

    def __str__(self):
        return render(self)


ZERO = QTRatio(0)
ONE = QTRatio(1)
q = QTRatio(Q, reduced=True)
t = QTRatio(T, reduced=True)
M = QTRatio((1 - T) * (1 - Q), reduced=True)
M_TILDE = (1 - 1 / t) * (1 - 1 / q)


def normalize(r: QTRatio) -> QTRatio:
    """Reduce ``r``; every QTRatio is already reduced, so this is the identity
    on well-formed values and re-canonicalizes hand-built ones."""
    return QTRatio(r.num, r.den)


def adams(r, j: int) -> QTRatio:
    """Substitute q -> q^j and t -> t^j."""
    if j < 1:
        raise ValueError("adams index must be positive")
    r = QTRatio.coerce(r)
    if j == 1:
        return r
    qj, tj = Q**j, T**j
    return QTRatio(r.num.compose(qj, tj), r.den.compose(qj, tj))


def qt_int(a: int) -> QTRatio:
    """The qt-integer [a] = (1 - (qt)^a) / (1 - qt)."""
    return QTRatio(1 - (Q * T) ** a, 1 - Q * T)


def specialize(r, q0, t0) -> Fraction:
    """Evaluate ``r`` at rational ``(q0, t0)``; a pole raises EvaluationError."""
    r = QTRatio.coerce(r)
    a, b = to_fmpq(q0), to_fmpq(t0)
    d = r.den(a, b)
    if d == 0:
        raise EvaluationError(f"denominator {render_poly(r.den)} vanishes at q={q0}, t={t0}")
    return to_fraction(r.num(a, b) / d)


def specialize_q(r, q0) -> QTRatio:
    """Set q = q0 and keep t symbolic."""
    r = QTRatio.coerce(r)
    c = poly(q0)
    num, den = r.num.compose(c, T), r.den.compose(c, T)
    if den.is_zero():
        raise EvaluationError(f"denominator vanishes at q={q0}")
    return QTRatio(num, den)


def swap_qt(r) -> QTRatio:
    r = QTRatio.coerce(r)
    return QTRatio(r.num.compose(T, Q), r.den.compose(T, Q))


def invert_qt(r) -> QTRatio:
    """Substitute q -> 1/q, t -> 1/t."""
    r = QTRatio.coerce(r)
    return _laurent_sub(r.num) / _laurent_sub(r.den)


def _laurent_sub(p) -> QTRatio:
    if p.is_zero():
        return ZERO
    dq, dt = p.degrees()
    flipped = CTX.from_dict({(dq - a, dt - b): c for (a, b), c in p.to_dict().items()})
    return QTRatio(flipped, Q**dq * T**dt)


def coefficients_nonnegative_integers(r) -> bool:
    r = QTRatio.coerce(r)
    if not r.is_polynomial():
        return False
    return all(c.q == 1 and c >= 0 for c in r.num.coeffs())


def lcm_poly(polys) -> flint.fmpq_mpoly:
    def _lcm(a, b):
        if a.is_one():
            return b
        if b.is_one() or a == b:
            return a
        g = a.gcd(b)
        return a * (b / g)

    out = reduce(_lcm, polys, ONE_POLY)
    return out / _lowest_coefficient(out)


# text format ---------------------------------------------------------------

def _render_coeff(c: flint.fmpq) -> str:
    return str(int(c.p)) if c.q == 1 else f"{int(c.p)}/{int(c.q)}"


def render_poly(p: flint.fmpq_mpoly) -> str:
    """Terms in ascending (deg_q, deg_t) order, e.g. ``1 - q - t + q*t``."""
    if p.is_zero():
        return "0"
    items = sorted(p.to_dict().items())
    out = []
    for i, ((a, b), c) in enumerate(items):
        neg = c < 0
        mag = -c if neg else c
        vars_ = []
        if a:
            vars_.append("q" if a == 1 else f"q^{a}")
        if b:
            vars_.append("t" if b == 1 else f"t^{b}")
        if not vars_:
            body = _render_coeff(mag)
        elif mag == 1:
            body = "*".join(vars_)
        else:
            body = "*".join([_render_coeff(mag)] + vars_)
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def render(r) -> str:
    r = QTRatio.coerce(r)
    if r.den.is_one():
        return render_poly(r.num)
    return f"({render_poly(r.num)})/({render_poly(r.den)})"


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+)(?:/(\d+))?)?\s*\*?\s*((?:[qt](?:\^\d+)?\s*\*?\s*)*)"
)


def parse_poly(text: str) -> flint.fmpq_mpoly:
    text = text.strip()
    if text in ("", "0"):
        return ZERO_POLY
    terms: dict[tuple[int, int], Fraction] = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        sign, num, den, vars_ = m.groups()
        coeff = Fraction(int(num) if num else 1, int(den) if den else 1)
        if num is None and not vars_.strip():
            raise ValueError(f"empty term in {text!r}")
        if sign == "-":
            coeff = -coeff
        a = b = 0
        for var, exp in re.findall(r"([qt])(?:\^(\d+))?", vars_):
            e = int(exp) if exp else 1
            if var == "q":
                a += e
            else:
                b += e
        terms[(a, b)] = terms.get((a, b), 0) + coeff
        pos = m.end()
    return poly_from_terms(terms)


def parse(text: str) -> QTRatio:
    """Inverse of :func:`render`."""
    text = text.strip()
    if text.startswith("("):
        depth = 0
        for i, ch in enumerate(text):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0:
                break
        num = parse_poly(text[1:i])
        rest = text[i + 1 :].strip()
        if not rest:
            return QTRatio(num)
        if not (rest.startswith("/(") and rest.endswith(")")):
            raise ValueError(f"malformed QTRatio text {text!r}")
        return QTRatio(num, parse_poly(rest[2:-1]))
    return QTRatio(parse_poly(text))
