from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtshuffle.coeffs import M, q, t
from qtshuffle.limits import LimitError, Limits
from qtshuffle.operators import (
    OpExpr, Q, Q_by_split, Q_bracketing, Q_tree, algF_expand, apply, apply_tree, bracket, bracketing_pairs,
    build_F, conjecture_sign, e1_perp, expand_tree, hl_basis, lie_derivative, split,
)
from qtshuffle.partitions import partitions
from qtshuffle.symfunc import D, SymF, e, hall, s

coprime = st.tuples(st.integers(1, 30), st.integers(1, 30)).filter(lambda mn: gcd(*mn) == 1)


@settings(max_examples=100, deadline=None)
@given(coprime)
def test_split_is_unimodular_and_sums_back(mn):
    m, n = mn
    (a, b), (c, d) = split(m, n)
    assert (a + c, b + d) == (m, n)
    assert a * d - b * c == 1
    assert min(a, b, c, d) >= 0


def test_split_small_values():
    assert tuple(split(3, 5)) == ((2, 3), (1, 2))
    assert tuple(split(2, 3)) == ((1, 1), (1, 2))
    assert tuple(split(1, 4)) == ((1, 3), (0, 1))
    assert tuple(split(4, 1)) == ((1, 0), (3, 1))
    with pytest.raises(ValueError):
        split(4, 6)
    assert bracketing_pairs(3, 2, 4)[0] == ((10, 7), (2, 1))
    assert bracketing_pairs(3, 2, 4)[3] == ((1, 1), (11, 7))


def test_q35_word_expansion():
    want = OpExpr({(2, 2, 1): M**-2, (2, 1, 2): -2 * M**-2, (1, 2, 2): M**-2})
    assert Q(3, 5) == want
    assert Q_by_split(3, 5) == want


@pytest.mark.parametrize("mn", [(2, 3), (3, 2), (3, 4), (2, 5), (4, 3), (5, 2)])
def test_sl2_recursion_agrees_with_split_recursion(mn):
    assert Q(*mn) == Q_by_split(*mn)
    assert expand_tree(Q_tree(*mn)) == Q(*mn)


@pytest.mark.parametrize("m,n,k", [(2, 1, 2), (2, 1, 3), (3, 2, 2), (2, 3, 2)])
def test_bracketings_agree_on_low_degree(m, n, k):
    values = [[apply(Q_bracketing(m, n, k, u), s(lam)) for lam in partitions(2)] for u in range(1, k + 1)]
    assert all(v == values[0] for v in values)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=3),
       st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=3),
       st.lists(st.tuples(st.integers(0, 2)), min_size=1, max_size=3))
def test_bracket_is_a_lie_bracket(xw, yw, zw):
    x, y, z = (OpExpr({w: 1 for w in ws}) for ws in (xw, yw, zw))
    assert bracket(x, y) == -bracket(y, x)
    jacobi = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert jacobi.is_zero()
    assert lie_derivative(x, y, 0) == x


def test_apply_matches_creation_operators():
    f = s((2, 1)) + e(1).scale(q)
    assert apply(OpExpr.letter(1), f) == D(1, f)
    assert apply(OpExpr.word(2, 0), f) == D(2, D(0, f))
    x = OpExpr({(1,): q, (0, 1): t})
    assert apply(x, f) == D(1, f).scale(q) + D(0, D(1, f)).scale(t)


@pytest.mark.parametrize("mn", [(2, 3), (3, 5), (3, 4)])
def test_tree_evaluation_matches_words(mn):
    f = SymF.one().scale(-1)
    assert apply_tree(Q_tree(*mn), f) == apply(Q(*mn), f)


def test_rational_catalan_through_pairing():
    # <Q_{2,3} (-1)^3, e_3> is the (2,3) Catalan polynomial
    val = apply(Q(2, 3), SymF.one().scale(-1))
    assert hall(val, e(3)) == q + t
    val = apply(Q(3, 4), SymF.one())
    assert hall(val, e(4)) == q**3 + q**2 * t + q * t + q * t**2 + t**3


@pytest.mark.parametrize("n", range(1, 4))
def test_algorithm_f_reassembles(n):
    for lam in partitions(n):
        f = s(lam)
        coords = algF_expand(f)
        back = SymF.zero()
        for mu, c in coords.items():
            back = back + hl_basis(mu).scale(c)
        assert back == f


def test_build_f_on_e1_is_minus_q():
    assert build_F(e(1), 2, 3) == -Q(2, 3)
    with pytest.raises(ValueError):
        build_F(e(1), 2, 4)


def test_e1_perp_is_adjoint():
    for f in (s((2, 1)), s((3,)), e(3)):
        for g in (s((2,)), s((1, 1))):
            assert hall(e(1) * g, f) == hall(g, e1_perp(f))


def test_conjecture_sign():
    assert conjecture_sign(2, 3) == -1
    assert conjecture_sign(1, 2) == 1
    assert conjecture_sign(2, 1) == -1


def test_limits_enforced():
    with pytest.raises(LimitError):
        Q(10, 10, Limits(mn_cap=14))
    with pytest.raises(ValueError):
        Q(0, 1)
    with pytest.raises(LimitError):
        apply(Q(3, 5), s((2, 2)), Limits(degree_cap=8))
