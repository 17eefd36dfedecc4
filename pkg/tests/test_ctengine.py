from itertools import combinations_with_replacement
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtshuffle.coeffs import q, specialize, swap_qt, t
from qtshuffle.ctengine import (
    NEPath, NonStabilizingError, above_diagonal_paths, a_sequence, catalan_count, catalan_pairing,
    catalan_report, catalan_tableaux, check_admissible, conjV_check, d_chain_ct, generalized_b_ct, negut_ct,
    path_ct_t, path_sum_t, paths_above, stabilize, standard_tableaux,
)
from qtshuffle.limits import LimitError, Limits
from qtshuffle.partitions import cells, partitions
from qtshuffle.symfunc import D, e, s

PAIRS = [(1, 2), (1, 3), (2, 3), (3, 2), (2, 5), (3, 4)]


def hook_length_count(lam):
    prod = 1
    for i, j in cells(lam):
        arm = lam[i] - j - 1
        leg = sum(1 for r in lam[i + 1:] if r > j)
        prod *= arm + leg + 1
    return factorial(sum(lam)) // prod


@pytest.mark.parametrize("n", range(1, 7))
def test_standard_tableaux_hook_length(n):
    shapes = [T.shape for T in standard_tableaux(n)]
    for lam in partitions(n):
        assert shapes.count(lam) == hook_length_count(lam)


@pytest.mark.parametrize("m,n", PAIRS)
def test_three_catalan_methods_agree(m, n):
    ct = negut_ct(m, n)
    assert ct == catalan_tableaux(m, n)
    assert ct == catalan_pairing(m, n)
    assert specialize(ct, 1, 1) == catalan_count(m, n)
    assert swap_qt(ct) == ct


def test_catalan_small_values():
    assert negut_ct(2, 3) == q + t
    assert negut_ct(1, 3) == 1
    assert negut_ct(3, 4) == q**3 + q**2 * t + q * t + q * t**2 + t**3


def test_a_sequence():
    assert a_sequence(3, 5) == (0, 1, 0, 1, 1)
    assert sum(a_sequence(5, 3)) == 5


def test_generalized_exponents_two_methods():
    for b in [(1, 0, 0), (2, 0), (1, 1, -1), (0, 1, 0), (2, -1, 1)]:
        assert generalized_b_ct(b, "series") == generalized_b_ct(b, "tableaux")
    with pytest.raises(ValueError):
        check_admissible((0, -2))
    with pytest.raises(ValueError):
        generalized_b_ct((1,), "nope")


def test_stabilize_protocol():
    assert stabilize(lambda b: min(b, 40), 3).value == 40
    with pytest.raises(NonStabilizingError):
        stabilize(lambda b: b, 1, max_bound=256)


@pytest.mark.parametrize("u,v", [(2, 3), (3, 3), (3, 4), (4, 4)])
def test_paths_above_brute_force(u, v):
    for gamma in above_diagonal_paths(u, v):
        r = gamma.heights()
        brute = [h for h in combinations_with_replacement(range(1, v + 1), u) if all(x >= y for x, y in zip(h, r))]
        got = sorted(d.heights() for d in paths_above(gamma))
        assert got == sorted(brute)


@pytest.mark.parametrize("u,v", [(2, 3), (3, 3), (2, 4), (3, 4)])
def test_t_chain_constant_term_counts_paths_above(u, v):
    for gamma in above_diagonal_paths(u, v):
        assert path_ct_t(gamma) == path_sum_t(gamma)


def test_nepath_validation():
    with pytest.raises(ValueError):
        NEPath(3, 2, (1, 1))
    gamma = NEPath.closest(3, 5)
    assert gamma.is_above_diagonal()
    assert NEPath.topmost(3, 5) >= gamma
    assert not NEPath(2, 2, (2, 0)).is_above_diagonal()


def test_conj_v_report_fields():
    rep = conjV_check(2, 3)
    assert rep.equal
    assert rep.to_json()["equal"] is True
    with pytest.raises(LimitError):
        conjV_check(9, 9, limits=Limits(lattice_cap=8))


@settings(max_examples=15, deadline=None)
@given(st.lists(st.integers(-1, 2), min_size=1, max_size=3),
       st.sampled_from([s((1,)), s((2,)), s((1, 1)), e(1) * e(1)]))
def test_chain_constant_term_matches_operators(alpha, f):
    want = f
    for a in alpha:
        want = D(a, want)
    assert d_chain_ct(tuple(alpha), f) == want


def test_report_json_is_stable():
    a = catalan_report(2, 3, "series").dumps()
    b = catalan_report(2, 3, "series").dumps()
    assert a == b and '"result": "t + q"' in a
    with pytest.raises(ValueError):
        catalan_report(2, 3, "magic")
    with pytest.raises(ValueError):
        negut_ct(2, 4)
