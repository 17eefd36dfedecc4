import csv
import io
from collections import Counter
from itertools import combinations_with_replacement
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtshuffle.coeffs import q, specialize, swap_qt, t
from qtshuffle.limits import LimitError, Limits
from qtshuffle.ratpark import (
    CSV_FIELDS, Filter, ParkingFn, PathU, all_parks, area, classical_dinv, comp_hits, diagonal_hits,
    dinv_path, enum_parks, enum_paths, hikita_sum, maxtdinv, maxtdinv_brute, path_sum, shuffle_member,
    stats, to_csv,
)

SMALL_TRIPLES = [(1, 1, 3), (1, 1, 4), (2, 3, 1), (3, 4, 1), (3, 5, 1), (1, 2, 2), (2, 1, 2), (1, 2, 3)]


def brute_paths(m, n, k):
    """Non-decreasing u with n u_i <= (i-1) m, found by filtering every multiset."""
    km, kn = k * m, k * n
    out = []
    for u in combinations_with_replacement(range(km), kn):
        if all(n * ui <= i * m for i, ui in enumerate(u)):
            out.append(u)
    return sorted(out)


@pytest.mark.parametrize("m,n,k", SMALL_TRIPLES)
def test_paths_match_brute_force(m, n, k):
    assert sorted(p.u for p in enum_paths(m, n, k)) == brute_paths(m, n, k)


@pytest.mark.parametrize("m,n", [(2, 3), (3, 2), (3, 4), (2, 5), (3, 5), (4, 5)])
def test_rational_catalan_count(m, n):
    assert len(enum_paths(m, n)) == comb(m + n, n) // (m + n)


@pytest.mark.parametrize("n", range(1, 6))
def test_classical_parking_function_count(n):
    assert len(all_parks(1, 1, n)) == (n + 1) ** (n - 1)


@pytest.mark.parametrize("n", range(1, 5))
def test_classical_dinv_matches_rank_dinv(n):
    for pf in all_parks(1, 1, n):
        assert stats(pf).dinv == classical_dinv(pf)


@pytest.mark.parametrize("m,n,k", SMALL_TRIPLES)
def test_maxtdinv_closed_form(m, n, k):
    for path in enum_paths(m, n, k):
        assert maxtdinv(path) == maxtdinv_brute(path)


@pytest.mark.parametrize("m,n", [(2, 3), (3, 4), (3, 5), (2, 7), (4, 5)])
def test_area_range_and_qt_symmetry(m, n):
    areas = [area(p) for p in enum_paths(m, n)]
    assert min(areas) == 0
    assert max(areas) == (m - 1) * (n - 1) // 2
    total = path_sum(m, n)
    assert swap_qt(total) == total


def test_path_sum_small_values():
    assert path_sum(2, 3) == q + t
    assert path_sum(3, 4) == q**3 + q**2 * t + q * t + q * t**2 + t**3


@pytest.mark.parametrize("m,n", [(2, 3), (3, 4), (3, 5), (2, 7), (5, 3)])
def test_weak_and_strict_dinv_agree_when_coprime(m, n):
    for path in enum_paths(m, n):
        assert dinv_path(path, True) == dinv_path(path, False)


def test_hikita_total_counts_parking_functions():
    for m, n, k in SMALL_TRIPLES[:6]:
        h = hikita_sum(m, n, k)
        assert sum(specialize(c, 1, 1) for c in h.coords.values()) == len(all_parks(m, n, k))


def test_parking_functions_per_path():
    # a column of height c contributes a factor choose(remaining, c)
    for path in enum_paths(1, 1, 4):
        expected, left = 1, 4
        for col in path.columns():
            expected *= comb(left, len(col))
            left -= len(col)
        assert len(enum_parks(path)) == expected


def test_diagonal_hits_and_filters():
    paths = enum_paths(1, 2, 3)
    by_comp = Counter(comp_hits(p) for p in paths)
    assert sum(by_comp.values()) == len(paths) == 12
    for p in paths:
        alpha = comp_hits(p)
        assert Filter.hits_exactly(alpha).accepts(p)
        assert Filter.hits_count(len(alpha)).accepts(p)
        assert sum(alpha) == 3
        assert len(diagonal_hits(p)) == len(alpha) - 1


def test_invalid_inputs():
    with pytest.raises(ValueError):
        PathU(2, 4, 1, (0, 0, 0, 1))
    with pytest.raises(ValueError):
        PathU(1, 1, 2, (1, 1))  # first north step must start at x = 0
    path = PathU(1, 1, 2, (0, 0))
    with pytest.raises(ValueError):
        ParkingFn(path, (2, 1))
    with pytest.raises(LimitError):
        enum_paths(1, 3, 3, Limits(kn_cap=8))


@settings(max_examples=50, deadline=None)
@given(st.permutations(range(1, 6)), st.sampled_from([(5,), (1, 4), (2, 3), (2, 2, 1), (1, 1, 1, 1, 1)]))
def test_shuffle_membership_brute_force(sigma, mu):
    # sigma is a shuffle of the blocks iff each block appears in increasing order
    blocks, start = [], 1
    for size in mu:
        blocks.append(list(range(start, start + size)))
        start += size
    expect = all([x for x in sigma if x in b] == b for b in blocks)
    assert shuffle_member(sigma, mu) == expect


def test_csv_export():
    text = to_csv(2, 3)
    rows = list(csv.DictReader(io.StringIO(text), delimiter=";"))
    assert tuple(rows[0]) == CSV_FIELDS
    assert len(rows) == len(all_parks(2, 3))
