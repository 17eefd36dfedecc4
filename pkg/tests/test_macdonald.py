from itertools import product

import pytest

from qtshuffle.coeffs import ZERO, invert_qt, poly_from_terms, q, swap_qt, t
from qtshuffle.limits import LimitError, Limits
from qtshuffle.macdonald import (
    MacdonaldBasis, MacdonaldError, MissingBasisError, build_basis, delta, en_hn_expansions, forget_bases,
    mu_stats, nabla, nabla_inverse,
)
from qtshuffle.partitions import conjugate, partitions
from qtshuffle.symfunc import D, Dstar, SymF, e, h, hall, s, star


# brute-force oracle: the filling formula ------------------------------------------------

def hhl(mu):
    """H~_mu in the monomial basis, summed over all fillings of the diagram.

    Rows are numbered from the bottom.  A descent is a cell strictly larger
    than the cell below it; maj adds leg + 1 per descent.  Attacking pairs are
    two cells in one row, or a cell and a cell one row down strictly to its
    left; inv counts attacking pairs out of reading order (top row first,
    left to right) minus the arms of the descents.
    """
    n = sum(mu)
    cells = [(r, c) for r, length in enumerate(mu) for c in range(length)]
    reading = sorted(cells, key=lambda rc: (-rc[0], rc[1]))
    pos = {cell: i for i, cell in enumerate(reading)}
    arm = {(r, c): mu[r] - c - 1 for r, c in cells}
    leg = {(r, c): sum(1 for rr in range(r + 1, len(mu)) if mu[rr] > c) for r, c in cells}
    attacking = []
    for a in cells:
        for b in cells:
            if pos[a] < pos[b] and (a[0] == b[0] or (a[0] == b[0] + 1 and a[1] > b[1])):
                attacking.append((a, b))
    acc = {}
    for values in product(range(1, n + 1), repeat=n):
        content = [values.count(v) for v in range(1, n + 1)]
        lam = tuple(sorted((c for c in content if c), reverse=True))
        # only dominant monomials x_1^lam_1 x_2^lam_2 ... are needed
        if tuple(content[:len(lam)]) != lam:
            continue
        fill = dict(zip(cells, values))
        des = [u for u in cells if u[0] > 0 and fill[u] > fill[(u[0] - 1, u[1])]]
        maj = sum(leg[u] + 1 for u in des)
        inv = sum(1 for a, b in attacking if fill[a] > fill[b]) - sum(arm[u] for u in des)
        key = (lam, inv, maj)
        acc[key] = acc.get(key, 0) + 1
    coords = {}
    for (lam, i, j), c in acc.items():
        coords[lam] = coords.get(lam, ZERO) + poly_from_terms({(i, j): c})
    return SymF.from_basis("m", coords)


@pytest.mark.parametrize("mu", [mu for n in range(1, 5) for mu in partitions(n)])
def test_basis_matches_filling_formula(mu, limits):
    assert build_basis(sum(mu), limits)[mu] == hhl(mu)


def test_known_degree_four_values(limits):
    H = build_basis(4, limits)
    assert H[(4,)] == (s((4,)) + s((3, 1)).scale(q + q**2 + q**3) + s((2, 2)).scale(q**2 + q**4)
                       + s((2, 1, 1)).scale(q**3 + q**4 + q**5) + s((1, 1, 1, 1)).scale(q**6))
    assert H[(2, 2)].coefficient("s", (2, 2)) == q**2 + t**2
    assert H[(2, 2)].coefficient("s", (3, 1)) == q + t + q * t
    assert H[(2, 2)].coefficient("s", (1, 1, 1, 1)) == q**2 * t**2


@pytest.mark.parametrize("n", range(1, 6))
def test_characterization(n, limits):
    H = build_basis(n, limits)
    for mu in partitions(n):
        assert hall(H[mu], s((n,))) == 1
        assert H[conjugate(mu)] == H[mu].map_coefficients(swap_qt)
        for lam in partitions(n):
            assert star(H[mu], H[lam]) == (mu_stats(mu).w if mu == lam else 0)


@pytest.mark.parametrize("n", range(1, 5))
def test_d0_eigenvalues(n, limits):
    H = build_basis(n, limits)
    for mu in partitions(n):
        st = mu_stats(mu)
        assert D(0, H[mu]) == H[mu].scale(-st.D)
        assert Dstar(0, H[mu]) == H[mu].scale(-invert_qt(st.D))


def test_mu_statistics():
    st = mu_stats((2, 1))
    assert st.B == 1 + q + t
    assert st.T == q * t
    assert st.n_mu == 1
    assert mu_stats((3,)).T == q**3


def test_nabla_small_values(bases4):
    assert nabla(e(1)) == e(1)
    assert nabla(e(2)) == s((2,)) + s((1, 1)).scale(q + t)
    assert nabla_inverse(nabla(e(3))) == e(3)
    assert nabla(SymF.one()) == SymF.one()


def test_nabla_en_hilbert_series_at_one(bases4):
    from qtshuffle.coeffs import specialize

    for n in range(1, 5):
        assert specialize(hall(nabla(e(n)), e(1) ** n), 1, 1) == (n + 1) ** (n - 1)
        # the Catalan slice <nabla e_n, e_n> at q = t = 1
        from math import comb

        assert specialize(hall(nabla(e(n)), e(n)), 1, 1) == comb(2 * n, n) // (n + 1)


def test_delta_e1_on_basis(bases4):
    H = build_basis(3)
    for mu in partitions(3):
        assert delta(e(1), H[mu]) == H[mu].scale(mu_stats(mu).B)


def test_en_hn_closed_forms(bases4):
    for n in range(1, 5):
        en, hn = en_hn_expansions(n)
        basis = build_basis(n)
        assert basis.assemble(en) == e(n)
        assert basis.assemble(hn) == h(n)


def test_json_roundtrip_and_version(limits):
    basis = build_basis(3, limits)
    data = basis.to_json()
    again = MacdonaldBasis.from_json(data)
    assert all(again[mu] == basis[mu] for mu in partitions(3))
    with pytest.raises(MacdonaldError):
        MacdonaldBasis.from_json({**data, "version": -1})


def test_corrupted_basis_fails_validation(limits):
    basis = build_basis(3, limits)
    data = basis.to_json()
    data["entries"][1]["Htilde"]["terms"][1]["coeff"] = "q"
    from qtshuffle.macdonald import validate

    with pytest.raises(MacdonaldError):
        validate(MacdonaldBasis.from_json(data))


def test_missing_basis_and_caps(limits):
    forget_bases()
    try:
        with pytest.raises(MissingBasisError):
            nabla(e(2))
        with pytest.raises(LimitError):
            build_basis(4, Limits(degree_cap=3))
    finally:
        forget_bases()
