from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtshuffle.coeffs import ONE, ZERO, q, t
from qtshuffle.partitions import conjugate, inverse_descent_set, partitions, z_lambda
from qtshuffle.symfunc import (
    QSymCoords, SymF, e, h, hall, m, p, plethysm_linear, plethysm_scalar, qsym_coords, s,
    schur_hook_eval, star,
)
from qtshuffle.symfunc.plethysm import omega_minus_uM, omega_minus_uM_closed, schur_hook_closed_form
from qtshuffle.symfunc.qsym import from_ides
from qtshuffle.symfunc.sym import is_schur_positive, schur_negative_terms

DEGREES = range(1, 6)


# brute-force monomial coefficients -------------------------------------------------------

def ssyt_count(shape, content):
    """Semistandard fillings of `shape` with the given content."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    letters = [v for v, c in enumerate(content, start=1) for _ in range(c)]
    seen = set()
    for perm in set(permutations(letters)):
        fill = dict(zip(cells, perm))
        ok = all(fill[i, j] <= fill[i, j + 1] for i, j in cells if (i, j + 1) in fill)
        ok = ok and all(fill[i, j] < fill[i + 1, j] for i, j in cells if (i + 1, j) in fill)
        if ok:
            seen.add(perm)
    return len(seen)


def power_sum_count(lam, content):
    """Coefficient of x^content in p_lam: assign each part to one variable."""
    n_vars = len(content)
    total = 0
    for choice in product(range(n_vars), repeat=len(lam)):
        got = [0] * n_vars
        for part, var in zip(lam, choice):
            got[var] += part
        total += got == list(content)
    return total


@pytest.mark.parametrize("n", DEGREES)
def test_schur_monomial_coefficients_are_kostka_numbers(n):
    for lam in partitions(n):
        coords = s(lam).to_basis("m")
        for mu in partitions(n):
            assert coords.get(mu, ZERO) == ssyt_count(lam, mu), (lam, mu)


@pytest.mark.parametrize("n", DEGREES)
def test_power_sum_monomial_coefficients(n):
    for lam in partitions(n):
        coords = p(lam).to_basis("m")
        for mu in partitions(n):
            assert coords.get(mu, ZERO) == power_sum_count(lam, mu)


@pytest.mark.parametrize("n", DEGREES)
def test_hall_products(n):
    parts = partitions(n)
    for lam in parts:
        for mu in parts:
            assert hall(s(lam), s(mu)) == (1 if lam == mu else 0)
            assert hall(h(lam), m(mu)) == (1 if lam == mu else 0)
            assert hall(p(lam), p(mu)) == (z_lambda(lam) if lam == mu else 0)


@pytest.mark.parametrize("n", DEGREES)
def test_omega_and_jacobi_trudi_edges(n):
    for lam in partitions(n):
        assert s(lam).omega() == s(conjugate(lam))
    assert e(n) == s((1,) * n)
    assert h(n) == s((n,))
    assert e(1) ** n == sum((s(lam).scale(ssyt_count(lam, (1,) * n)) for lam in partitions(n)), SymF.zero())


def test_pieri_rule():
    assert s((2, 1)) * h(1) == s((3, 1)) + s((2, 2)) + s((2, 1, 1))


def test_basis_roundtrip_and_json():
    f = s((2, 1)).scale(q) + e(3).scale(1 - t) + h((1, 1))
    for basis in "pehsm":
        assert SymF.from_basis(basis, f.to_basis(basis)) == f
    assert SymF.from_json(f.to_json("s")) == f


def test_inhomogeneous_degree_is_rejected():
    with pytest.raises(ValueError):
        (e(1) + e(2)).degree()


@settings(max_examples=30, deadline=None)
@given(st.dictionaries(st.sampled_from(partitions(4)), st.integers(-3, 3), max_size=5),
       st.dictionaries(st.sampled_from(partitions(4)), st.integers(-3, 3), max_size=5))
def test_hall_is_symmetric_bilinear(a, b):
    f, g = SymF.from_basis("s", a), SymF.from_basis("s", b)
    assert hall(f, g) == hall(g, f)
    assert hall(f + g, g) == hall(f, g) + hall(g, g)
    assert hall(f, f) == sum(c * c for c in a.values())


def test_star_scalar_product_on_power_sums():
    # <p_lam, p_mu>_* = (-1)^{|mu|-l(mu)} z_mu prod (1-q^mu_i)(1-t^mu_i) on the diagonal
    for lam in partitions(3):
        val = star(p(lam), p(lam))
        want = ONE * z_lambda(lam) * (-1) ** (3 - len(lam))
        for part in lam:
            want = want * (1 - q**part) * (1 - t**part)
        assert val == want


# plethysm -------------------------------------------------------------------------------

def test_plethysm_on_power_sums():
    assert plethysm_linear(p((2, 1)), 1 - q) == p((2, 1)).scale((1 - q**2) * (1 - q))
    assert plethysm_scalar(p((2,)), q + t) == q**2 + t**2
    assert plethysm_scalar(h(2), 1 + q) == 1 + q + q**2
    assert plethysm_scalar(e(2), 1 + q + t) == q + t + q * t


@pytest.mark.parametrize("n", range(1, 6))
def test_schur_hook_evaluation(n):
    u = q * t
    for lam in partitions(n):
        assert schur_hook_eval(lam, u) == schur_hook_closed_form(lam, u)


def test_omega_minus_uM_series():
    assert omega_minus_uM(6) == omega_minus_uM_closed(6)


# quasisymmetric coordinates -------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 6))
def test_gessel_expansion_of_e1_power(n):
    coords = from_ides(n, [(inverse_descent_set(sigma), 1) for sigma in permutations(range(1, n + 1))])
    assert coords == qsym_coords(e(1) ** n, n)


def test_fundamental_coordinates_of_small_functions():
    assert qsym_coords(h(3), 3) == QSymCoords(3, {(): 1})
    assert qsym_coords(e(3), 3) == QSymCoords(3, {(1, 2): 1})
    assert qsym_coords(s((2, 1)), 3) == QSymCoords(3, {(1,): 1, (2,): 1})


def test_non_symmetric_coordinates_detected():
    lone = QSymCoords(3, {(1,): 1})
    assert not lone.is_symmetric()
    with pytest.raises(ArithmeticError):
        lone.to_symf()


def test_schur_positivity_helpers():
    f = s((2,)) - s((1, 1)).scale(q)
    assert not is_schur_positive(f)
    assert schur_negative_terms(f) == [(1, 1)]
    assert is_schur_positive(s((2,)).scale(q + t))


def test_pair_h_matches_hall():
    f = s((2, 1)).scale(q) + s((3,))
    coords = qsym_coords(f, 3)
    for mu in partitions(3):
        assert coords.pair_h(mu) == hall(f, h(mu))
