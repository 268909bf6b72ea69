from fractions import Fraction
from math import comb, factorial

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divsum.boson import (
    NormalOrderedPoly,
    binomial_to_monomial_basis,
    diagonal_part,
    expectation_poly,
    monomial_to_binomial_basis,
    normal_order_power,
    weyl_to_normal,
)
from divsum.npoly import NPoly
from oracles import annihilation_matrix, normal_matrix


def terms(op):
    return dict(op.terms)


def test_normal_order_power_examples():
    assert terms(normal_order_power(0)) == {(0, 0): 1}
    assert terms(normal_order_power(1)) == {(1, 0): 1, (0, 1): 1}
    assert terms(normal_order_power(2)) == {(2, 0): 1, (1, 1): 2, (0, 2): 1, (0, 0): 1}


def test_weyl_to_normal_examples():
    assert terms(weyl_to_normal(0)) == {(0, 0): 1}
    assert terms(weyl_to_normal(1)) == {(1, 1): 1, (0, 0): Fraction(1, 2)}
    assert terms(weyl_to_normal(2)) == {(2, 2): 1, (1, 1): 2, (0, 0): Fraction(1, 2)}


def test_diagonal_part_examples():
    assert terms(diagonal_part(NormalOrderedPoly({(2, 0): 1, (1, 1): 3}))) == {(1, 1): 3}
    assert diagonal_part(normal_order_power(1)).is_zero()
    assert terms(diagonal_part(normal_order_power(2))) == {(1, 1): 2, (0, 0): 1}


def test_expectation_poly_examples():
    assert expectation_poly(weyl_to_normal(1)) == NPoly.from_coeffs([Fraction(1, 2), 1])
    assert expectation_poly(normal_order_power(2)) == NPoly.from_coeffs([1, 2])
    assert expectation_poly(normal_order_power(3)).is_zero()


def test_zero_coefficients_are_dropped():
    op = NormalOrderedPoly({(1, 0): 1}) + NormalOrderedPoly({(1, 0): -1, (0, 0): 2})
    assert terms(op) == {(0, 0): 2}


@pytest.mark.parametrize("m", range(0, 11))
def test_normal_form_matches_truncated_matrix_power(m):
    N = 2 * m + 6
    a = annihilation_matrix(N)
    brute = np.linalg.matrix_power(a + a.T, m)
    predicted = normal_matrix(normal_order_power(m).terms, N)
    keep = N - m + 1
    np.testing.assert_allclose(predicted[:keep, :keep], brute[:keep, :keep], rtol=1e-9, atol=1e-9)


@pytest.mark.parametrize("s", range(1, 9))
def test_diagonal_equals_weyl_closed_form(s):
    assert diagonal_part(normal_order_power(2 * s)) == weyl_to_normal(s).scale(comb(2 * s, s))


@pytest.mark.parametrize("m", range(1, 16, 2))
def test_odd_powers_have_no_diagonal(m):
    assert expectation_poly(normal_order_power(m)).is_zero()


def test_single_term_expectation_is_falling_factorial():
    for m in range(13):
        poly = expectation_poly(NormalOrderedPoly({(m, m): 1}))
        for n in range(13):
            assert poly(n) == factorial(m) * comb(n, m)


def test_single_term_expectation_against_ladder_matrices():
    a = annihilation_matrix(30)
    for m in range(13):
        diag = np.diag(np.linalg.matrix_power(a.T, m) @ np.linalg.matrix_power(a, m))
        for n in range(13):
            expected = factorial(m) * comb(n, m)
            assert diag[n] == pytest.approx(expected, rel=1e-9, abs=1e-9)


def test_binomial_basis_examples():
    assert monomial_to_binomial_basis(NPoly.from_coeffs([1])).coeffs == (1,)
    assert monomial_to_binomial_basis(NPoly.monomial(2)).coeffs == (0, 1, 2)
    assert monomial_to_binomial_basis(NPoly.monomial(1)).coeffs == (0, 1)
    square = monomial_to_binomial_basis(NPoly.monomial(2))
    assert [square(n) for n in range(4)] == [0, 1, 4, 9]


def test_basis_conversion_rejects_wrong_basis():
    with pytest.raises(ValueError):
        monomial_to_binomial_basis(NPoly((1,), "binomial"))
    with pytest.raises(ValueError):
        binomial_to_monomial_basis(NPoly((1,)))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-1000, 1000), max_size=21))
def test_basis_round_trip(coeffs):
    poly = NPoly.from_coeffs(coeffs)
    back = binomial_to_monomial_basis(monomial_to_binomial_basis(poly))
    assert back.basis == "monomial"
    assert back.coeffs == poly.coeffs
