import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divsum.classical import (
    SERIES,
    TermStream,
    VerificationReport,
    abel_exact_poly,
    abel_limit_exact,
    abel_numeric,
    abel_terms_needed,
    cesaro_numeric,
    euler_exact_poly,
)
from divsum.npoly import NPoly
from divsum.resum import Method, alt_poly_sum
from oracles import alternating_partial

ONES = SERIES["alternating-ones"][0]
coeff = st.fractions(min_value=-50, max_value=50, max_denominator=30)


@pytest.mark.parametrize(
    "coeffs,x,expected",
    [([1], Fraction(1, 2), Fraction(2, 3)), ([1], 0, 1), ([0, 1], Fraction(1, 2), Fraction(-2, 9))],
)
def test_abel_exact_poly_examples(coeffs, x, expected):
    assert abel_exact_poly(NPoly.from_coeffs(coeffs), x) == expected


@pytest.mark.parametrize("x", [1, Fraction(3, 2), Fraction(-1, 5)])
def test_abel_exact_poly_rejects_outside_disc(x):
    with pytest.raises(ValueError):
        abel_exact_poly(NPoly.from_coeffs([1]), x)


@pytest.mark.parametrize(
    "coeffs,expected", [([1], Fraction(1, 2)), ([0, 1], Fraction(-1, 4)), ([0, 0, 1], 0)]
)
def test_abel_limit_exact(coeffs, expected):
    value = abel_limit_exact(NPoly.from_coeffs(coeffs))
    assert value.value == expected
    assert value.method is Method.ABEL_EXACT


@pytest.mark.parametrize(
    "p,expected", [(0, Fraction(1, 2)), (1, Fraction(-1, 4)), (3, Fraction(1, 8))]
)
def test_euler_exact(p, expected):
    value = euler_exact_poly(NPoly.monomial(p))
    assert value.value == expected
    assert value.method is Method.EULER


def test_euler_of_zero_polynomial():
    assert euler_exact_poly(NPoly()).value == 0


@settings(max_examples=60, deadline=None)
@given(st.lists(coeff, max_size=31))
def test_three_exact_routes_agree(coeffs):
    poly = NPoly.from_coeffs(coeffs)
    wigner = alt_poly_sum(poly).value
    assert abel_limit_exact(poly).value == wigner
    assert euler_exact_poly(poly).value == wigner


@pytest.mark.parametrize("x", [0.1, 0.5, 0.9])
@pytest.mark.parametrize(
    "coeffs", [[1], [0, 1], [1, -2, 3], [0, 0, 0, 1], [2, 0, -1, 0, 0, 1]]
)
def test_abel_exact_matches_numeric(coeffs, x):
    poly = NPoly.from_coeffs(coeffs)
    stream = TermStream(lambda n: (-1) ** n * float(poly(n)), growth=poly.degree)
    n_max = abel_terms_needed(x, max(poly.degree, 0), 1e-11)
    assert abel_numeric(stream, x, n_max) == pytest.approx(
        float(abel_exact_poly(poly, Fraction(x))), abs=1e-9
    )
    brute = alternating_partial(lambda n: float(poly(n)), x, n_max)
    assert brute == pytest.approx(float(abel_exact_poly(poly, Fraction(x))), abs=1e-9)


def test_abel_numeric_examples():
    assert abel_numeric(ONES, 0.9, 500) == pytest.approx(1 / 1.9, abs=1e-12)
    assert abel_numeric(SERIES["alternating-n-plus-1"][0], 0.5, 0) == 1.0
    stream = SERIES["alternating-n"][0]
    assert abel_numeric(stream, 0.99, 10_000) == pytest.approx(-0.99 / 1.99**2, abs=1e-9)


@pytest.mark.parametrize("x", [0.0, 1.0, -0.3])
def test_abel_numeric_rejects_x(x):
    with pytest.raises(ValueError):
        abel_numeric(ONES, x, 10)


def test_abelian_consistency_on_convergent_series():
    stream, total = SERIES["geometric-half"]
    errors = [
        abs(abel_numeric(stream, 1 - eps, abel_terms_needed(1 - eps, 0, 1e-12)) - float(total))
        for eps in (1e-2, 1e-3)
    ]
    assert errors[1] < errors[0] < 0.02


def test_cesaro_alternating_ones():
    assert cesaro_numeric(ONES, 1, 100_000) == pytest.approx(0.5, abs=1e-4)


def test_cesaro_convergent_unchanged():
    stream = SERIES["unit"][0]
    assert cesaro_numeric(stream, 1, 10) == 1.0
    assert cesaro_numeric(stream, 3, 1000) == 1.0


def test_cesaro_second_order_for_one_minus_two_plus_three():
    stream, value = SERIES["alternating-n-plus-1"]
    assert cesaro_numeric(stream, 2, 100_000) == pytest.approx(float(value), abs=1e-3)
    # first-order means still oscillate between ~0 and ~1/2
    assert abs(cesaro_numeric(stream, 1, 100_000) - cesaro_numeric(stream, 1, 100_001)) > 0.4


def test_cesaro_regularity():
    basel = TermStream(lambda n: 1 / (n + 1) ** 2)
    assert cesaro_numeric(basel, 1, 100_000) == pytest.approx(math.pi**2 / 6, abs=1e-3)
    stream, total = SERIES["geometric-half"]
    assert cesaro_numeric(stream, 1, 100_000) == pytest.approx(float(total), abs=1e-3)


def test_cesaro_rejects_order_zero():
    with pytest.raises(ValueError):
        cesaro_numeric(ONES, 0, 10)


def test_report_passed_iff_within_tolerance():
    assert VerificationReport("m", {}, 1.0, 1.25, 0.25).passed
    assert not VerificationReport("m", {}, 1.0, 1.375, 0.25).passed
    assert not VerificationReport("m", {}, 0.0, float("nan"), 1.0).passed


def test_term_stream_deterministic():
    stream = SERIES["alternating-n"][0]
    assert [stream(n) for n in range(5)] == [stream(n) for n in range(5)] == [0, -1, 2, -3, 4]


@pytest.mark.parametrize("x,growth,tol", [(0.9, 0, 1e-6), (0.99, 2, 1e-3), (0.999, 1, 0.1)])
def test_abel_terms_needed_meets_bound(x, growth, tol):
    n = abel_terms_needed(x, growth, tol)
    assert x**n * (n + 1) ** growth / (1 - x) < tol / 10
