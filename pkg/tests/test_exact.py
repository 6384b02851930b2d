from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from momentseq.errors import NonUnitConstantTerm
from momentseq.exact import (
    RatPolynomial,
    TruncatedSeries,
    cos_series,
    format_exact,
    parse_exact,
    series_mul,
    series_reciprocal,
    sin_series,
)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
coeff_lists = st.lists(fractions, min_size=1, max_size=6)


@given(coeff_lists, coeff_lists, fractions)
def test_polynomial_ring_operations_evaluate_pointwise(a, b, x):
    p, q = RatPolynomial(a), RatPolynomial(b)
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p - q)(x) == p(x) - q(x)


@given(coeff_lists, coeff_lists)
def test_polynomial_division_reconstructs(a, b):
    p, q = RatPolynomial(a), RatPolynomial(b)
    if q.is_zero:
        return
    quo, rem = p.divmod(q)
    assert quo * q + rem == p
    assert rem.is_zero or rem.degree < q.degree


def test_polynomial_trailing_zeros_normalize():
    assert RatPolynomial([1, 2, 0, 0]) == RatPolynomial([1, 2])
    assert RatPolynomial([0, 0]).is_zero


@given(st.lists(fractions, min_size=2, max_size=8).filter(lambda c: c[0] != 0))
def test_reciprocal_is_multiplicative_inverse(coeffs):
    f = TruncatedSeries(coeffs)
    prod = series_mul(f, series_reciprocal(f))
    assert list(prod.coeffs) == [1] + [0] * (len(coeffs) - 1)


def test_reciprocal_rejects_zero_constant_term():
    with pytest.raises(NonUnitConstantTerm):
        series_reciprocal(TruncatedSeries([0, 1, 2]))


def test_pythagorean_identity_in_series():
    order = 12
    c, s = cos_series(order), sin_series(order)
    total = series_mul(c, c) + series_mul(s, s)
    assert list(total.coeffs) == [1] + [0] * order


@pytest.mark.parametrize("value", [Fraction(3, 7), Fraction(-5), RatPolynomial([1, Fraction(1, 2), 3])])
def test_format_round_trip(value):
    assert parse_exact(format_exact(value)) == value
