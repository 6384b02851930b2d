import pytest

from momentseq.combinatorics import (
    SignedPermutation,
    alt_perm_count,
    alt_records_poly,
    alternating_permutations,
    record_count,
    snake_count,
    snakes,
)
from momentseq.errors import BoundExceeded
from momentseq.exact import RatPolynomial
from momentseq.sequences import secant_power_polys

from oracles import EULER_11, SPRINGER_11, down_up_by_filter


@pytest.mark.parametrize("n", range(0, 11))
def test_down_up_count_is_euler(n):
    assert alt_perm_count(n) == EULER_11[n]


@pytest.mark.parametrize("n", range(0, 8))
def test_pruned_search_agrees_with_filtering(n):
    assert alt_perm_count(n) == down_up_by_filter(n)


@pytest.mark.parametrize("n", range(0, 9))
def test_snake_count_is_springer(n):
    assert snake_count(n) == SPRINGER_11[n]


def test_enumeration_is_lexicographic_and_valid():
    perms = list(alternating_permutations(5))
    assert perms == sorted(perms)
    assert all(s.is_snake() for s in snakes(4))


def test_records_polynomials_small_cases():
    assert alt_records_poly(4).coeffs == (0, 2, 3)
    # x E_4(1 + x) = 5x + 8x^2 + 3x^3; the coefficients sum to E_5 = 16
    assert alt_records_poly(5).coeffs == (0, 5, 8, 3)


def _shifted_times_x(p):
    """x p(1 + x)."""
    x = RatPolynomial.x()
    out = RatPolynomial()
    for i, c in enumerate(p.coeffs):
        out = out + (x + 1) ** i * c
    return out * x


@pytest.mark.parametrize("n", [0, 2, 4, 6, 8, 10])
def test_even_records_polynomial_is_secant_power(n):
    p = secant_power_polys(n // 2 + 1).terms[n // 2]
    assert alt_records_poly(n).as_polynomial() == p


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
def test_odd_records_polynomial_is_shifted_secant_power(n):
    p = secant_power_polys(n // 2 + 1).terms[n // 2]
    rp = alt_records_poly(n)
    assert rp.as_polynomial() == _shifted_times_x(p)
    assert rp(1) == EULER_11[n]


def test_record_count_definition():
    assert record_count((2, 1, 4, 3, 5)) == 3


def test_bounds_are_enforced():
    with pytest.raises(BoundExceeded):
        alt_perm_count(11)
    with pytest.raises(BoundExceeded):
        snake_count(9)


def test_signed_permutation_validation():
    with pytest.raises(ValueError):
        SignedPermutation((1, 1))
    assert SignedPermutation((2, -1, 3)).is_snake()
    assert not SignedPermutation((-1, 2)).is_snake()
