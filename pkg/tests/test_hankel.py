from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from momentseq.errors import InsufficientTerms
from momentseq.hankel import (
    ALL_NONNEGATIVE,
    ALL_POSITIVE,
    VIOLATION,
    bareiss_det,
    cofactor_det,
    hankel_det,
    log_shape,
    psd_leading_minors,
    toeplitz_pf_check,
    total_positivity,
)
from momentseq.sequences import (
    central_binomials,
    euler_numbers,
    factorials,
    given as given_seq,
    named_sequence,
    springer_numbers,
)

from oracles import hankel_oracle, leibniz_det

small = st.fractions(min_value=-9, max_value=9, max_denominator=5)


@settings(max_examples=60)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n),
                                                     min_size=n, max_size=n)))
def test_bareiss_agrees_with_leibniz(matrix):
    assert bareiss_det(matrix) == leibniz_det(matrix)
    assert cofactor_det(matrix) == leibniz_det(matrix)


def test_euler_and_springer_fixtures():
    assert hankel_det(euler_numbers(6), 0, 3) == -1
    assert hankel_det(springer_numbers(7), 1, 3) == -96


@pytest.mark.parametrize("m", [0, 1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hankel_matches_oracle(m, n):
    e = euler_numbers(m + 2 * n)
    assert hankel_det(e, m, n) == hankel_oracle(e.terms, m, n)


def test_factorials_hankel_closed_form():
    # Delta_n(k!) = prod_{i<n} (i!)^2
    from math import factorial, prod

    f = factorials(12)
    for n in range(1, 7):
        assert hankel_det(f, 0, n, cross_check=False) == prod(factorial(i) ** 2 for i in range(n))


def test_seven_by_seven_scaled_secant_is_negative():
    s = named_sequence("secant-over-factorial-squared", 13)
    assert hankel_det(s, 0, 7) < 0


def test_psd_reports_first_failure_with_witness():
    rep = psd_leading_minors(euler_numbers(12), 0, 5)
    assert rep.status == VIOLATION
    assert rep.details["first_failing_n"] == 3
    assert rep.witness.value == -1


def test_psd_positive_for_central_binomials():
    rep = psd_leading_minors(central_binomials(12), 0, 5)
    assert rep.status == ALL_POSITIVE and rep.ok


def test_total_positivity_shifted_euler_order4_witness():
    rep = total_positivity(named_sequence("euler-shifted", 12), 6, 4)
    assert rep.status == VIOLATION
    assert len(rep.witness.rows) == 4 and rep.witness.value == -324


def test_total_positivity_checks_every_minor_brute():
    s = named_sequence("secant", 10)
    rep = total_positivity(s, 4, 3)
    count = sum(len(list(combinations(range(4), r))) ** 2 for r in range(1, 4))
    assert rep.checked == count and rep.status == ALL_POSITIVE


def test_toeplitz_pf_tilde_even_strict():
    s = named_sequence("euler-tilde-even", 8)
    rep = toeplitz_pf_check(s, 6, 3, require_strict=True)
    assert rep.status == ALL_NONNEGATIVE and rep.details["strict_above_diagonal"]


def test_toeplitz_pf_detects_nonlogconcave():
    rep = toeplitz_pf_check(given_seq("v", [1, 1, 3]), 3, 2)
    assert rep.status == VIOLATION and rep.witness.value < 0


def test_log_shape_signs():
    assert log_shape(given_seq("g", [1, 2, 4, 7])) == [0, -1]


def test_requires_enough_terms():
    with pytest.raises(InsufficientTerms):
        hankel_det(euler_numbers(3), 0, 3)


def test_polynomial_entries():
    s = named_sequence("secpow", 5)
    d = hankel_det(s, 0, 2)
    for x in (Fraction(1), Fraction(2), Fraction(7, 3)):
        vals = [p(x) for p in s.terms]
        assert d(x) == vals[0] * vals[2] - vals[1] ** 2
