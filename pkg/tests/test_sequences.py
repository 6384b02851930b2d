from fractions import Fraction
from math import comb, factorial

import pytest

from momentseq.errors import InsufficientTerms
from momentseq.sequences import (
    NAMED_SEQUENCES,
    aerate,
    apery_numbers,
    binomial_transform,
    euler_numbers,
    euler_numbers_from_series,
    named_sequence,
    scale_seq,
    secant_power_polys,
    shift,
    signed_variant,
    springer_numbers,
    subsequence,
)

from oracles import EULER_11, SPRINGER_11, apery_direct, euler_boustrophedon, springer_from_egf


def test_euler_first_eleven():
    assert list(euler_numbers(11).terms) == EULER_11


def test_springer_first_eleven():
    assert list(springer_numbers(11).terms) == SPRINGER_11


def test_euler_matches_boustrophedon_and_series_route():
    n = 40
    ref = euler_boustrophedon(n)
    assert list(euler_numbers(n).terms) == ref
    assert list(euler_numbers_from_series(n).terms) == ref


def test_springer_matches_naive_egf_inversion():
    assert list(springer_numbers(25).terms) == springer_from_egf(25)


def test_apery_direct_sum():
    assert list(apery_numbers(3).terms) == [1, 5, 73]
    assert list(apery_numbers(8).terms) == [apery_direct(n) for n in range(8)]


def test_secant_powers_specialize():
    polys = secant_power_polys(6).terms
    e = euler_numbers(12).terms
    # x = 1 gives the secant numbers, x = 2 the coefficients of sec^2 = tan'
    assert [p(1) for p in polys] == [e[2 * n] for n in range(6)]
    assert [p(2) for p in polys] == [e[2 * n + 1] for n in range(6)]


def test_subsequence_and_shift():
    e = euler_numbers(20)
    assert list(subsequence(e, 1, 2, 5).terms) == [e[1], e[3], e[5], e[7], e[9]]
    assert list(shift(e, 2).terms) == list(e.terms[2:])


def test_scaling_inverts():
    e = euler_numbers(10)
    scaled = scale_seq(e, "div-factorial")
    assert list(scaled.terms) == [Fraction(v, factorial(n)) for n, v in enumerate(e.terms)]


def test_binomial_transform_definition():
    s = springer_numbers(8)
    t = binomial_transform(s, 3)
    for n in range(8):
        assert t[n] == sum(comb(n, k) * 3 ** (n - k) * s[k] for k in range(n + 1))


def test_aeration_interleaves_zeros():
    s = euler_numbers(4)
    assert list(aerate(s).terms)[:7] == [1, 0, 1, 0, 1, 0, 2]


def test_signed_variant_pattern():
    s = signed_variant(euler_numbers(8))
    assert list(s.terms) == [e * (-1) ** (n * (n - 1) // 2) for n, e in enumerate(EULER_11[:8])]


def test_provenance_records_derivation():
    h = named_sequence("euler-tilde-even", 5)
    chain = " ".join(h.derivation())
    assert "recurrence" in chain and "div-factorial" in chain


def test_insufficient_terms_is_typed():
    with pytest.raises(InsufficientTerms):
        euler_numbers(3).require(5, "test")


@pytest.mark.parametrize("name", sorted(NAMED_SEQUENCES))
def test_every_named_sequence_builds(name):
    assert len(named_sequence(name, 6)) == 6
