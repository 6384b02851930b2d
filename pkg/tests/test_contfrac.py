from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from momentseq.contfrac import (
    CF_FAMILIES,
    ContractionObstruction,
    JFraction,
    SFraction,
    aerate_series,
    cf_family,
    contract,
    expand_to_sfrac,
    family_sequence_terms,
    jfrac_binomial_shift,
    jfrac_expand,
    jfrac_extract,
    positivity_audit,
    sfrac_expand,
    sfrac_extract,
    sfrac_to_aerated_jfrac,
)
from momentseq.errors import Breakdown, InsufficientCoefficients, InsufficientTerms
from momentseq.exact import RatPolynomial
from momentseq.sequences import euler_numbers, given as given_seq, named_sequence

from oracles import jfraction_series, sfraction_series

pos = st.fractions(min_value=Fraction(1, 8), max_value=6, max_denominator=8)
anyq = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@settings(max_examples=50)
@given(st.lists(anyq, min_size=1, max_size=6), st.integers(1, 8))
def test_sfrac_expand_matches_bottom_up_evaluation(alphas, N):
    sf = SFraction(Fraction(1), alphas)
    assert list(sfrac_expand(sf, N).coeffs) == sfraction_series(1, alphas, N)


@settings(max_examples=50)
@given(st.lists(anyq, min_size=1, max_size=5), st.lists(anyq, min_size=5, max_size=5), st.integers(1, 8))
def test_jfrac_expand_matches_bottom_up_evaluation(gammas, betas, N):
    betas = betas[: len(gammas) - 1]
    jf = JFraction(Fraction(2), gammas, betas)
    assert list(jfrac_expand(jf, N).coeffs) == jfraction_series(2, gammas, betas, N)


@pytest.mark.parametrize("name", sorted(CF_FAMILIES))
def test_family_expansions_match_named_sequences(name):
    fam = cf_family(name)
    N = 10
    assert family_sequence_terms(fam, N) == list(named_sequence(fam.sequence, N + 1).terms)


@pytest.mark.parametrize("name", sorted(CF_FAMILIES))
def test_family_positivity_claims(name):
    assert positivity_audit(cf_family(name))["holds"]


@pytest.mark.parametrize("name", sorted(n for n, f in CF_FAMILIES.items() if f.kind == "S"))
def test_s_extraction_recovers_family(name):
    fam = cf_family(name)
    k = 5 if name == "secpow" else 6
    got = sfrac_extract(named_sequence(fam.sequence, k + 1), k)
    assert got.alphas == fam.build(k).alphas


@pytest.mark.parametrize("name", sorted(n for n, f in CF_FAMILIES.items() if f.kind == "J"))
def test_j_extraction_recovers_family(name):
    fam = cf_family(name)
    k = 6
    got = jfrac_extract(named_sequence(fam.sequence, 2 * k + 2), k)
    want = fam.build(k)
    assert got.gammas == want.gammas and got.betas == want.betas


def test_secpow_alpha_polynomials():
    sf = sfrac_extract(named_sequence("secpow", 6), 5)
    for n, a in enumerate(sf.alphas, start=1):
        assert a == RatPolynomial([n * (n - 1), n])


def test_s_extraction_breakdown_is_typed():
    # Euler numbers: alpha_1 = 1, alpha_2 = 0 with a nonzero remainder
    with pytest.raises(Breakdown):
        sfrac_extract(euler_numbers(6), 5)


def test_terminating_sfraction_pads_with_zero():
    sf = sfrac_extract(given_seq("geom", [1, 2, 4, 8, 16]), 4)
    assert sf.alphas == (2, 0, 0, 0)


def test_extraction_needs_enough_terms():
    with pytest.raises(InsufficientTerms):
        jfrac_extract(euler_numbers(5), 2)


def test_strict_expansion_refuses_short_fraction():
    with pytest.raises(InsufficientCoefficients):
        sfrac_expand(SFraction(1, [1, 2]), 5, strict=True)


def test_contraction_of_lambert_like_fraction():
    sf = cf_family("euler-tilde-shifted-s").build(6)
    jf = contract(sf)
    want = cf_family("euler-tilde-shifted").build(3)
    assert list(jf.gammas) == [Fraction(1, 2), 0, 0]
    assert jf.betas == want.betas[:3]


def test_obstruction_for_shifted_euler():
    out = expand_to_sfrac(cf_family("euler-shifted").build(6))
    assert isinstance(out, ContractionObstruction)
    assert out.index == 6
    a = out.partial_alphas
    assert a == (1, 1, 1, 3, 0)  # alpha_5 = 0 cannot solve alpha_5 alpha_6 = beta_3 = 6


@settings(max_examples=40)
@given(st.lists(pos, min_size=1, max_size=8))
def test_contract_then_invert(alphas):
    sf = SFraction(Fraction(1), alphas)
    back = expand_to_sfrac(contract(sf))
    assert isinstance(back, SFraction)
    assert back.alphas == sf.alphas[: len(back.alphas)]
    N = 2 * (len(alphas) // 2)
    assert sfrac_expand(sf, N).coeffs == jfrac_expand(contract(sf), N).coeffs


@settings(max_examples=40)
@given(st.lists(pos, min_size=2, max_size=5), st.lists(pos, min_size=4, max_size=4),
       st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_binomial_shift_verifies(gammas, betas, c):
    jf = JFraction(1, gammas, betas[: len(gammas) - 1])
    shifted = jfrac_binomial_shift(jf, c)
    assert shifted.gammas == tuple(g + c for g in gammas)


@settings(max_examples=40)
@given(st.lists(pos, min_size=1, max_size=6))
def test_aeration_round_trip(alphas):
    sf = SFraction(Fraction(1), alphas)
    N = len(alphas)
    aerated = jfrac_expand(sfrac_to_aerated_jfrac(sf), 2 * N)
    assert aerated == aerate_series(sfrac_expand(sf, N))


def test_dumont_signed_springer_via_shift():
    jf = cf_family("springer-signed").build(7)
    terms = jfrac_expand(jf, 12).coeffs
    s = named_sequence("springer", 13).terms
    assert list(terms) == [(-1) ** (n * (n - 1) // 2) * s[n] for n in range(13)]
