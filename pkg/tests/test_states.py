"""State-family amplitude construction against the exact-fraction reference.

Expected squared coefficients are frozen from tests/fraction_oracle.py, which
evaluates the defining product laws with fractions.Fraction (no rounding).
"""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import fraction_oracle as fo
from fockphase.states import (
    Binomial,
    ConstraintViolated,
    FockAmplitudes,
    Hahn,
    Hypergeometric,
    NegHypergeometric,
    NumericalUnderflow,
    Polya,
    amplitudes,
    amplitudes_direct,
    squared_distribution,
    validate,
)

F = Fraction


def assert_matches_fractions(spec, expected, tol=1e-14):
    got = squared_distribution(spec)
    assert len(got) == len(expected)
    for g, e in zip(got, expected):
        assert g == pytest.approx(float(e), abs=tol)
    assert sum(expected) == 1  # the reference itself must be normalized


# ---------------------------------------------------------------------------
# frozen exact values
# ---------------------------------------------------------------------------


def test_binomial_half_two():
    expected = [F(1, 4), F(1, 2), F(1, 4)]
    assert fo.binomial_sq(F(1, 2), 2) == expected
    assert_matches_fractions(Binomial(eta=0.5, M=2), expected)


def test_hypergeometric_ten_five_half():
    # symmetric case: C(5,n)^2 / C(10,5)
    expected = [F(1, 252), F(25, 252), F(25, 63), F(25, 63), F(25, 252), F(1, 252)]
    assert fo.hypergeometric_sq(F(10), 5, F(1, 2)) == expected
    assert_matches_fractions(Hypergeometric(L=10.0, M=5, eta=0.5), expected)


def test_hypergeometric_single_photon():
    expected = [F(7, 10), F(3, 10)]
    assert fo.hypergeometric_sq(F(7), 1, F(3, 10)) == expected
    assert_matches_fractions(Hypergeometric(L=7.0, M=1, eta=0.3), expected)


def test_polya_unit_gamma():
    # gamma=1, eta=1/2, M=2 weights the edges up, not uniformly
    expected = [F(3, 8), F(1, 4), F(3, 8)]
    assert fo.polya_sq(2, F(1), F(1, 2)) == expected
    assert_matches_fractions(Polya(M=2, gamma=1.0, eta=0.5), expected)


def test_polya_half_gamma_is_uniform():
    expected = [F(1, 3)] * 3
    assert fo.polya_sq(2, F(1, 2), F(1, 2)) == expected
    assert_matches_fractions(Polya(M=2, gamma=0.5, eta=0.5), expected)


def test_hahn_zero_parameters_uniform():
    expected = [F(1, 3)] * 3
    assert fo.hahn_sq(F(0), F(0), 2) == expected
    assert_matches_fractions(Hahn(alpha=0.0, beta_h=0.0, M=2), expected)


def test_neg_hypergeometric_frozen_values():
    cases = [
        (NegHypergeometric(M=2, beta=0.5, s_nhg=0), [F(1, 2), F(1, 3), F(1, 6)]),
        (NegHypergeometric(M=2, beta=0.5, s_nhg=1), [F(1, 6), F(1, 3), F(1, 2)]),
        (
            NegHypergeometric(M=3, beta=0.5, s_nhg=0),
            [F(1, 2), F(3, 10), F(3, 20), F(1, 20)],
        ),
        (
            NegHypergeometric(M=4, beta=0.5, s_nhg=1),
            [F(3, 14), F(2, 7), F(9, 35), F(6, 35), F(1, 14)],
        ),
    ]
    for spec, expected in cases:
        assert fo.neg_hypergeometric_sq(spec.M, F(1, 2), spec.s_nhg) == expected
        assert_matches_fractions(spec, expected)


def test_degenerate_binomial_is_exact():
    lo = amplitudes(Binomial(eta=0.0, M=4))
    assert list(lo.amplitudes) == [1.0, 0.0, 0.0, 0.0, 0.0]
    hi = amplitudes(Binomial(eta=1.0, M=4))
    assert list(hi.amplitudes) == [0.0, 0.0, 0.0, 0.0, 1.0]


# ---------------------------------------------------------------------------
# family collapse at M=1
# ---------------------------------------------------------------------------


def test_single_photon_collapse_to_binomial():
    # every family at M=1 is a two-level binomial superposition; the
    # effective eta follows from the family's own mean photon number
    cases = [
        (Hypergeometric(L=17.0, M=1, eta=0.35), 0.35),
        (Polya(M=1, gamma=2.5, eta=0.6), 0.6),
        (Hahn(alpha=1.0, beta_h=2.0, M=1), 2.0 / 5.0),  # (alpha+1)/(alpha+beta_h+2)
        (NegHypergeometric(M=1, beta=0.25, s_nhg=0), 0.75),  # (s+1)(1-beta)
    ]
    for spec, eta_eff in cases:
        got = amplitudes(spec).amplitudes
        want = amplitudes(Binomial(eta=eta_eff, M=1)).amplitudes
        assert np.max(np.abs(got - want)) < 1e-12


def test_hypergeometric_m1_independent_of_l():
    reference = amplitudes(Hypergeometric(L=4.0, M=1, eta=0.5)).amplitudes
    for L in (10.0, 100.0, 1200.0):
        got = amplitudes(Hypergeometric(L=L, M=1, eta=0.5)).amplitudes
        assert np.max(np.abs(got - reference)) < 1e-12


def test_hypergeometric_approaches_binomial():
    bs = amplitudes(Binomial(eta=0.5, M=5)).amplitudes
    gaps = []
    for L in (50.0, 200.0, 1200.0):
        hgs = amplitudes(Hypergeometric(L=L, M=5, eta=0.5)).amplitudes
        gaps.append(float(np.max(np.abs(hgs - bs))))
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 1e-2


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def test_binomial_validation():
    with pytest.raises(ConstraintViolated):
        validate(Binomial(eta=1.5, M=2))
    with pytest.raises(ConstraintViolated):
        validate(Binomial(eta=-0.1, M=2))
    with pytest.raises(ConstraintViolated):
        validate(Binomial(eta=0.5, M=-1))
    with pytest.raises(ConstraintViolated):
        validate(Binomial(eta=0.5, M=True))  # bools are not photon counts


def test_hypergeometric_validation_reports_bound():
    with pytest.raises(ConstraintViolated) as exc:
        validate(Hypergeometric(L=9.9, M=5, eta=0.5))
    assert "L >= max(M/eta, M/(1-eta))" in str(exc.value)
    # eta on the boundary is out (the law divides by both eta and 1-eta)
    with pytest.raises(ConstraintViolated):
        validate(Hypergeometric(L=20.0, M=5, eta=0.0))
    with pytest.raises(ConstraintViolated):
        validate(Hypergeometric(L=20.0, M=5, eta=1.0))
    # exactly at the bound is allowed
    validate(Hypergeometric(L=10.0, M=5, eta=0.5))


def test_polya_validation():
    with pytest.raises(ConstraintViolated):
        validate(Polya(M=2, gamma=0.0, eta=0.5))
    with pytest.raises(ConstraintViolated):
        validate(Polya(M=2, gamma=-1.0, eta=0.5))
    with pytest.raises(ConstraintViolated):
        validate(Polya(M=2, gamma=1.0, eta=1.0))


def test_hahn_validation():
    with pytest.raises(ConstraintViolated):
        validate(Hahn(alpha=-1.0, beta_h=0.0, M=2))
    with pytest.raises(ConstraintViolated):
        validate(Hahn(alpha=0.0, beta_h=-1.5, M=2))
    validate(Hahn(alpha=-0.5, beta_h=-0.5, M=2))


def test_neg_hypergeometric_validation():
    with pytest.raises(ConstraintViolated):
        validate(NegHypergeometric(M=2, beta=0.0, s_nhg=0))
    with pytest.raises(ConstraintViolated):
        validate(NegHypergeometric(M=2, beta=1.0, s_nhg=0))
    # s must stay strictly below M*beta/(1-beta) = 2
    validate(NegHypergeometric(M=2, beta=0.5, s_nhg=1))
    with pytest.raises(ConstraintViolated):
        validate(NegHypergeometric(M=2, beta=0.5, s_nhg=2))
    with pytest.raises(ConstraintViolated):
        validate(NegHypergeometric(M=2, beta=0.5, s_nhg=-1))


def test_validate_rejects_unknown_spec_type():
    with pytest.raises(TypeError):
        validate(object())


# ---------------------------------------------------------------------------
# numerics
# ---------------------------------------------------------------------------


def test_log_path_matches_direct_path():
    specs = [
        Binomial(eta=0.3, M=12),
        Hypergeometric(L=60.0, M=9, eta=0.4),
        Polya(M=10, gamma=0.7, eta=0.55),
        Hahn(alpha=1.5, beta_h=0.5, M=8),
        NegHypergeometric(M=7, beta=0.5, s_nhg=2),
    ]
    for spec in specs:
        via_log = amplitudes(spec).amplitudes
        direct = amplitudes_direct(spec)
        assert np.max(np.abs(via_log - direct)) < 1e-9 * np.max(direct)


def test_underflow_is_reported():
    # eta^3 = 1e-750 has a finite log but exp() underflows to zero
    with pytest.raises(NumericalUnderflow):
        amplitudes(Binomial(eta=1e-250, M=3))


def test_fock_amplitudes_constructor_rejects_bad_input():
    with pytest.raises(ValueError):
        FockAmplitudes(np.array([[0.5], [0.5]]), source=None)
    with pytest.raises(ValueError):
        FockAmplitudes(np.array([]), source=None)
    with pytest.raises(ValueError):
        FockAmplitudes(np.array([0.8, -0.6]), source=None)
    with pytest.raises(ValueError):
        FockAmplitudes(np.array([0.9, 0.1]), source=None)  # not normalized


def test_fock_amplitudes_are_read_only():
    amp = amplitudes(Binomial(eta=0.5, M=2))
    with pytest.raises(ValueError):
        amp.amplitudes[0] = 1.0
    assert len(amp) == 3
    assert amp.cutoff == 2


# ---------------------------------------------------------------------------
# normalization across random valid parameters
# ---------------------------------------------------------------------------


@given(
    # eta below ~1e-11 drives eta^M past the double-precision floor for
    # M = 30, which correctly raises NumericalUnderflow; stay above it here
    st.floats(min_value=0.01, max_value=1.0, allow_nan=False),
    st.integers(min_value=0, max_value=30),
)
@settings(max_examples=60)
def test_binomial_normalization(eta, M):
    amp = amplitudes(Binomial(eta=eta, M=M))
    assert abs(float(np.dot(amp.amplitudes, amp.amplitudes)) - 1.0) <= 1e-10


@given(
    st.floats(min_value=0.05, max_value=0.95),
    st.integers(min_value=1, max_value=25),
    st.floats(min_value=1.0, max_value=4.0),
)
@settings(max_examples=60)
def test_hypergeometric_normalization(eta, M, slack):
    L = max(M / eta, M / (1.0 - eta)) * slack
    amp = amplitudes(Hypergeometric(L=L, M=M, eta=eta))
    assert abs(float(np.dot(amp.amplitudes, amp.amplitudes)) - 1.0) <= 1e-10


@given(
    st.integers(min_value=1, max_value=25),
    st.floats(min_value=0.1, max_value=0.9),
)
@settings(max_examples=60)
def test_neg_hypergeometric_normalization(M, beta):
    t = M * beta / (1.0 - beta)
    s_max = int(np.ceil(t)) - 1
    amp = amplitudes(NegHypergeometric(M=M, beta=beta, s_nhg=max(s_max, 0)))
    assert abs(float(np.dot(amp.amplitudes, amp.amplitudes)) - 1.0) <= 1e-10
