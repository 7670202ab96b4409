"""Harmonic-family sequences, the shared cache, and named constants."""

import math

import pytest
from hypothesis import given, strategies as st

from skewlog import (
    CONSTANTS,
    HarmonicCache,
    constant,
    digamma_half_diff,
    harmonic,
    harmonic2,
    odd_harmonic,
    skew_harmonic,
    skew_harmonic_mu,
)

LOG2 = math.log(2.0)


def test_harmonic_small_values():
    assert harmonic(0) == 0.0
    assert harmonic(1) == 1.0
    assert abs(harmonic(4) - 25.0 / 12.0) < 1e-15
    assert abs(harmonic2(3) - 49.0 / 36.0) < 1e-15
    assert skew_harmonic(0) == 0.0
    assert abs(skew_harmonic(3) - 5.0 / 6.0) < 1e-15
    assert abs(skew_harmonic(4) - 7.0 / 12.0) < 1e-15


def test_negative_index_rejected():
    for fn in (harmonic, harmonic2, skew_harmonic, odd_harmonic):
        with pytest.raises(ValueError):
            fn(-1)


def test_skew_harmonic_mu_examples():
    # mu=1 must collapse to the plain skew-harmonic numbers
    for n in (1, 5, 40):
        assert skew_harmonic_mu(n, 1.0) == pytest.approx(skew_harmonic(n), abs=1e-15)
    # terms are (-mu)^(k-1)/k, so the k=1 term is always 1
    assert skew_harmonic_mu(1, 0.5) == 1.0
    assert skew_harmonic_mu(2, 0.5) == pytest.approx(0.75)
    assert skew_harmonic_mu(3, 0.5) == pytest.approx(0.75 + 0.25 / 3.0)
    with pytest.raises(ValueError):
        skew_harmonic_mu(0, 0.5)


@given(
    n=st.integers(min_value=1, max_value=200),
    mu=st.floats(min_value=-0.999, max_value=1.0, allow_nan=False),
)
def test_skew_harmonic_mu_matches_direct_sum(n, mu):
    direct = sum((-mu) ** (k - 1) / k for k in range(1, n + 1))
    assert skew_harmonic_mu(n, mu) == pytest.approx(direct, abs=1e-12, rel=1e-12)


def test_skew_harmonic_converges_to_log2():
    # |H_n^- - log 2| <= 1/(n+1), overshooting then undershooting
    for n in (1, 2, 7, 100, 5000):
        gap = skew_harmonic(n) - LOG2
        assert abs(gap) <= 1.0 / (n + 1) + 1e-15
        assert math.copysign(1.0, gap) == (-1.0) ** (n - 1)


def test_even_index_split_identities():
    # H_2n^- = H_2n - H_n  and  H_2n^- = O_n - H_n/2 with O_n the odd-denominator sum
    for n in (1, 2, 3, 10, 64, 999, 5000):
        lhs = skew_harmonic(2 * n)
        a = harmonic(2 * n) - harmonic(n)
        b = odd_harmonic(n) - 0.5 * harmonic(n)
        assert abs(lhs - a) <= 1e-13 * max(1.0, abs(lhs))
        assert abs(lhs - b) <= 1e-13 * max(1.0, abs(lhs))


def test_digamma_half_diff_small_n():
    # psi((n+1)/2) - psi(n/2): n=1 gives 2 log 2, n=2 gives 2 - 2 log 2
    assert digamma_half_diff(1) == pytest.approx(2.0 * LOG2, abs=1e-15)
    assert digamma_half_diff(2) == pytest.approx(2.0 - 2.0 * LOG2, abs=1e-15)
    with pytest.raises(ValueError):
        digamma_half_diff(0)


def test_digamma_half_diff_vs_skew_harmonic():
    # The half-integer digamma difference equals 2(-1)^(n-1)(log 2 - H_{n-1}^-)
    for n in range(1, 1001):
        expected = 2.0 * (-1.0) ** (n - 1) * (LOG2 - skew_harmonic(n - 1))
        assert abs(digamma_half_diff(n) - expected) <= 1e-12


def test_running_sum_identity_to_n_1000():
    # 2 * sum_{k<=n} (-1)^(k-1) H_k^- / k == (H_n^-)^2 + H_n^(2)
    acc = 0.0
    comp = 0.0
    for k in range(1, 1001):
        term = (-1.0) ** (k - 1) * skew_harmonic(k) / k
        y = term - comp
        t = acc + y
        comp = (t - acc) - y
        acc = t
        rhs = skew_harmonic(k) ** 2 + harmonic2(k)
        assert abs(2.0 * acc - rhs) <= 1e-12


def test_constants_internal_relations():
    pi = constant("PI")
    assert abs(constant("PI_SQ_OVER_6") - pi * pi / 6.0) <= 5e-16 * constant("PI_SQ_OVER_6")
    assert abs(constant("PI_SQ_OVER_12") - pi * pi / 12.0) <= 5e-16
    assert abs(constant("LOG2") - LOG2) <= 5e-16
    # Li2(1/2) = pi^2/12 - log^2(2)/2
    assert abs(constant("LI2_HALF") - (constant("PI_SQ_OVER_12") - 0.5 * LOG2**2)) <= 5e-16
    # Li3(1/2) = 7 zeta(3)/8 - pi^2 log2 / 12 + log^3 2 / 6
    li3_half = (
        0.875 * constant("ZETA3")
        - constant("PI_SQ_OVER_12") * LOG2
        + LOG2**3 / 6.0
    )
    assert abs(constant("LI3_HALF") - li3_half) <= 5e-16
    assert constant("LI2_MINUS1") == pytest.approx(-constant("PI_SQ_OVER_12"), abs=1e-16)
    assert constant("LI3_MINUS1") == pytest.approx(-0.75 * constant("ZETA3"), abs=1e-16)


def test_constant_unknown_name():
    with pytest.raises(KeyError):
        constant("PLANCK")
    assert set(CONSTANTS) >= {"LOG2", "PI", "ZETA3", "CATALAN_G", "EULER_GAMMA"}


def test_cache_limit_enforced():
    cache = HarmonicCache(limit=100)
    cache.ensure(100)
    assert cache.h(100) == pytest.approx(harmonic(100))
    with pytest.raises(ValueError):
        cache.ensure(101)


def test_cache_agrees_with_fresh_instance():
    fresh = HarmonicCache(limit=2000)
    fresh.ensure(2000)
    for n in (1, 17, 256, 2000):
        assert fresh.h(n) == harmonic(n)
        assert fresh.h2(n) == harmonic2(n)
        assert fresh.skew(n) == skew_harmonic(n)
