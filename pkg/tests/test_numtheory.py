from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from frobmean.numtheory import (
    NumTheoryTables,
    build_tables,
    delta_div,
    divisors,
    gcd3,
    heilbronn_lhs,
    mobius,
    sigma_minus1,
    totient,
)

TABLES = build_tables(2000)


def test_base_case():
    t = build_tables(1)
    assert t.mu[1] == 1 and t.phi[1] == 1


def test_table_values():
    assert TABLES.mu[12] == 0 and TABLES.phi[12] == 4
    assert TABLES.mu[30] == -1 and TABLES.phi[30] == 8


def test_invalid_limit():
    with pytest.raises(ValueError):
        build_tables(0)


def test_mobius_sum_identity():
    for n in range(1, 1001):
        assert sum(TABLES.mu[d] for d in TABLES.divisors(n)) == (1 if n == 1 else 0)


def test_totient_sum_identity():
    for n in range(1, 1001):
        assert sum(TABLES.phi[d] for d in TABLES.divisors(n)) == n


def test_tables_match_direct():
    for n in range(1, 1001):
        assert TABLES.mu[n] == mobius(n)
        assert TABLES.phi[n] == totient(n)
        assert TABLES.divisors(n) == divisors(n)


def test_divisors_examples():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(17) == [1, 17]
    with pytest.raises(ValueError):
        divisors(0)


def test_sigma_minus1_examples():
    assert sigma_minus1(1) == 1
    assert sigma_minus1(4) == Fraction(7, 4)
    assert sigma_minus1(6) == 2
    with pytest.raises(ValueError):
        sigma_minus1(0)


def test_heilbronn_examples():
    assert heilbronn_lhs(1) == 1
    assert heilbronn_lhs(4) == Fraction(1, 2)
    assert heilbronn_lhs(12) == Fraction(1, 3)


def test_heilbronn_equals_phi_over_a():
    for a in range(1, 500):
        assert heilbronn_lhs(a, TABLES) == Fraction(TABLES.phi[a], a)


def test_delta_div():
    assert delta_div(3, 9) == 1
    assert delta_div(3, 10) == 0
    with pytest.raises(ValueError):
        delta_div(0, 5)


def test_gcd3():
    assert gcd3(12, 18, 8) == 2
    assert gcd3(5, 7, 9) == 1


@given(st.integers(1, 2000))
def test_sigma_minus1_is_sigma_over_n(n):
    assert sigma_minus1(n) == Fraction(sum(divisors(n)), n)


@given(st.integers(1, 2000))
def test_totient_counts_coprimes(n):
    if n <= 200:
        from math import gcd

        assert totient(n) == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
