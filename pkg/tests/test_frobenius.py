from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from frobmean.frobenius import (
    FrobeniusResult,
    GeneratorSet,
    InfiniteGapsError,
    f_three,
    find_multiplier,
    oracle_f,
    oracle_g,
    rho_eval,
)
from frobmean.numtheory import gcd3


def test_oracle_examples():
    assert oracle_g(GeneratorSet.of(2, 3)) == 1
    assert oracle_g(GeneratorSet.of(3, 5, 7)) == 4
    assert oracle_g(GeneratorSet.of(5, 6, 7)) == 9
    assert oracle_g(GeneratorSet.of(1, 4)) == -1


def test_oracle_rejects_common_factor():
    with pytest.raises(InfiniteGapsError):
        oracle_g(GeneratorSet.of(4, 6))


def test_generator_set_validation():
    with pytest.raises(ValueError):
        GeneratorSet(())
    with pytest.raises(ValueError):
        GeneratorSet.of(0, 3)
    gs = GeneratorSet.of(7, 3, 3, 5)
    assert gs.normalized == (3, 5, 7)
    assert gs.total == 18


def test_oracle_f_counts_duplicates():
    res = oracle_f(GeneratorSet.of(3, 5, 5))
    assert res.f == res.g + 13
    assert res.had_duplicates


def test_find_multiplier():
    assert find_multiplier(5, 2, 4) == 2
    assert find_multiplier(5, 2, 5) == 5  # c = 0 mod a maps to l = a
    with pytest.raises(ValueError):
        find_multiplier(6, 3, 5)


def test_rho_eval_examples():
    assert rho_eval(5, 2, 6, 7) == 27
    assert rho_eval(5, 2, 12, 14) == 54  # homogeneity by 2
    assert rho_eval(2, 1, 1, 1) == 3
    with pytest.raises(ValueError):
        rho_eval(5, 2, 0, 3)


def test_rho_eval_rational_weights():
    v = rho_eval(5, 2, Fraction(1), Fraction(7, 6))
    assert v == Fraction(27, 6)


def test_f_three_examples():
    res = f_three(3, 5, 7)
    assert (res.g, res.f, res.method) == (4, 19, "rodseth")
    assert f_three(6, 10, 7).f == 38
    assert f_three(1, 4, 9).f == 13
    assert f_three(2, 1, 2).f == 4


def test_f_three_rejects_common_factor():
    with pytest.raises(InfiniteGapsError):
        f_three(2, 4, 6)


def test_f_three_reduction_factor():
    res = f_three(6, 10, 7)
    assert res.reduction_factor == 2


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 40), st.integers(2, 40), st.integers(2, 40))
def test_f_three_matches_oracle(a, b, c):
    if gcd3(a, b, c) != 1:
        return
    assert f_three(a, b, c).f == oracle_f(GeneratorSet.of(a, b, c)).f


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 15), st.integers(1, 15), st.integers(1, 25), st.integers(1, 4))
def test_scaling_identity(a, b, c, d):
    if gcd(a, b) != 1 or gcd3(a, b, c) != 1 or gcd(d, c) != 1:
        return
    assert f_three(d * a, d * b, c).f == d * f_three(a, b, c).f


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 60), st.integers(2, 60))
def test_pair_product_law(a, b):
    if gcd(a, b) != 1:
        return
    assert oracle_f(GeneratorSet.of(a, b)).f == a * b


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 50), st.integers(1, 49), st.integers(1, 30), st.integers(1, 30), st.integers(1, 5))
def test_rho_homogeneity(a, l, t1, t2, d):
    if l >= a or gcd(a, l) != 1:
        return
    assert rho_eval(a, l, d * t1, d * t2) == d * rho_eval(a, l, t1, t2)
