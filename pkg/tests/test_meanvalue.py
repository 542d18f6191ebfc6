import math
from fractions import Fraction

import pytest

from frobmean.frobenius import GeneratorSet, oracle_f
from frobmean.meanvalue import (
    BoxSpec,
    DegenerateFitError,
    ScaleError,
    box_sums,
    box_sums_oracle,
    decay_fit,
    fixed_a_error,
    mobius_pair_count,
    pair_main_term,
    pair_sum_exact,
    sqrt_prefix,
)

ONE = Fraction(1)


def test_box_spec_validation():
    with pytest.raises(ValueError):
        BoxSpec(ONE, ONE, ONE, 0)
    with pytest.raises(ValueError):
        BoxSpec(Fraction(1, 100), ONE, ONE, 10)  # floor(x1*N) = 0
    assert BoxSpec(Fraction(1, 2), ONE, ONE, 10).limits == (5, 10, 10)


def test_degenerate_box():
    rep = box_sums(BoxSpec(ONE, ONE, ONE, 1))
    assert rep.F == 2 and rep.triple_count == 1


def test_small_box_against_oracle_by_hand():
    # the seven coprime triples in {1,2}^3
    triples = [(1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)]
    expected = sum(oracle_f(GeneratorSet(t)).f for t in triples)
    rep = box_sums(BoxSpec(ONE, ONE, ONE, 2))
    assert rep.F == expected == 23
    assert rep.triple_count == 7


@pytest.mark.parametrize("n", [5, 8, 12])
def test_box_matches_oracle_sweep(n):
    fast = box_sums(BoxSpec(ONE, ONE, ONE, n))
    slow = box_sums_oracle(BoxSpec(ONE, ONE, ONE, n))
    assert fast.F == slow.F
    assert fast.triple_count == slow.triple_count
    assert math.isclose(fast.G, slow.G, rel_tol=1e-12)


def test_box_symmetry_under_axis_permutation():
    a = box_sums(BoxSpec(Fraction(1, 2), ONE, Fraction(3, 2), 10))
    b = box_sums(BoxSpec(ONE, Fraction(3, 2), Fraction(1, 2), 10))
    assert a.F == b.F and a.triple_count == b.triple_count


def test_box_workers_merge_identically():
    serial = box_sums(BoxSpec(ONE, ONE, ONE, 15))
    parallel = box_sums(BoxSpec(ONE, ONE, ONE, 15), workers=2)
    assert serial.F == parallel.F
    assert serial.G == parallel.G


def test_pair_count_matches_mobius():
    for a in range(1, 60):
        assert pair_sum_exact(a, 23, 41)[1] == mobius_pair_count(a, 23, 41)


def test_main_term_accuracy():
    # against a directly accumulated double-precision reference
    prefix = sqrt_prefix(40)
    for a in (6, 35):
        ref = (8 / math.pi) * math.fsum(
            math.sqrt(a * b * c)
            for b in range(1, 41) for c in range(1, 41)
            if math.gcd(math.gcd(a, b), c) == 1)
        assert math.isclose(pair_main_term(a, 40, 40, prefix), ref, rel_tol=1e-12)


def test_fixed_a_small_example():
    # pairs for a=2 are (1,1), (1,2), (2,1)
    pairs = [(1, 1), (1, 2), (2, 1)]
    f_sum = sum(oracle_f(GeneratorSet.of(2, b, c)).f for b, c in pairs)
    g_sum = (8 / math.pi) * math.fsum(math.sqrt(2 * b * c) for b, c in pairs)
    rep = fixed_a_error(2)
    assert rep.pair_count == 3 and rep.F == f_sum == 11
    assert math.isclose(rep.value, (f_sum - g_sum) / (3 * 2**1.5), rel_tol=1e-12)


def test_fixed_a_rejects_small_modulus():
    with pytest.raises(ValueError):
        fixed_a_error(1)


def test_scale_guard():
    with pytest.raises(ScaleError):
        fixed_a_error(6421)


def test_decay_fit_power_law():
    fit = decay_fit([(10, 1.0), (100, 0.1), (1000, 0.01)])
    assert math.isclose(fit.slope, -1.0, abs_tol=1e-12)


def test_decay_fit_constant():
    fit = decay_fit([(10, 0.4), (100, 0.4), (1000, 0.4)])
    assert abs(fit.slope) < 1e-12


def test_decay_fit_errors():
    with pytest.raises(ValueError):
        decay_fit([(10, 1.0), (100, 0.1)])
    with pytest.raises(DegenerateFitError):
        decay_fit([(10, 1.0), (100, 0.0), (1000, 0.01)])
