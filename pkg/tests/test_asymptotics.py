import math
from fractions import Fraction

import pytest

from frobmean.asymptotics import (
    ITEMS,
    const_combination,
    const_combination_coefficients,
    item_check,
    s1_growth_check,
)


def test_item_catalogue_complete():
    expected = {f"a{p}" for p in (1, 2, 3)} | {f"b{p}" for p in (1, 2, 3)} | set("cdefghijklmnoprs")
    assert set(ITEMS) == expected and len(ITEMS) == 22


def test_linear_item_by_hand():
    rep = item_check(ITEMS["a1"], 100)
    assert rep.S == 5050.0 and rep.main == 5000.0
    # remainder is R/2 + O(1), ratio against R stays near 1/2
    assert math.isclose(rep.remainder_ratio, 0.5, abs_tol=0.01)


def test_items_remainders_bounded():
    # the remainder ratio must not grow across a decade
    for iid, item in ITEMS.items():
        r_small = item_check(item, 10**3).remainder_ratio
        r_large = item_check(item, 10**4).remainder_ratio
        assert r_large < max(4 * r_small, 1e-6), (iid, r_small, r_large)


def test_item_check_rejects_small_range():
    with pytest.raises(ValueError):
        item_check(ITEMS["c"], 9)


def test_const_combination_matches_target():
    value, target = const_combination()
    assert math.isclose(target, 4 * math.pi / 15, rel_tol=0)
    assert abs(value - target) < 1e-12


def test_const_combination_exact_coefficients():
    assert const_combination_coefficients() == (Fraction(0), Fraction(4, 15), Fraction(0))


def test_s1_growth_finite():
    rows = s1_growth_check([50, 100])
    assert [b for b, _ in rows] == [50, 100]
    assert all(0 < v < 5 for _, v in rows)
    with pytest.raises(ValueError):
        s1_growth_check([5])
