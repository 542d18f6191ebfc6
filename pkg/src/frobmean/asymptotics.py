"""Numeric checks of closed-form sum asymptotics and the assembled
constant combination.

Each item states a summand t(n, R), the closed-form main term, and the
claimed remainder order; ``item_check`` sums the first R terms and
reports how the remainder compares to the claimed order.  Two items
(r and s) claim only boundedness and carry a zero main term.

Sums run in extended (80-bit) precision with pairwise accumulation:
several items have true remainders so small (e.g. O(1/R) against a
main term of size R^3) that double precision would measure rounding
noise instead of the remainder.  The irrational constants are seeded
from mpmath at full longdouble precision for the same reason.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath
import numpy as np

from .contfrac import s1

LD = np.longdouble
PI = LD(mpmath.nstr(mpmath.pi, 30))
LOG2 = LD(mpmath.nstr(mpmath.log(2), 30))


@dataclass(frozen=True)
class AsymptoticItem:
    id: str
    summand: Callable[[np.ndarray, np.longdouble], np.ndarray]  # vectorized over n
    main: Callable[[np.longdouble], np.longdouble]
    ord: float  # remainder is O(R^ord), possibly times log R
    log_factor: bool = False


@dataclass(frozen=True)
class ItemReport:
    id: str
    R: int
    S: float
    main: float
    remainder_ratio: float


def _poly_item(iid: str, p: int) -> AsymptoticItem:
    return AsymptoticItem(
        id=iid, summand=lambda n, R, p=p: n**p,
        main=lambda R, p=p: R ** (p + 1) / (p + 1), ord=p)


def _poly_log_item(iid: str, p: int) -> AsymptoticItem:
    return AsymptoticItem(
        id=iid, summand=lambda n, R, p=p: n**p * np.log(R / n),
        main=lambda R, p=p: R ** (p + 1) / (p + 1) ** 2, ord=p, log_factor=True)


ITEMS: dict[str, AsymptoticItem] = {
    **{f"a{p}": _poly_item(f"a{p}", p) for p in (1, 2, 3)},
    **{f"b{p}": _poly_log_item(f"b{p}", p) for p in (1, 2, 3)},
    "c": AsymptoticItem("c", lambda n, R: n * (R - n) / (R + n),
                        lambda R: (LD(3) / 2 - 2 * LOG2) * R**2, 1),
    "d": AsymptoticItem("d", lambda n, R: n**2 * (R - n) ** 2 / (R + n) ** 2,
                        lambda R: (LD(25) / 3 - 12 * LOG2) * R**3, 2),
    "e": AsymptoticItem("e", lambda n, R: (R - n) / (n**2 + R**2),
                        lambda R: PI / 4 - LOG2 / 2, -1),
    "f": AsymptoticItem("f", lambda n, R: n**2 * np.log1p(R * (R - n) / (n * (R + n))),
                        lambda R: (LD(5) / 6 - LOG2 / 3 - PI / 6) * R**3, 2, log_factor=True),
    "g": AsymptoticItem("g", lambda n, R: n**2 * (R - n) / (R**2 + n**2),
                        lambda R: (LD(1) / 2 + LOG2 / 2 - PI / 4) * R**2, 1),
    "h": AsymptoticItem("h", lambda n, R: n**3 * (R - n) / (R + n),
                        lambda R: (LD(17) / 12 - 2 * LOG2) * R**4, 3),
    "i": AsymptoticItem("i", lambda n, R: n**4 * np.log1p(R * (R - n) / (n * (R + n))),
                        lambda R: (PI / 10 - LD(3) / 20 - LOG2 / 5) * R**5, 4, log_factor=True),
    "j": AsymptoticItem("j", lambda n, R: n**4 * (R - n) / (R**2 + n**2),
                        lambda R: (PI / 4 - LD(5) / 12 - LOG2 / 2) * R**4, 3),
    "k": AsymptoticItem("k", lambda n, R: n**2 * (R - n) / (R + n),
                        lambda R: (2 * LOG2 - LD(4) / 3) * R**3, 2),
    "l": AsymptoticItem("l", lambda n, R: n * (R - n) ** 2 / (R + n) ** 2,
                        lambda R: (8 * LOG2 - LD(11) / 2) * R**2, 1),
    "m": AsymptoticItem("m", lambda n, R: n * np.log1p(n / R),
                        lambda R: R**2 / 4, 1),
    "n": AsymptoticItem("n", lambda n, R: n**2 * np.log1p(n / R),
                        lambda R: (2 * LOG2 / 3 - LD(5) / 18) * R**3, 2),
    "o": AsymptoticItem("o", lambda n, R: np.log1p(n**2 / R**2) / n**2,
                        lambda R: (PI / 2 - LOG2) / R, -2),
    "p": AsymptoticItem("p", lambda n, R: (R - n) ** 2 / (R + n) ** 2,
                        lambda R: (3 - 4 * LOG2) * R, 0),
    "r": AsymptoticItem("r", lambda n, R: n * np.log((R**2 + n**2) / (n * (R + n))),
                        lambda R: R * 0, 2),
    "s": AsymptoticItem("s", lambda n, R: (R + n) / (n**2 + R**2),
                        lambda R: R * 0, 0),
}


def item_check(item: AsymptoticItem, R: int) -> ItemReport:
    """Sum the item over n <= R and compare with its main term."""
    if R < 10:
        raise ValueError("R must be >= 10")
    n = np.arange(1, R + 1, dtype=LD)
    S = np.sum(item.summand(n, LD(R)))  # pairwise, 80-bit
    main = item.main(LD(R))
    scale = LD(R) ** item.ord * (np.log(LD(R)) if item.log_factor else LD(1))
    return ItemReport(id=item.id, R=R, S=float(S), main=float(main),
                      remainder_ratio=float(abs(S - main) / scale))


def all_item_reports(grid: tuple[int, ...] = (10**3, 10**4, 10**5)) -> dict[str, list[ItemReport]]:
    return {iid: [item_check(item, R) for R in grid] for iid, item in ITEMS.items()}


# the five addends assembled in the final constant computation
_ADDENDS: tuple[tuple[Fraction, Fraction, Fraction], ...] = (
    # (rational part, coefficient of pi, coefficient of log 2)
    (Fraction(53, 150), Fraction(0), Fraction(0)),
    (Fraction(19, 75), Fraction(0), Fraction(0)),
    (Fraction(-91, 900), Fraction(2, 15), Fraction(-2, 5)),
    (Fraction(14, 5), Fraction(11, 120), Fraction(-251, 60)),
    (Fraction(-119, 36), Fraction(1, 24), Fraction(55, 12)),
)


def const_combination() -> tuple[float, float]:
    """The five-addend combination and its closed-form target 4*pi/15."""
    value = math.fsum(float(r) + float(cp) * math.pi + float(cl) * math.log(2)
                      for r, cp, cl in _ADDENDS)
    return value, 4 * math.pi / 15


def const_combination_coefficients() -> tuple[Fraction, Fraction, Fraction]:
    """Exact (rational, pi, log 2) coefficient totals of the combination."""
    rat = sum((r for r, _, _ in _ADDENDS), Fraction(0))
    cpi = sum((c for _, c, _ in _ADDENDS), Fraction(0))
    clog = sum((c for _, _, c in _ADDENDS), Fraction(0))
    return rat, cpi, clog


def s1_growth_check(b_grid: list[int]) -> list[tuple[int, float]]:
    """For each b, the ratio of the summed partial-quotient totals of a/b
    (a < b) to b*log(b)^2."""
    out = []
    for b in b_grid:
        if b < 10:
            raise ValueError("each b must be >= 10")
        total = sum(s1(Fraction(a, b)) for a in range(1, b))
        out.append((b, total / (b * math.log(b) ** 2)))
    return out
