"""Frobenius numbers: residue-graph oracle for arbitrary generator sets,
the fast continued-fraction formula for triples, and the gcd-reduction
pipeline that makes the fast path applicable.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union

from .contfrac import RodsethTables, rodseth_tables

Rat = Union[int, Fraction]


class InfiniteGapsError(ValueError):
    """Raised when gcd over the generators is not 1."""


@dataclass(frozen=True)
class GeneratorSet:
    """Input multiset of generators.  Duplicates are kept (they matter
    for f = g + sum) but removed in the normalized view."""

    gens: tuple[int, ...]

    def __post_init__(self):
        if not self.gens:
            raise ValueError("generator set must be non-empty")
        if any(g < 1 for g in self.gens):
            raise ValueError("generators must be positive")

    @classmethod
    def of(cls, *gens: int) -> "GeneratorSet":
        return cls(tuple(gens))

    @property
    def normalized(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.gens)))

    @property
    def total(self) -> int:
        return sum(self.gens)

    @property
    def overall_gcd(self) -> int:
        g = 0
        for x in self.gens:
            g = gcd(g, x)
        return g


@dataclass(frozen=True)
class FrobeniusResult:
    g: int
    f: int
    method: str  # "oracle" or "rodseth"
    reduction_factor: int = 1
    had_duplicates: bool = False


def oracle_g(gens: GeneratorSet) -> int:
    """Largest non-representable integer, by shortest paths on residues.

    dist[r] = least representable value congruent to r modulo the
    smallest generator m; then g = max(dist) - m.  Returns -1 when 1 is
    a generator (everything non-negative is representable).
    """
    if gens.overall_gcd != 1:
        raise InfiniteGapsError(f"gcd of {gens.gens} is {gens.overall_gcd}, gaps are infinite")
    uniq = gens.normalized
    if uniq[0] == 1:
        return -1
    m = uniq[0]
    others = [g for g in uniq[1:] if g % m != 0]
    dist = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if dist[r] is not None and d > dist[r]:
            continue
        for g in others:
            nr = (r + g) % m
            nd = d + g
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return max(dist) - m


def oracle_f(gens: GeneratorSet) -> FrobeniusResult:
    g = oracle_g(gens)
    return FrobeniusResult(
        g=g,
        f=g + gens.total,
        method="oracle",
        had_duplicates=len(gens.gens) != len(set(gens.gens)),
    )


def find_multiplier(a: int, b: int, c: int) -> int:
    """The unique l in [1, a] with b*l = c (mod a)."""
    if a < 1:
        raise ValueError("a must be >= 1")
    if gcd(a, b) != 1:
        raise ValueError(f"b={b} has no inverse modulo a={a}")
    l = (pow(b, -1, a) * c) % a
    return l if l else a


def rho_eval(a: int, l: int, t1: Rat, t2: Rat, tables: RodsethTables | None = None) -> Rat:
    """Rodseth's piecewise form: pick the band n for the ratio t2/t1 and
    evaluate t1*s_{n-1} + t2*q_n - min(t1*s_n, t2*q_{n-1})."""
    if t1 <= 0 or t2 <= 0:
        raise ValueError("t1 and t2 must be positive")
    t = tables if tables is not None else rodseth_tables(a, l)
    n = t.band(t1, t2)
    q, s = t.q, t.s
    return t1 * s[n + 1 - 1] + t2 * q[n + 1] - min(t1 * s[n + 1], t2 * q[n])


def _reduce_pairwise(a: int, b: int, c: int) -> tuple[tuple[int, int, int], int]:
    """Strip pairwise gcds via the scaling identity f(da, db, c) = d*f(a, b, c).

    Returns a pairwise-coprime triple and the product of the factors
    removed.  Terminates because each step divides the product.
    """
    d_total = 1
    while True:
        d = gcd(a, b)
        if d > 1:
            a //= d
            b //= d
            d_total *= d
            continue
        d = gcd(a, c)
        if d > 1:
            a //= d
            c //= d
            d_total *= d
            continue
        d = gcd(b, c)
        if d > 1:
            b //= d
            c //= d
            d_total *= d
            continue
        return (a, b, c), d_total


def f_three(a: int, b: int, c: int) -> FrobeniusResult:
    """f(a, b, c) via the continued-fraction formula, with gcd reduction."""
    gens = GeneratorSet.of(a, b, c)
    if gens.overall_gcd != 1:
        raise InfiniteGapsError(f"gcd({a},{b},{c}) != 1")
    total = a + b + c
    had_dup = len({a, b, c}) < 3
    (ra, rb, rc), d = _reduce_pairwise(a, b, c)
    if min(ra, rb, rc) == 1:
        # some reduced generator is 1: f(1, y, z) = y + z
        fr = sum(sorted((ra, rb, rc))[1:])
        f = d * fr
        return FrobeniusResult(g=f - total, f=f, method="rodseth", reduction_factor=d, had_duplicates=had_dup)
    # pivot on the smallest generator for shorter expansions
    ra, rb, rc = sorted((ra, rb, rc))
    l = find_multiplier(ra, rb, rc)
    f = d * rho_eval(ra, l, rb, rc)
    return FrobeniusResult(g=f - total, f=f, method="rodseth", reduction_factor=d, had_duplicates=had_dup)
