"""Box sums of f(a, b, c) against the (8/pi)*sqrt(abc) main term.

The exact side F is an integer; the per-a pair sums are vectorized with
numpy after splitting (b, c) into classes by the exact gcds d1 = (a, b),
d2 = (a, c).  Within a class the scaling identity pulls out d1*d2 and the
remaining evaluation is the continued-fraction formula with modulus
a1 = a/(d1*d2), grouped by multiplier l so each band table is built once.

Band selection inside the numpy kernel compares c/b in double precision
against the ratio chain; this is exact while c*q stays well below 1/eps,
which the scale guard enforces with a wide margin.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .contfrac import rodseth_tables
from .frobenius import GeneratorSet, oracle_g
from .numtheory import divisors, mobius

# beyond this the double-precision band comparisons are no longer
# guaranteed exact (c * q must stay below ~1/(2 eps))
_SCALE_LIMIT = 10**6


class ScaleError(ValueError):
    """Requested box exceeds the validated exact-arithmetic range."""


class DegenerateFitError(ValueError):
    """A decay fit was requested through a point with |E| = 0."""


@dataclass(frozen=True)
class BoxSpec:
    """Aspect ratios x1, x2, x3 and the size N of the summation box
    b <= x1*N, c <= x2*N, a <= x3*N."""

    x1: Fraction
    x2: Fraction
    x3: Fraction
    N: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be >= 1")
        for x in (self.x1, self.x2, self.x3):
            if x <= 0:
                raise ValueError("aspect ratios must be positive")
        if min(self.limits) < 1:
            raise ValueError("box must contain at least one point per axis")

    @property
    def limits(self) -> tuple[int, int, int]:
        """Inclusive integer bounds (floor of xi*N, exact rational floor)."""
        return (int(self.x1 * self.N), int(self.x2 * self.N), int(self.x3 * self.N))


@dataclass(frozen=True)
class MeanValueReport:
    F: int
    G: float
    E: float
    N: int
    triple_count: int


@dataclass(frozen=True)
class FixedAReport:
    a: int
    F: int
    G: float
    pair_count: int
    value: float  # (F - G) / (|M_a| * a^(3/2))


@dataclass(frozen=True)
class DecayFit:
    points: tuple[tuple[float, float], ...]
    slope: float
    intercept: float


def _class_sum(A: int, d1: int, d2: int, B1: int, C1: int) -> tuple[int, int]:
    """Sum of f(A, b, c) over b <= B1 with (b, A*d2) = 1 and c <= C1 with
    (c, A*d1) = 1, together with the pair count."""
    if B1 < 1 or C1 < 1:
        return 0, 0
    if A == 1:
        # f(1, b, c) = b + c
        ns_b = np.arange(1, B1 + 1, dtype=np.int64)
        ns_c = np.arange(1, C1 + 1, dtype=np.int64)
        b = ns_b[np.gcd(ns_b, d2) == 1]
        c = ns_c[np.gcd(ns_c, d1) == 1]
        if not len(b) or not len(c):
            return 0, 0
        return int(b.sum()) * len(c) + len(b) * int(c.sum()), len(b) * len(c)
    if A > 6401 or A * max(B1, C1) > _SCALE_LIMIT * _SCALE_LIMIT or C1 * A > 10**14:
        raise ScaleError(f"modulus {A} with box ({B1}, {C1}) exceeds the validated range")
    b_arr = np.nonzero(np.gcd(np.arange(B1 + 1, dtype=np.int64), A * d2) == 1)[0]
    c_valid = np.gcd(np.arange(C1 + 1, dtype=np.int64), A * d1) == 1
    if not len(b_arr) or not c_valid.any():
        return 0, 0
    jgrid = (A * np.arange(C1 // A + 1, dtype=np.int64))[None, :]
    total = 0
    count = 0
    for l in range(1, A):
        if gcd(l, A) != 1:
            continue
        t = rodseth_tables(A, l)
        q_np = np.array(t.q, dtype=np.int64)
        s_np = np.array(t.s, dtype=np.int64)
        ratios = s_np[1:].astype(np.float64) / q_np[1:].astype(np.float64)
        asc = ratios[::-1].copy()  # ascending: s_m/q_m = 0 up to s_0/q_0
        r = (b_arr * l) % A
        cc = r[:, None] + jgrid
        ok = cc <= C1
        ok &= c_valid[np.where(ok, cc, 0)]
        bb = np.broadcast_to(b_arr[:, None], cc.shape)[ok]
        cc = cc[ok]
        if not len(cc):
            continue
        n = len(asc) - np.searchsorted(asc, cc / bb, side="right")
        rho = bb * s_np[n] + cc * q_np[n + 1] - np.minimum(bb * s_np[n + 1], cc * q_np[n])
        total += int(rho.sum())
        count += len(cc)
    return total, count


def pair_sum_exact(a: int, B: int, C: int) -> tuple[int, int]:
    """Exact sum of f(a, b, c) over b <= B, c <= C with gcd(a, b, c) = 1,
    plus the number of pairs.

    Pairs are split by (d1, d2) = (gcd(a, b), gcd(a, c)); the overall
    coprimality forces gcd(d1, d2) = 1 and then f scales by d1*d2.
    """
    if a < 1 or B < 0 or C < 0:
        raise ValueError("need a >= 1 and non-negative box bounds")
    F = 0
    count = 0
    for d1 in divisors(a):
        for d2 in divisors(a // d1):
            if gcd(d1, d2) != 1:
                continue
            part, n = _class_sum(a // (d1 * d2), d1, d2, B // d1, C // d2)
            F += d1 * d2 * part
            count += n
    return F, count


def mobius_pair_count(a: int, B: int, C: int) -> int:
    """Independent count of {(b, c): b <= B, c <= C, gcd(a, b, c) = 1}."""
    return sum(mobius(d) * (B // d) * (C // d) for d in divisors(a))


def sqrt_prefix(limit: int) -> np.ndarray:
    """prefix[k] = sum of sqrt(n) for n <= k, accumulated in extended
    precision so the float64 result is compensated."""
    vals = np.sqrt(np.arange(limit + 1, dtype=np.float64)).astype(np.longdouble)
    return np.cumsum(vals)


def pair_main_term(a: int, B: int, C: int, prefix: np.ndarray) -> float:
    """(8/pi) * sqrt(a) * sum of sqrt(bc) over the coprime pairs, the
    coprimality handled by Moebius over divisors of a."""
    s = np.longdouble(0)
    for d in divisors(a):
        m = mobius(d)
        if m:
            s += m * d * prefix[B // d] * prefix[C // d]
    return float((8 / math.pi) * math.sqrt(a) * float(s))


def _a_contribution(args: tuple[int, int, int, int]) -> tuple[int, float, int]:
    a, B, C, limit = args
    prefix = _prefix_cache(limit)
    F, count = pair_sum_exact(a, B, C)
    return F, pair_main_term(a, B, C, prefix), count


_PREFIX: dict[int, np.ndarray] = {}


def _prefix_cache(limit: int) -> np.ndarray:
    if limit not in _PREFIX:
        _PREFIX.clear()
        _PREFIX[limit] = sqrt_prefix(limit)
    return _PREFIX[limit]


def box_sums(box: BoxSpec, workers: int = 1) -> MeanValueReport:
    """Exact F, compensated G and the normalized error
    E = (F - G) / (x1*x2*x3*N^(9/2)) over the box."""
    B, C, A3 = box.limits
    limit = max(B, C)
    tasks = [(a, B, C, limit) for a in range(1, A3 + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_a_contribution, tasks, chunksize=8))
    else:
        results = [_a_contribution(t) for t in tasks]
    F = sum(r[0] for r in results)
    G = math.fsum(r[1] for r in results)
    count = sum(r[2] for r in results)
    norm = float(box.x1 * box.x2 * box.x3) * box.N ** 4.5
    return MeanValueReport(F=F, G=G, E=(F - G) / norm, N=box.N, triple_count=count)


def box_sums_oracle(box: BoxSpec) -> MeanValueReport:
    """Same report with every f taken from the residue-graph oracle.

    Cubic in N with a shortest-path run per sorted triple; cross-check
    only, keep N small.
    """
    B, C, A3 = box.limits
    cache: dict[tuple[int, int, int], int] = {}
    F = 0
    terms = []
    count = 0
    from .numtheory import gcd3

    for a in range(1, A3 + 1):
        for b in range(1, B + 1):
            for c in range(1, C + 1):
                if gcd3(a, b, c) != 1:
                    continue
                key = tuple(sorted((a, b, c)))
                if key not in cache:
                    cache[key] = oracle_g(GeneratorSet(key)) + a + b + c
                F += cache[key]
                terms.append(math.sqrt(a * b * c))
                count += 1
    G = (8 / math.pi) * math.fsum(terms)
    norm = float(box.x1 * box.x2 * box.x3) * box.N ** 4.5
    return MeanValueReport(F=F, G=G, E=(F - G) / norm, N=box.N, triple_count=count)


def fixed_a_error(a: int, x1: Fraction = Fraction(1), x2: Fraction = Fraction(1)) -> FixedAReport:
    """Mean of f(a,b,c) - (8/pi)sqrt(abc) over b <= x1*a, c <= x2*a with
    gcd(a,b,c) = 1, normalized by a^(3/2)."""
    if a < 2:
        raise ValueError("a must be >= 2")
    B, C = int(x1 * a), int(x2 * a)
    F, count = pair_sum_exact(a, B, C)
    if count != mobius_pair_count(a, B, C):
        raise AssertionError(f"pair-count cross-check failed at a={a}")
    G = pair_main_term(a, B, C, sqrt_prefix(max(B, C)))
    return FixedAReport(a=a, F=F, G=G, pair_count=count,
                        value=(F - G) / (count * a**1.5))


def decay_fit(points: list[tuple[float, float]]) -> DecayFit:
    """Least-squares slope of log|E| against log(scale)."""
    if len(points) < 3:
        raise ValueError("need at least 3 points for a decay fit")
    if any(e == 0 for _, e in points):
        raise DegenerateFitError("exact cancellation: |E| = 0 at some scale")
    xs = np.log([p[0] for p in points])
    ys = np.log([abs(p[1]) for p in points])
    slope, intercept = np.polyfit(xs, ys, 1)
    return DecayFit(points=tuple((float(n), float(e)) for n, e in points),
                    slope=float(slope), intercept=float(intercept))
