"""Weighted solution counts over the region xy + wz = a with
w/x <= alpha < w/(x-z), their Moebius-cleaned variant, the sum-over-
multipliers rho*, the convergent/quadruple correspondence, the five-case
signed decomposition of the lattice region, and the aggregate
asymptotic checks these feed.

All counting values are exact rationals; floating point enters only in
the closed-form main terms.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .contfrac import rodseth_tables
from .frobenius import rho_eval
from .numtheory import divisors, mobius, totient

# ---------------------------------------------------------------------------
# lambda: weighted count of (x, z, y, w) with xy + wz = a inside the band
# w/x <= alpha < w/(x - z).  When x = z the upper bound is +infinity, so the
# condition degenerates to w/x <= alpha.


def _divisor_lists(limit: int) -> list[list[int]]:
    divs: list[list[int]] = [[] for _ in range(limit + 1)]
    for d in range(1, limit + 1):
        for m in range(d, limit + 1, d):
            divs[m].append(d)
    return divs


def lambda_parts(a: int, alpha: Fraction, divlists: list[list[int]] | None = None) -> tuple[int, int]:
    """Split lambda(a, alpha) = S1 + alpha*S2 into its integer parts.

    S1 accumulates y + w over solutions, S2 accumulates z.  Enumerates
    (x, y) with xy <= a and then divisor pairs w*z of the remainder.
    """
    if a < 1:
        raise ValueError("a must be >= 1")
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    p, q = alpha.numerator, alpha.denominator
    s1 = 0
    s2 = 0
    for x in range(1, a + 1):
        for y in range(1, a // x + 1):
            rem = a - x * y
            if rem == 0:
                # w = 0 forces z = x (only there is the band unbounded above)
                s1 += y
                s2 += x
                continue
            for z in divlists[rem] if divlists is not None else divisors(rem):
                if z > x:
                    break
                w = rem // z
                if w * q <= p * x and (x == z or p * (x - z) < w * q):
                    s1 += y + w
                    s2 += z
    return s1, s2


def lambda_direct(a: int, alpha: Fraction, divlists: list[list[int]] | None = None) -> Fraction:
    """Exact lambda(a, alpha) = sum over solutions of (y + w + alpha*z)."""
    s1, s2 = lambda_parts(a, alpha, divlists)
    return s1 + alpha * s2


def _lambda_star_direct_parts(a: int, alpha: Fraction) -> tuple[int, int]:
    """Starred sum: same region but with gcd(z, x) = 1 and gcd(w, y) = 1.

    Coprimality chosen to match the quadruple correspondence, where both
    column pairs of the solution matrix are coprime; cross-validated
    against the Moebius route.  Note gcd(0, y) = y, so w = 0 admits y = 1
    only.
    """
    p, q = alpha.numerator, alpha.denominator
    s1 = 0
    s2 = 0
    for x in range(1, a + 1):
        for y in range(1, a // x + 1):
            rem = a - x * y
            if rem == 0:
                # w=0 forces z=x; then gcd(z,x)=x and gcd(0,y)=y demand
                # x = y = 1, i.e. only a = 1 contributes here
                if x == 1 and y == 1:
                    s1 += 1
                    s2 += 1
                continue
            for z in divisors(rem):
                if z > x:
                    break
                if gcd(z, x) != 1:
                    continue
                w = rem // z
                if gcd(w, y) != 1:
                    continue
                if w * q <= p * x and (x == z or p * (x - z) < w * q):
                    s1 += y + w
                    s2 += z
    return s1, s2


def lambda_star(a: int, alpha: Fraction, method: str = "mobius",
                divlists: list[list[int]] | None = None) -> Fraction:
    """Moebius-cleaned count: either by inclusion-exclusion over divisor
    pairs (d1, d2) with d1*d2 | a, or by the direct coprime enumeration."""
    if a < 1:
        raise ValueError("a must be >= 1")
    if method == "direct":
        s1, s2 = _lambda_star_direct_parts(a, alpha)
        return s1 + alpha * s2
    if method != "mobius":
        raise ValueError(f"unknown method {method!r}")
    total = Fraction(0)
    for d1 in divisors(a):
        m1 = mobius(d1)
        if m1 == 0:
            continue
        for d2 in divisors(a // d1):
            m2 = mobius(d2)
            if m2 == 0:
                continue
            alpha2 = d1 * alpha / d2
            s1, s2 = lambda_parts(a // (d1 * d2), alpha2, divlists)
            total += m1 * m2 * d2 * (s1 + alpha2 * s2)
    return total


# ---------------------------------------------------------------------------
# rho*: sum of the piecewise Frobenius form over multipliers coprime to a.


def rho_star(a: int, alpha: Fraction) -> Fraction:
    if a < 1:
        raise ValueError("a must be >= 1")
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if a == 1:
        # empty expansion: single l = 1 with tables q=(0,1), s=(1,0)
        return Fraction(1) + alpha
    total = Fraction(0)
    for l in range(1, a):
        if gcd(l, a) != 1:
            continue
        total += rho_eval(a, l, Fraction(1), alpha)
    return total


def is_generic(a: int, alpha: Fraction) -> bool:
    """True when alpha (in lowest terms p/q) is not a ratio w/x with
    0 <= w <= a, 1 <= x <= a.

    At non-generic points the cross-identity between rho* and the two
    lambda* terms can fail: a solution of the reciprocal-side count with
    w/x exactly 1/alpha has no counterpart band quadruple.  The same
    p, q bound covers 1/alpha.
    """
    p, q = alpha.numerator, alpha.denominator
    return not (p <= a and q <= a)


def eq4_check(a: int, alpha: Fraction,
              divlists: list[list[int]] | None = None) -> tuple[bool, bool, Fraction, Fraction]:
    """Compare rho*_a(alpha) with lambda*(a, alpha) + alpha*lambda*(a, 1/alpha).

    Returns (generic, equal, lhs, rhs); only generic points are expected
    to match exactly.
    """
    lhs = rho_star(a, alpha)
    rhs = lambda_star(a, alpha, "mobius", divlists) + alpha * lambda_star(a, 1 / alpha, "mobius", divlists)
    return is_generic(a, alpha), lhs == rhs, lhs, rhs


# ---------------------------------------------------------------------------
# quadruple correspondence: convergent tuples vs solutions of
# u1*u2 - v1*v2 = a with column constraints.


def _convergent_quadruples(a: int) -> Counter:
    out: Counter = Counter()
    for l in range(1, a):
        if gcd(l, a) != 1:
            continue
        t = rodseth_tables(a, l)
        q, s = t.q, t.s
        for n in range(t.m + 1):
            # (q_n, s_{n-1}, q_{n-1}, s_n) with the +1 storage offset
            out[(q[n + 1], s[n], q[n], s[n + 1])] += 1
    return out


def _bruteforce_quadruples(a: int, divlists: list[list[int]] | None = None) -> Counter:
    out: Counter = Counter()
    for u1 in range(1, a + 1):
        for u2 in range((a + u1 - 1) // u1, a + 1):
            prod = u1 * u2 - a
            if prod == 0:
                # v1*v2 = 0: v=0 is coprime to u only when u = 1
                if u1 == 1:
                    for v2 in range(u2):
                        if gcd(u2, v2) == 1:
                            out[(1, u2, 0, v2)] += 1
                if u2 == 1 and u1 > 1:
                    for v1 in range(1, u1):
                        if gcd(u1, v1) == 1:
                            out[(u1, 1, v1, 0)] += 1
                elif u2 == 1 and u1 == 1:
                    pass  # already counted as (1,1,0,0)
                continue
            for v1 in divlists[prod] if divlists is not None else divisors(prod):
                if v1 >= u1:
                    break
                v2 = prod // v1
                if v2 < u2 and gcd(u1, v1) == 1 and gcd(u2, v2) == 1:
                    out[(u1, u2, v1, v2)] += 1
    return out


def quadruple_bijection_check(a: int, divlists: list[list[int]] | None = None) -> tuple[bool, int]:
    """Multiset equality of the two quadruple enumerations; returns
    (equal, common cardinality)."""
    if a < 2:
        raise ValueError("a must be >= 2")
    conv = _convergent_quadruples(a)
    brute = _bruteforce_quadruples(a, divlists)
    return conv == brute, sum(conv.values())


# ---------------------------------------------------------------------------
# five-case signed decomposition of the region nQ' + kQ <= R,
# alpha(n-k) < Q <= alpha*n.  The thresholds U1 = sqrt(R/alpha) and
# U2 = sqrt(R*alpha) are irrational for the test parameters, so every
# comparison against them is done on squares.


@dataclass(frozen=True)
class LatticeTuple:
    n: int
    k: int
    qp: int  # Q'
    q: int   # Q

    def __post_init__(self):
        if self.n < 1 or not 1 <= self.k <= self.n or self.qp < 1 or self.q < 0:
            raise ValueError(f"invalid lattice tuple {self}")


def _le_sqrt(x, s) -> bool:
    """x <= sqrt(s) for rational x and s >= 0."""
    return x <= 0 or x * x <= s


def _lt_sqrt(x, s) -> bool:
    return x < 0 or x * x < s


def _sqrt_le(s, x) -> bool:
    """sqrt(s) <= x."""
    return x >= 0 and s <= x * x


def _sqrt_lt(s, x) -> bool:
    return x > 0 and s < x * x


def in_base_region(t: LatticeTuple, R: int, alpha: Fraction) -> bool:
    n, k, qp, q = t.n, t.k, t.qp, t.q
    return n * qp + k * q <= R and alpha * (n - k) < q <= alpha * n


def region_signed_membership(t: LatticeTuple, R: int, alpha: Fraction) -> int:
    """Signed number of case regions containing the tuple.

    Equals 1 on the base region and 0 elsewhere; case 4 carries an inner
    inclusion-exclusion with a negative part.
    """
    n, k, qp, q = t.n, t.k, t.qp, t.q
    u1sq = Fraction(R) / alpha
    u2sq = R * alpha
    count = 0

    # case 1: n below the first threshold
    if _le_sqrt(n, u1sq) and k <= n:
        if alpha * (n - k) < q <= alpha * n and n * qp <= R - k * q:
            count += 1

    shifted = qp + alpha * k
    if _le_sqrt(k, u1sq):
        # case 2: outer over (k, Q') with Q' + alpha*k below sqrt(R*alpha)
        if _le_sqrt(shifted, u2sq):
            if _sqrt_lt(u1sq, n) and n * shifted <= R:
                if alpha * (n - k) < q <= alpha * n:
                    count += 1
            if R < n * shifted <= R + alpha * k * k:
                if alpha * (n - k) < q and k * q <= R - n * qp:
                    count += 1
        # case 3: the thin strip just above that threshold
        elif _le_sqrt(shifted * R / (R + alpha * k * k), u2sq):
            if _sqrt_lt(u1sq, n) and n * shifted <= R + alpha * k * k:
                if alpha * (n - k) < q and k * q <= R - n * qp:
                    count += 1

    if _le_sqrt(q, u2sq):
        corner = (u2sq - q * qp) / (q + qp)  # = U2*(U2-Q)/(U2+Q) threshold, squared form
        inner41 = _sqrt_lt(u1sq, n) and n * (q + qp) <= R and _sqrt_lt(u1sq, k) and k <= n
        if _sqrt_le(u2sq, corner):
            # case 4: trapezoid with one subtracted triangle
            if inner41:
                count += 1
            if R < n * (q + qp) <= R + q * q / alpha and _sqrt_lt(u1sq, k) and k * q <= R - n * qp:
                count += 1
            if (_sqrt_lt(u1sq, n - q / alpha) and n * (q + qp) <= R + q * q / alpha
                    and _sqrt_lt(u1sq, k) and k <= n - q / alpha):
                count -= 1
        elif _le_sqrt(q + qp, u2sq):
            # case 5: the remaining triangle
            if inner41:
                count += 1
            if (R < n * (q + qp) and _sqrt_le(u1sq * q * q, R - n * qp)
                    and _sqrt_lt(u1sq, k) and k * q <= R - n * qp):
                count += 1

    return count


def region_partition_scan(R: int, alpha: Fraction) -> tuple[bool, int, int]:
    """Exhaustively compare signed membership with the base-region
    indicator over every tuple with nQ' + kQ <= R.

    Returns (ok, tuples scanned, base-region size).
    """
    ok = True
    scanned = 0
    base = 0
    for n in range(1, R + 1):
        for k in range(1, n + 1):
            for qp in range(1, R // n + 1):
                for q in range(0, (R - n * qp) // k + 1):
                    t = LatticeTuple(n, k, qp, q)
                    scanned += 1
                    expect = 1 if in_base_region(t, R, alpha) else 0
                    base += expect
                    if region_signed_membership(t, R, alpha) != expect:
                        ok = False
    return ok, scanned, base


# ---------------------------------------------------------------------------
# aggregate asymptotic checks


def phi_tau_sum(delta: int) -> Fraction:
    """Sum over tau | delta of phi(tau)/tau^2."""
    return sum((Fraction(totient(t), t * t) for t in divisors(delta)), Fraction(0))


def lambda_range(R: int, alpha: Fraction) -> list[tuple[int, int]]:
    """(S1, S2) parts of lambda(a, alpha) for a = 1..R."""
    divlists = _divisor_lists(R)
    return [lambda_parts(a, alpha, divlists) for a in range(1, R + 1)]


@dataclass(frozen=True)
class AsymReport:
    lhs: Fraction | float
    main: float
    rel_err: float


def lambda_mean_check(R: int, delta: int, alpha: Fraction,
                      parts: list[tuple[int, int]] | None = None) -> AsymReport:
    """delta * sum of lambda(a, alpha) over a <= R divisible by delta,
    against the (4*pi/15) * R^(5/2) * sqrt(alpha) main term."""
    if not 1 <= delta <= R:
        raise ValueError("need R >= delta >= 1")
    if parts is None:
        parts = lambda_range(R, alpha)
    s1 = sum(parts[a - 1][0] for a in range(delta, R + 1, delta))
    s2 = sum(parts[a - 1][1] for a in range(delta, R + 1, delta))
    lhs = delta * (s1 + alpha * s2)
    main = (4 * math.pi / 15) * R ** 2.5 * math.sqrt(alpha) * float(phi_tau_sum(delta))
    return AsymReport(lhs=lhs, main=main, rel_err=abs(float(lhs) - main) / main)


def sigma_weighted_check(R: int, delta: int) -> AsymReport:
    """Compensated sum of sigma_{-1}(a) * a^(3/2) over multiples of delta,
    against (pi^2/15) * R^(5/2) / delta times the divisor-phi factor."""
    if not 1 <= delta <= R:
        raise ValueError("need R >= delta >= 1")
    sig = [0] * (R + 1)
    for d in range(1, R + 1):
        for m in range(d, R + 1, d):
            sig[m] += d
    # sigma_{-1}(a) * a^{3/2} = sigma(a) * sqrt(a)
    lhs = math.fsum(sig[a] * math.sqrt(a) for a in range(delta, R + 1, delta))
    main = (math.pi ** 2 / 15) * R ** 2.5 / delta * float(phi_tau_sum(delta))
    return AsymReport(lhs=lhs, main=main, rel_err=abs(lhs - main) / main)
