"""Sieved multiplicative functions and exact divisor-sum identities.

Everything here is exact integer / rational arithmetic.  The tables are
built once up to a caller-chosen limit; queries above the limit fall back
to trial-division factorization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class NumTheoryTables:
    """Moebius, totient and divisor-sum values for 1..limit.

    Arrays are 0-indexed with a dummy entry at 0, so ``mu[n]`` is valid
    for 1 <= n <= limit.  ``spf[n]`` is the smallest prime factor of n.
    Immutable after construction; safe to share between workers.
    """

    limit: int
    mu: list[int] = field(repr=False)
    phi: list[int] = field(repr=False)
    sigma: list[int] = field(repr=False)
    spf: list[int] = field(repr=False)

    def divisors(self, n: int) -> list[int]:
        if not 1 <= n <= self.limit:
            raise ValueError(f"n={n} outside table range 1..{self.limit}")
        divs = [1]
        spf = self.spf
        while n > 1:
            p = spf[n]
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            divs = [d * p**k for d in divs for k in range(e + 1)]
        divs.sort()
        return divs


def build_tables(limit: int) -> NumTheoryTables:
    """Sieve mu, phi, sigma and smallest prime factors up to ``limit``."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    n = limit + 1
    mu = [1] * n
    phi = list(range(n))
    sigma = [1] * n
    spf = list(range(n))
    mu[0] = 0
    sigma[0] = 0
    for p in range(2, n):
        if spf[p] != p:
            continue
        for m in range(p, n, p):
            if spf[m] == m:
                spf[m] = p
            phi[m] -= phi[m] // p
        for m in range(p, n, p):
            # mu flips sign per distinct prime, zero on square divisors
            mu[m] = -mu[m]
        pp = p * p
        while pp < n:
            for m in range(pp, n, pp):
                mu[m] = 0
            pp *= p
    for m in range(2, n):
        k = m
        s = 1
        while k > 1:
            p = spf[k]
            pe = 1
            while k % p == 0:
                k //= p
                pe *= p
            s *= (pe * p - 1) // (p - 1)
        sigma[m] = s
    return NumTheoryTables(limit=limit, mu=mu, phi=phi, sigma=sigma, spf=spf)


def _factorize(n: int) -> list[tuple[int, int]]:
    """Trial-division factorization, fine for the sizes used here."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int) -> list[int]:
    """All divisors of n in ascending order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    divs = [1]
    for p, e in _factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    divs.sort()
    return divs


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    m = 1
    for _, e in _factorize(n):
        if e > 1:
            return 0
        m = -m
    return m


def totient(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    t = n
    for p, _ in _factorize(n):
        t -= t // p
    return t


def sigma_minus1(n: int) -> Fraction:
    """Sum of reciprocals of divisors of n, exactly sigma(n)/n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    s = 1
    for p, e in _factorize(n):
        s *= (p ** (e + 1) - 1) // (p - 1)
    return Fraction(s, n)


def heilbronn_lhs(a: int, tables: NumTheoryTables | None = None) -> Fraction:
    """Double Moebius sum over ordered pairs (d1, d2) with d1*d2 | a.

    Returns sum over those pairs of mu(d1)mu(d2)/(d1 d2) * sigma_{-1}(a/(d1 d2)),
    which collapses to phi(a)/a.  Computed over a common denominator a:
    each term equals mu(d1)mu(d2)*sigma(a/(d1 d2)) / a.
    """
    if a < 1:
        raise ValueError("a must be >= 1")
    if tables is not None and a <= tables.limit:
        divs = tables.divisors(a)
        mu = lambda d: tables.mu[d]
        sig = lambda m: tables.sigma[m]
    else:
        divs = divisors(a)
        mu = mobius
        sig = lambda m: sum(divisors(m))
    total = 0
    for d1 in divs:
        m1 = mu(d1)
        if m1 == 0:
            continue
        a1 = a // d1
        for d2 in (tables.divisors(a1) if tables is not None and a1 <= tables.limit else divisors(a1)):
            m2 = mu(d2)
            if m2 == 0:
                continue
            total += m1 * m2 * sig(a1 // d2)
    return Fraction(total, a)


def delta_div(q: int, a: int) -> int:
    """Divisibility indicator: 1 iff q | a."""
    if q < 1:
        raise ValueError("q must be >= 1")
    return 1 if a % q == 0 else 0


def gcd3(a: int, b: int, c: int) -> int:
    return gcd(gcd(a, b), c)
