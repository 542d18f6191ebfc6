"""Regular and negative continued fractions, plus the convergent tables
used by the fast three-generator Frobenius formula.

The negative ("ceiling") expansion of a/l drives two integer sequences
q_j (forward) and s_j (backward) whose ratios s_j/q_j form a strictly
decreasing chain from infinity down to 0; band lookups in that chain are
what make the Frobenius evaluation O(log)-ish per query.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


def rcf_expand(r: Fraction) -> list[int]:
    """Partial quotients of r = [0; a1, ..., as] for 0 < r < 1.

    The Euclidean algorithm yields the canonical form (last digit >= 2)
    directly.
    """
    if not 0 < r < 1:
        raise ValueError(f"r={r} must lie in the open interval (0, 1)")
    p, q = r.numerator, r.denominator
    digits = []
    while p:
        digits.append(q // p)
        p, q = q % p, p
    return digits


def rcf_value(digits: list[int]) -> Fraction:
    """Evaluate [0; a1, ..., as]."""
    v = Fraction(0)
    for a in reversed(digits):
        v = Fraction(1, a + v)
    return v


def s1(r: Fraction) -> int:
    """Sum of the partial quotients of r."""
    return sum(rcf_expand(r))


def ncf_expand(a: int, l: int) -> list[int]:
    """Ceiling expansion a/l = <a1; a2, ..., am>, all digits >= 2."""
    if a < 2 or not 1 <= l < a:
        raise ValueError(f"need a >= 2 and 1 <= l < a, got a={a}, l={l}")
    if gcd(a, l) != 1:
        raise ValueError(f"a={a} and l={l} must be coprime")
    digits = []
    while l:
        d = -(-a // l)  # ceil
        digits.append(d)
        a, l = l, d * l - a
    return digits


def ncf_value(digits: list[int]) -> Fraction:
    """Evaluate <a1; a2, ..., am>."""
    v = Fraction(digits[-1])
    for d in reversed(digits[:-1]):
        v = d - 1 / v
    return v


@dataclass(frozen=True)
class RodsethTables:
    """Convergent sequences for the pair (a, l).

    q and s are indexed j = -1..m, stored at offset j+1:
    q = [q_{-1}, q_0, ..., q_m] and likewise for s.  Invariants:
    q_m = a, s_{-1} = a, q_n*s_{n-1} - q_{n-1}*s_n = a, and the ratios
    s_j/q_j strictly decrease from infinity (j=-1) to 0 (j=m).
    """

    a: int
    l: int
    digits: tuple[int, ...]
    q: tuple[int, ...]
    s: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.digits)

    def band(self, t1: int, t2: int) -> int:
        """The unique n in 0..m with s_n/q_n <= t2/t1 < s_{n-1}/q_{n-1}.

        Comparisons are exact cross-multiplications; binary search over
        the decreasing ratio chain.
        """
        if t1 <= 0 or t2 < 0:
            raise ValueError("need t1 > 0 and t2 >= 0")
        q, s = self.q, self.s
        # find smallest n >= 0 with s_n * t1 <= q_n * t2
        lo, hi = 0, self.m
        while lo < hi:
            mid = (lo + hi) // 2
            if s[mid + 1] * t1 <= q[mid + 1] * t2:
                hi = mid
            else:
                lo = mid + 1
        return lo


def rodseth_tables(a: int, l: int) -> RodsethTables:
    digits = ncf_expand(a, l)
    m = len(digits)
    q = [0, 1]
    for j in range(m):
        q.append(digits[j] * q[-1] - q[-2])
    s = [0] * (m + 2)
    s[m + 1] = 0
    s[m] = 1
    for j in range(m - 1, -1, -1):
        # s_{j-1} = a_{j+1} s_j - s_{j+1}, shifted by the +1 offset
        s[j] = digits[j] * s[j + 1] - s[j + 2]
    return RodsethTables(a=a, l=l, digits=tuple(digits), q=tuple(q), s=tuple(s))
