"""The fourteen-point acceptance suite.

Each criterion is a standalone function returning a CriterionResult at
the stated scales; ``run_all`` executes them in order.  The suite is
shared by the CLI ``--self-test`` flag, the service ``/self-test``
endpoint, and the acceptance tests.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from math import gcd

from .asymptotics import all_item_reports, const_combination, s1_growth_check
from .counting import (
    _divisor_lists,
    eq4_check,
    lambda_mean_check,
    lambda_range,
    quadruple_bijection_check,
    region_partition_scan,
    sigma_weighted_check,
)
from .frobenius import GeneratorSet, f_three, oracle_f
from .meanvalue import BoxSpec, box_sums, decay_fit, fixed_a_error
from .numtheory import build_tables, gcd3, heilbronn_lhs


@dataclass(frozen=True)
class CriterionResult:
    num: int
    name: str
    passed: bool
    detail: str
    seconds: float

    @property
    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"criterion {self.num:02d} {self.name}: {status} ({self.seconds:.1f}s) {self.detail}"


def _timed(num, name, fn) -> CriterionResult:
    t0 = time.perf_counter()
    passed, detail = fn()
    return CriterionResult(num, name, passed, detail, time.perf_counter() - t0)


def criterion_1(limit: int = 60) -> CriterionResult:
    def run():
        checks = bad = 0
        for tri in combinations_with_replacement(range(2, limit + 1), 3):
            if gcd3(*tri) != 1:
                continue
            fo = oracle_f(GeneratorSet(tri)).f
            for p in set(permutations(tri)):
                checks += 1
                if f_three(*p).f != fo:
                    bad += 1
        return bad == 0, f"{checks} triples, {bad} mismatches"
    return _timed(1, "oracle-equivalence", run)


def criterion_2(d_max: int = 5, ab_max: int = 30, c_max: int = 30) -> CriterionResult:
    def run():
        checks = bad = 0
        for a in range(1, ab_max + 1):
            for b in range(1, ab_max + 1):
                if gcd(a, b) != 1:
                    continue
                for c in range(1, c_max + 1):
                    if gcd3(a, b, c) != 1:
                        continue
                    base = f_three(a, b, c).f
                    for d in range(1, d_max + 1):
                        if gcd(d, c) != 1:
                            continue
                        checks += 1
                        if f_three(d * a, d * b, c).f != d * base:
                            bad += 1
        return bad == 0, f"{checks} scalings, {bad} mismatches"
    return _timed(2, "scaling-identity", run)


def criterion_3(limit: int = 50) -> CriterionResult:
    def run():
        checks = bad = 0
        for a in range(2, limit + 1):
            for b in range(a + 1, limit + 1):
                if gcd(a, b) != 1:
                    continue
                checks += 1
                if oracle_f(GeneratorSet.of(a, b)).f != a * b:
                    bad += 1
        return bad == 0, f"{checks} pairs, {bad} mismatches"
    return _timed(3, "pair-product-law", run)


def criterion_4(limit: int = 10**4) -> CriterionResult:
    def run():
        tables = build_tables(limit)
        bad = sum(1 for a in range(1, limit + 1)
                  if heilbronn_lhs(a, tables) != Fraction(tables.phi[a], a))
        return bad == 0, f"a <= {limit}, {bad} mismatches"
    return _timed(4, "mobius-divisor-identity", run)


def criterion_5(limit: int = 300) -> CriterionResult:
    def run():
        dl = _divisor_lists(limit * limit)
        bad = [a for a in range(2, limit + 1) if not quadruple_bijection_check(a, dl)[0]]
        return not bad, f"a <= {limit}, failures: {bad[:5] if bad else 'none'}"
    return _timed(5, "quadruple-correspondence", run)


def criterion_6(limit: int = 100) -> CriterionResult:
    alphas = [Fraction(2, 7), Fraction(3, 5), Fraction(5, 3), Fraction(7, 2)]

    def run():
        dl = _divisor_lists(limit + 1)
        gen_total = gen_bad = skipped = 0
        for a in range(2, limit + 1):
            for al in alphas:
                generic, equal, _, _ = eq4_check(a, al, dl)
                if not generic:
                    skipped += 1
                    continue
                gen_total += 1
                if not equal:
                    gen_bad += 1
        return gen_bad == 0, (f"{gen_total} generic points exact, {gen_bad} failures; "
                              f"{skipped} non-generic points excluded")
    return _timed(6, "band-count-identity", run)


def criterion_7() -> CriterionResult:
    grid = [(50, Fraction(2, 7)), (80, Fraction(3, 5)), (100, Fraction(5, 3))]

    def run():
        fails = []
        scanned = 0
        for R, al in grid:
            ok, n, _ = region_partition_scan(R, al)
            scanned += n
            if not ok:
                fails.append((R, str(al)))
        return not fails, f"{scanned} tuples scanned, failures: {fails if fails else 'none'}"
    return _timed(7, "signed-partition", run)


def criterion_8() -> CriterionResult:
    deltas = (1, 2, 3, 6)
    alphas = (Fraction(1, 2), Fraction(2, 3), Fraction(3, 2))

    def run():
        fails = []
        for al in alphas:
            parts = lambda_range(800, al)
            for delta in deltas:
                e200 = lambda_mean_check(200, delta, al, parts[:200]).rel_err
                e800 = lambda_mean_check(800, delta, al, parts).rel_err
                if not (e800 < e200 and e800 < 0.10):
                    fails.append(f"alpha={al},delta={delta}:{e200:.4f}->{e800:.4f}")
        return not fails, ("all 12 combinations decrease and end < 10%" if not fails
                           else f"{len(fails)}/12 combos fail: " + "; ".join(fails))
    return _timed(8, "lambda-mean-asymptotic", run)


def criterion_9(R: int = 10**4) -> CriterionResult:
    def run():
        errs = {d: sigma_weighted_check(R, d).rel_err for d in (1, 2, 6)}
        ok = all(e < 0.01 for e in errs.values())
        return ok, " ".join(f"delta={d}:{e:.5f}" for d, e in errs.items())
    return _timed(9, "sigma-weighted-asymptotic", run)


def criterion_10(grid: tuple[int, ...] = (40, 80, 160, 320)) -> CriterionResult:
    one = Fraction(1)

    def run():
        es = [abs(box_sums(BoxSpec(one, one, one, n)).E) for n in grid]
        inversions = sum(1 for i in range(len(es) - 1) if es[i + 1] >= es[i])
        halved = es[-1] < es[0] / 2
        slope = decay_fit(list(zip(grid, es))).slope
        ok = inversions <= 1 and halved and -0.9 <= slope <= -0.25
        return ok, (f"|E|={['%.4g' % e for e in es]} inversions={inversions} "
                    f"halved={halved} slope={slope:.3f}")
    return _timed(10, "box-mean-decay", run)


def criterion_11(grid: tuple[int, ...] = (101, 401, 1601, 6401)) -> CriterionResult:
    def run():
        es = [abs(fixed_a_error(a).value) for a in grid]
        inversions = sum(1 for i in range(len(es) - 1) if es[i + 1] >= es[i])
        slope = decay_fit(list(zip(grid, es))).slope
        ok = inversions <= 1 and -0.5 <= slope <= -0.05
        return ok, f"|E|={['%.4g' % e for e in es]} inversions={inversions} slope={slope:.3f}"
    return _timed(11, "fixed-modulus-decay", run)


def criterion_12() -> CriterionResult:
    def run():
        fails = []
        for iid, reps in all_item_reports().items():
            ratios = [r.remainder_ratio for r in reps]
            if max(ratios) > 3 * ratios[0]:
                fails.append(f"{iid}:unbounded")
            last = reps[-1]
            if last.main != 0 and abs(last.S - last.main) > 0.01 * abs(last.main):
                fails.append(f"{iid}:rel-err")
        return not fails, "22 item rows" + ("" if not fails else f"; failures: {fails}")
    return _timed(12, "closed-form-sums", run)


def criterion_13() -> CriterionResult:
    def run():
        value, target = const_combination()
        return abs(value - target) < 1e-12, f"|diff|={abs(value - target):.2e}"
    return _timed(13, "constant-combination", run)


def criterion_14(grid: tuple[int, ...] = (500, 1000, 2000)) -> CriterionResult:
    def run():
        ratios = [r for _, r in s1_growth_check(list(grid))]
        spread = max(ratios) / min(ratios)
        return spread < 3, f"ratios={['%.4f' % r for r in ratios]} spread={spread:.3f}"
    return _timed(14, "quotient-sum-growth", run)


ALL_CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
                criterion_11, criterion_12, criterion_13, criterion_14)


def run_all(only: list[int] | None = None) -> list[CriterionResult]:
    results = []
    for i, fn in enumerate(ALL_CRITERIA, start=1):
        if only and i not in only:
            continue
        results.append(fn())
    return results
