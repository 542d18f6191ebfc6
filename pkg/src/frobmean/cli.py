"""Command-line front end.

Every subcommand goes through the HTTP API: against a remote server
with --server, otherwise against an in-process application instance.
Reports are CSV (header row, exact integers plain, rationals as p/q,
floats with 17 significant digits).
"""

from __future__ import annotations

import csv
import os
import sys
from fractions import Fraction

import click
import httpx


def _fmt(v) -> str:
    if isinstance(v, bool):
        return str(v)
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def _write_csv(path: str, header: list[str], rows: list[list]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(v) for v in row])


class ApiClient:
    """POSTs to a remote server when given, otherwise to the in-process app."""

    def __init__(self, server: str | None):
        if server:
            self._client = httpx.Client(base_url=server, timeout=None)
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict) -> dict:
        resp = self._client.post(path, json=payload)
        if resp.status_code == 422:
            detail = resp.json().get("detail", "invalid arguments")
            raise click.UsageError(str(detail))
        resp.raise_for_status()
        return resp.json()


def _ints(s: str) -> list[int]:
    try:
        return [int(p) for p in s.split(",") if p]
    except ValueError:
        raise click.UsageError(f"expected comma-separated integers, got {s!r}")


def _rationals(s: str) -> list[str]:
    parts = [p.strip() for p in s.split(",") if p.strip()]
    for p in parts:
        try:
            Fraction(p)
        except (ValueError, ZeroDivisionError):
            raise click.UsageError(f"expected p/q rationals, got {p!r}")
        if "." in p or "e" in p.lower():
            raise click.UsageError(f"floats are not accepted for exact parameters: {p!r}")
    return parts


def _print_criteria(data: dict) -> bool:
    for r in data["results"]:
        status = "PASS" if r["passed"] else "FAIL"
        click.echo(f"criterion {r['num']:02d} {r['name']}: {status} "
                   f"({r['seconds']:.1f}s) {r['detail']}")
    return data["all_passed"]


@click.group(invoke_without_command=True)
@click.option("--server", default=None, help="Base URL of a running service; default is in-process.")
@click.option("--self-test", is_flag=True, help="Run the full acceptance suite and exit.")
@click.pass_context
def main(ctx, server, self_test):
    ctx.ensure_object(dict)
    ctx.obj["client"] = ApiClient(server)
    if self_test:
        ok = _print_criteria(ctx.obj["client"].post("/self-test", {}))
        ctx.exit(0 if ok else 1)
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())
        ctx.exit(0)


@main.command()
@click.option("--gens", required=True, help="Comma-separated generators, e.g. 3,5,7.")
@click.pass_context
def frob(ctx, gens):
    """Frobenius number of a generator set."""
    data = ctx.obj["client"].post("/frob", {"gens": _ints(gens)})
    click.echo(f"g={data['g']} f={data['f']} method={data['method']}")


@main.command("mean-scan")
@click.option("--N", "n_values", required=True, help="Comma-separated box sizes.")
@click.option("--x", default="1,1,1", help="Aspect ratios x1,x2,x3 as rationals.")
@click.option("--out", default=None, help="CSV output path.")
@click.option("--workers", default=lambda: int(os.environ.get("FROBMEAN_WORKERS", "1")),
              help="Worker processes (default $FROBMEAN_WORKERS or 1).")
@click.pass_context
def mean_scan(ctx, n_values, x, out, workers):
    """Box sums of f against the main term over a grid of sizes."""
    xs = _rationals(x)
    if len(xs) != 3:
        raise click.UsageError("--x needs exactly three rationals")
    data = ctx.obj["client"].post(
        "/mean-scan", {"n_values": _ints(n_values), "x": xs, "workers": workers})
    rows = [[r["N"], r["F"], r["G"], r["E"], r["slope_so_far"] if r["slope_so_far"] is not None else ""]
            for r in data["rows"]]
    if out:
        _write_csv(out, ["N", "F", "G", "E", "slope-so-far"], rows)
    for r in data["rows"]:
        click.echo(f"N={r['N']} F={r['F']} E={_fmt(r['E'])}")
    if data["slope"] is not None:
        click.echo(f"slope={_fmt(data['slope'])}")


@main.command("fixed-a-scan")
@click.option("--a", "a_values", required=True, help="Comma-separated moduli.")
@click.option("--x1", default="1")
@click.option("--x2", default="1")
@click.option("--out", default=None, help="CSV output path.")
@click.pass_context
def fixed_a_scan(ctx, a_values, x1, x2, out):
    """Normalized mean error at fixed first generator."""
    (x1s,), (x2s,) = _rationals(x1), _rationals(x2)
    data = ctx.obj["client"].post(
        "/fixed-a-scan", {"a_values": _ints(a_values), "x1": x1s, "x2": x2s})
    rows = [[r["a"], r["F"], r["G"], r["pair_count"], r["value"]] for r in data["rows"]]
    if out:
        _write_csv(out, ["a", "F", "G", "count", "E"], rows)
    for r in data["rows"]:
        click.echo(f"a={r['a']} E={_fmt(r['value'])}")
    if data["slope"] is not None:
        click.echo(f"slope={_fmt(data['slope'])}")


@main.command()
@click.option("--only", default=None, help="Subset of identity criteria (1..7), comma-separated.")
@click.pass_context
def identities(ctx, only):
    """Exact identity suites: oracle equivalence, scaling, pair law,
    divisor-sum identity, quadruple correspondence, band-count identity,
    signed partition."""
    payload = {"only": _ints(only)} if only else {}
    ok = _print_criteria(ctx.obj["client"].post("/identities", payload))
    ctx.exit(0 if ok else 1)


@main.command("partition-check")
@click.option("--R", "r_value", required=True, type=int)
@click.option("--alpha", required=True, help="Band slope as p/q.")
@click.pass_context
def partition_check(ctx, r_value, alpha):
    """Exhaustive signed five-case partition scan."""
    (al,) = _rationals(alpha)
    data = ctx.obj["client"].post("/partition-check", {"R": r_value, "alpha": al})
    status = "PASS" if data["ok"] else "FAIL"
    click.echo(f"partition R={r_value} alpha={al}: {status} "
               f"({data['scanned']} tuples, base region {data['base_size']})")
    ctx.exit(0 if data["ok"] else 1)


@main.command("lambda-asym")
@click.option("--R", "r_values", default="200,800", help="Comma-separated cutoffs.")
@click.option("--delta", "deltas", default="1,2,3,6")
@click.option("--alpha", "alphas", default="1/2,2/3,3/2", help="Comma-separated p/q slopes.")
@click.option("--sigma-R", "sigma_r", default=10**4, type=int)
@click.option("--sigma-delta", "sigma_deltas", default="1,2,6")
@click.option("--out", default=None, help="CSV output path.")
@click.pass_context
def lambda_asym(ctx, r_values, deltas, alphas, sigma_r, sigma_deltas, out):
    """Mean-value asymptotics of the weighted counts and the
    divisor-weighted power sum."""
    data = ctx.obj["client"].post("/lambda-asym", {
        "r_values": _ints(r_values), "deltas": _ints(deltas),
        "alphas": _rationals(alphas), "sigma_r": sigma_r,
        "sigma_deltas": _ints(sigma_deltas)})
    rows = [["lambda", r["alpha"], r["delta"], r["R"], r["lhs"], r["main"], r["rel_err"]]
            for r in data["lambda_rows"]]
    rows += [["sigma", "", r["delta"], r["R"], r["lhs"], r["main"], r["rel_err"]]
             for r in data["sigma_rows"]]
    if out:
        _write_csv(out, ["kind", "alpha", "delta", "R", "lhs", "main", "rel_err"], rows)
    ok = True
    by_combo: dict[tuple, dict] = {}
    for r in data["lambda_rows"]:
        by_combo.setdefault((r["alpha"], r["delta"]), {})[r["R"]] = r["rel_err"]
    for (al, d), errs in by_combo.items():
        rs = sorted(errs)
        decreasing = errs[rs[-1]] < errs[rs[0]] and errs[rs[-1]] < 0.10
        ok &= decreasing
        click.echo(f"lambda alpha={al} delta={d}: "
                   + " ".join(f"R={r}:{_fmt(errs[r])[:8]}" for r in rs)
                   + (" PASS" if decreasing else " FAIL"))
    for r in data["sigma_rows"]:
        good = r["rel_err"] < 0.01
        ok &= good
        click.echo(f"sigma delta={r['delta']} R={r['R']}: rel_err={_fmt(r['rel_err'])[:9]} "
                   + ("PASS" if good else "FAIL"))
    ctx.exit(0 if ok else 1)


@main.command("asym-consts")
@click.option("--out", default=None, help="CSV output path.")
@click.pass_context
def asym_consts(ctx, out):
    """Closed-form sum checks, the constant combination and the
    quotient-sum growth ratios."""
    data = ctx.obj["client"].post("/asym-consts", {})
    rows = [[r["id"], r["R"], r["S"], r["main"], r["remainder_ratio"]] for r in data["items"]]
    if out:
        _write_csv(out, ["id", "R", "S", "main", "remainder_ratio"], rows)
    ok = True
    by_id: dict[str, list] = {}
    for r in data["items"]:
        by_id.setdefault(r["id"], []).append(r)
    for iid, reps in by_id.items():
        reps.sort(key=lambda r: r["R"])
        ratios = [r["remainder_ratio"] for r in reps]
        bounded = max(ratios) <= 3 * ratios[0]
        last = reps[-1]
        rel_ok = last["main"] == 0 or abs(last["S"] - last["main"]) <= 0.01 * abs(last["main"])
        ok &= bounded and rel_ok
        click.echo(f"item {iid}: bounded={bounded} main-term-ok={rel_ok}")
    diff = abs(data["const_value"] - data["const_target"])
    const_ok = diff < 1e-12
    ok &= const_ok
    click.echo(f"constant combination: |diff|={_fmt(diff)} {'PASS' if const_ok else 'FAIL'}")
    ratios = [r for _, r in data["s1_ratios"]]
    spread = max(ratios) / min(ratios)
    growth_ok = spread < 3
    ok &= growth_ok
    click.echo(f"quotient-sum growth spread={_fmt(spread)[:6]} {'PASS' if growth_ok else 'FAIL'}")
    ctx.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
