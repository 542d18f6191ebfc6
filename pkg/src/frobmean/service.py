"""FastAPI service exposing the library; the CLI is a thin client of
these endpoints (in-process by default, over HTTP with --server)."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import acceptance
from .asymptotics import ITEMS, const_combination, item_check, s1_growth_check
from .counting import lambda_mean_check, lambda_range, region_partition_scan, sigma_weighted_check
from .frobenius import GeneratorSet, InfiniteGapsError, f_three, oracle_f
from .meanvalue import BoxSpec, box_sums, decay_fit, fixed_a_error
from . import schemas as S

app = FastAPI(title="frobmean", version="0.1.0")


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/frob", response_model=S.FrobResponse)
def frob(req: S.FrobRequest) -> S.FrobResponse:
    try:
        gens = GeneratorSet(tuple(req.gens))
        if len(gens.normalized) == 3 and len(req.gens) == 3:
            res = f_three(*req.gens)
        else:
            res = oracle_f(gens)
    except (InfiniteGapsError, ValueError) as e:
        raise HTTPException(status_code=422, detail=str(e))
    return S.FrobResponse(g=res.g, f=res.f, method=res.method,
                          reduction_factor=res.reduction_factor)


@app.post("/mean-scan", response_model=S.MeanScanResponse)
def mean_scan(req: S.MeanScanRequest) -> S.MeanScanResponse:
    x1, x2, x3 = (S.parse_rational(s) for s in req.x)
    rows = []
    pts = []
    slope = None
    try:
        for n in sorted(req.n_values):
            rep = box_sums(BoxSpec(x1, x2, x3, n), workers=req.workers)
            pts.append((n, abs(rep.E)))
            if len(pts) >= 3 and all(e > 0 for _, e in pts):
                slope = decay_fit(pts).slope
            rows.append(S.MeanScanRow(N=n, F=rep.F, G=rep.G, E=rep.E,
                                      triple_count=rep.triple_count, slope_so_far=slope))
    except ValueError as e:
        raise HTTPException(status_code=422, detail=str(e))
    return S.MeanScanResponse(rows=rows, slope=slope)


@app.post("/fixed-a-scan", response_model=S.FixedAScanResponse)
def fixed_a_scan(req: S.FixedAScanRequest) -> S.FixedAScanResponse:
    x1, x2 = S.parse_rational(req.x1), S.parse_rational(req.x2)
    rows = []
    try:
        for a in sorted(req.a_values):
            rep = fixed_a_error(a, x1, x2)
            rows.append(S.FixedAScanRow(a=rep.a, F=rep.F, G=rep.G,
                                        pair_count=rep.pair_count, value=rep.value))
    except ValueError as e:
        raise HTTPException(status_code=422, detail=str(e))
    pts = [(r.a, abs(r.value)) for r in rows]
    slope = decay_fit(pts).slope if len(pts) >= 3 and all(e > 0 for _, e in pts) else None
    return S.FixedAScanResponse(rows=rows, slope=slope)


def _criteria_response(results) -> S.CriteriaResponse:
    models = [S.CriterionModel(num=r.num, name=r.name, passed=r.passed,
                               detail=r.detail, seconds=r.seconds) for r in results]
    return S.CriteriaResponse(results=models, all_passed=all(r.passed for r in results))


@app.post("/identities", response_model=S.CriteriaResponse)
def identities(req: S.CriteriaRequest) -> S.CriteriaResponse:
    only = req.only or [1, 2, 3, 4, 5, 6, 7]
    if any(i not in range(1, 8) for i in only):
        raise HTTPException(status_code=422, detail="identity criteria are 1..7")
    return _criteria_response(acceptance.run_all(only))


@app.post("/partition-check", response_model=S.PartitionResponse)
def partition_check(req: S.PartitionRequest) -> S.PartitionResponse:
    alpha = S.parse_rational(req.alpha)
    if alpha <= 0:
        raise HTTPException(status_code=422, detail="alpha must be positive")
    ok, scanned, base = region_partition_scan(req.R, alpha)
    return S.PartitionResponse(ok=ok, scanned=scanned, base_size=base)


@app.post("/lambda-asym", response_model=S.LambdaAsymResponse)
def lambda_asym(req: S.LambdaAsymRequest) -> S.LambdaAsymResponse:
    lam_rows = []
    r_max = max(req.r_values)
    for alpha_s in req.alphas:
        alpha = S.parse_rational(alpha_s)
        if alpha <= 0:
            raise HTTPException(status_code=422, detail="alpha must be positive")
        parts = lambda_range(r_max, alpha)
        for delta in req.deltas:
            for r in sorted(req.r_values):
                rep = lambda_mean_check(r, delta, alpha, parts[:r])
                lam_rows.append(S.LambdaAsymRow(alpha=alpha_s, delta=delta, R=r,
                                                lhs=str(rep.lhs), main=rep.main,
                                                rel_err=rep.rel_err))
    sig_rows = [
        S.SigmaAsymRow(delta=d, R=req.sigma_r, lhs=rep.lhs, main=rep.main, rel_err=rep.rel_err)
        for d in req.sigma_deltas
        for rep in [sigma_weighted_check(req.sigma_r, d)]
    ]
    return S.LambdaAsymResponse(lambda_rows=lam_rows, sigma_rows=sig_rows)


@app.post("/asym-consts", response_model=S.AsymConstsResponse)
def asym_consts(req: S.AsymConstsRequest) -> S.AsymConstsResponse:
    items = [
        S.AsymItemRow(id=iid, R=rep.R, S=rep.S, main=rep.main,
                      remainder_ratio=rep.remainder_ratio)
        for iid, item in ITEMS.items()
        for rep in (item_check(item, r) for r in req.r_grid)
    ]
    value, target = const_combination()
    return S.AsymConstsResponse(items=items, const_value=value, const_target=target,
                                s1_ratios=s1_growth_check(req.s1_grid))


@app.post("/self-test", response_model=S.CriteriaResponse)
def self_test(req: S.CriteriaRequest) -> S.CriteriaResponse:
    only = req.only
    if only and any(i not in range(1, 15) for i in only):
        raise HTTPException(status_code=422, detail="criteria are 1..14")
    return _criteria_response(acceptance.run_all(only))
