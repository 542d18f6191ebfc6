"""Request/response models for the HTTP service.

Rationals travel as "p/q" strings (plain integers allowed); floats are
never accepted for exact parameters.
"""

from __future__ import annotations

import re
from fractions import Fraction

from pydantic import BaseModel, Field, field_validator

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def parse_rational(s: str) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL_RE.match(s):
        raise ValueError(f"rational must be an integer or p/q string, got {s!r}")
    return Fraction(s)


def _validate_rational(s: str) -> str:
    parse_rational(s)
    return s


class FrobRequest(BaseModel):
    gens: list[int] = Field(min_length=1)


class FrobResponse(BaseModel):
    g: int
    f: int
    method: str
    reduction_factor: int


class MeanScanRequest(BaseModel):
    n_values: list[int] = Field(min_length=1)
    x: tuple[str, str, str] = ("1", "1", "1")
    workers: int = 1

    @field_validator("x")
    @classmethod
    def _x_rational(cls, v):
        for s in v:
            _validate_rational(s)
        return v


class MeanScanRow(BaseModel):
    N: int
    F: int
    G: float
    E: float
    triple_count: int
    slope_so_far: float | None


class MeanScanResponse(BaseModel):
    rows: list[MeanScanRow]
    slope: float | None


class FixedAScanRequest(BaseModel):
    a_values: list[int] = Field(min_length=1)
    x1: str = "1"
    x2: str = "1"

    _v1 = field_validator("x1", "x2")(_validate_rational)


class FixedAScanRow(BaseModel):
    a: int
    F: int
    G: float
    pair_count: int
    value: float


class FixedAScanResponse(BaseModel):
    rows: list[FixedAScanRow]
    slope: float | None


class CriterionModel(BaseModel):
    num: int
    name: str
    passed: bool
    detail: str
    seconds: float


class CriteriaRequest(BaseModel):
    only: list[int] | None = None


class CriteriaResponse(BaseModel):
    results: list[CriterionModel]
    all_passed: bool


class PartitionRequest(BaseModel):
    R: int = Field(ge=1)
    alpha: str

    _v = field_validator("alpha")(_validate_rational)


class PartitionResponse(BaseModel):
    ok: bool
    scanned: int
    base_size: int


class LambdaAsymRequest(BaseModel):
    r_values: list[int] = [200, 800]
    deltas: list[int] = [1, 2, 3, 6]
    alphas: list[str] = ["1/2", "2/3", "3/2"]
    sigma_r: int = 10**4
    sigma_deltas: list[int] = [1, 2, 6]

    @field_validator("alphas")
    @classmethod
    def _alphas_rational(cls, v):
        for s in v:
            _validate_rational(s)
        return v


class LambdaAsymRow(BaseModel):
    alpha: str
    delta: int
    R: int
    lhs: str  # exact rational
    main: float
    rel_err: float


class SigmaAsymRow(BaseModel):
    delta: int
    R: int
    lhs: float
    main: float
    rel_err: float


class LambdaAsymResponse(BaseModel):
    lambda_rows: list[LambdaAsymRow]
    sigma_rows: list[SigmaAsymRow]


class AsymConstsRequest(BaseModel):
    r_grid: list[int] = [10**3, 10**4, 10**5]
    s1_grid: list[int] = [500, 1000, 2000]


class AsymItemRow(BaseModel):
    id: str
    R: int
    S: float
    main: float
    remainder_ratio: float


class AsymConstsResponse(BaseModel):
    items: list[AsymItemRow]
    const_value: float
    const_target: float
    s1_ratios: list[tuple[int, float]]
