"""Request and response bodies for the HTTP service.

JSON carries doubles losslessly here: Python serializes floats in
shortest round-trip form, so a value posted to the service and the
value the library computes stay bit-identical across the wire.
"""

from __future__ import annotations

from typing import Dict, List, Literal

from pydantic import BaseModel, Field

from ..functions import SampledFunction
from ..kinds import BoundaryMode, IndexKind, SlideDirection, SupportMode
from ..sliding import SlideResult

ComparisonOp = Literal["index", "interiority", "coincidence"]


class HealthResponse(BaseModel):
    status: str
    version: str


class ValueResponse(BaseModel):
    value: float


class ScalarEvalRequest(BaseModel):
    kind: IndexKind = IndexKind.S1
    x: float
    y: float


class ComparisonOptions(BaseModel):
    op: ComparisonOp = "index"
    kind: IndexKind = IndexKind.S1
    mode: SupportMode = SupportMode.RESTRICTED


class MsetCompareRequest(ComparisonOptions):
    a: Dict[str, float]
    b: Dict[str, float]


class VectorCompareRequest(ComparisonOptions):
    a: List[float] = Field(min_length=1)
    b: List[float] = Field(min_length=1)


class FunctionPayload(BaseModel):
    origin: float = 0.0
    dx: float = Field(gt=0)
    values: List[float] = Field(min_length=1)

    @classmethod
    def from_function(cls, f: SampledFunction) -> "FunctionPayload":
        return cls(origin=f.origin, dx=f.dx, values=f.values.tolist())

    def to_function(self) -> SampledFunction:
        return SampledFunction(self.origin, self.dx, self.values)


class FunctionCompareRequest(ComparisonOptions):
    a: FunctionPayload
    b: FunctionPayload


class SlideRequest(BaseModel):
    kind: IndexKind = IndexKind.S1
    direction: SlideDirection = SlideDirection.CORRELATION
    boundary: BoundaryMode = BoundaryMode.FULL
    f: FunctionPayload
    g: FunctionPayload


class SlideResponse(BaseModel):
    lags: List[int]
    values: List[float]
    degenerate: List[bool]
    dx: float

    @classmethod
    def from_result(cls, result: SlideResult) -> "SlideResponse":
        return cls(
            lags=list(result.lags),
            values=list(result.values),
            degenerate=list(result.degenerate),
            dx=result.dx,
        )

    def to_result(self) -> SlideResult:
        return SlideResult(tuple(self.lags), tuple(self.values), tuple(self.degenerate), self.dx)


class MatchRequest(BaseModel):
    signal: FunctionPayload
    template: FunctionPayload


class MatchResponse(BaseModel):
    best_lag: int
    score: float
    sweep: SlideResponse


class HeatmapRequest(BaseModel):
    kind: IndexKind = IndexKind.S1
    resolution: int = Field(default=201, ge=3)


class HeatmapResponse(BaseModel):
    csv: str
    pgm: str


class ScatterRequest(BaseModel):
    samples: int = Field(default=10000, ge=1)
    seed: int = 1


class SincosRequest(BaseModel):
    resolution: int = Field(default=4096, ge=8)


class CsvResponse(BaseModel):
    csv: str
