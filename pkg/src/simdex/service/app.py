"""FastAPI application exposing the similarity engine over HTTP.

Domain errors surface as structured 422 responses with a stable
machine-readable ``code`` so clients can map them back to the same
exception types the library raises in-process.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import (
    BothZeroError,
    EmptyComparisonError,
    FormatError,
    GridMismatchError,
    KernelTooLongError,
    LengthMismatchError,
    SimdexError,
)
from ..figures import heatmap_texts, scatter_text, sincos_text
from ..functions import functional_coincidence, functional_index, functional_interiority
from ..multiset import RealMultiset, mset_coincidence, mset_index, mset_interiority
from ..scalar import scalar_index
from ..sliding import slide, template_match
from ..vectors import vector_coincidence, vector_index, vector_interiority
from .schemas import (
    CsvResponse,
    FunctionCompareRequest,
    HealthResponse,
    HeatmapRequest,
    HeatmapResponse,
    MatchRequest,
    MatchResponse,
    MsetCompareRequest,
    ScalarEvalRequest,
    ScatterRequest,
    SincosRequest,
    SlideRequest,
    SlideResponse,
    ValueResponse,
    VectorCompareRequest,
)

ERROR_CODES = {
    BothZeroError: "both_zero",
    EmptyComparisonError: "empty_comparison",
    GridMismatchError: "grid_mismatch",
    LengthMismatchError: "length_mismatch",
    KernelTooLongError: "kernel_too_long",
    FormatError: "format",
}

_MSET_OPS = {
    "index": mset_index,
    "interiority": mset_interiority,
    "coincidence": mset_coincidence,
}
_VECTOR_OPS = {
    "index": vector_index,
    "interiority": vector_interiority,
    "coincidence": vector_coincidence,
}
_FUNCTION_OPS = {
    "index": functional_index,
    "interiority": functional_interiority,
    "coincidence": functional_coincidence,
}


def create_app() -> FastAPI:
    app = FastAPI(title="simdex", version=__version__)

    @app.exception_handler(SimdexError)
    async def domain_error(request: Request, exc: SimdexError) -> JSONResponse:
        code = ERROR_CODES.get(type(exc), "domain")
        return JSONResponse(
            status_code=422,
            content={"detail": {"code": code, "message": str(exc)}},
        )

    @app.get("/health", response_model=HealthResponse)
    async def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/scalar/eval", response_model=ValueResponse)
    async def scalar_eval(req: ScalarEvalRequest) -> ValueResponse:
        return ValueResponse(value=scalar_index(req.kind, req.x, req.y))

    @app.post("/compare/mset", response_model=ValueResponse)
    async def compare_mset(req: MsetCompareRequest) -> ValueResponse:
        a, b = RealMultiset(req.a), RealMultiset(req.b)
        if req.op == "index":
            value = mset_index(req.kind, a, b)
        else:
            value = _MSET_OPS[req.op](a, b, mode=req.mode)
        return ValueResponse(value=value)

    @app.post("/compare/vector", response_model=ValueResponse)
    async def compare_vector(req: VectorCompareRequest) -> ValueResponse:
        if req.op == "index":
            value = vector_index(req.kind, req.a, req.b)
        else:
            value = _VECTOR_OPS[req.op](req.a, req.b, mode=req.mode)
        return ValueResponse(value=value)

    @app.post("/compare/function", response_model=ValueResponse)
    async def compare_function(req: FunctionCompareRequest) -> ValueResponse:
        a, b = req.a.to_function(), req.b.to_function()
        if req.op == "index":
            value = functional_index(req.kind, a, b)
        else:
            value = _FUNCTION_OPS[req.op](a, b, mode=req.mode)
        return ValueResponse(value=value)

    @app.post("/slide", response_model=SlideResponse)
    async def slide_endpoint(req: SlideRequest) -> SlideResponse:
        result = slide(
            req.kind,
            req.f.to_function(),
            req.g.to_function(),
            direction=req.direction,
            boundary=req.boundary,
        )
        return SlideResponse.from_result(result)

    @app.post("/match", response_model=MatchResponse)
    async def match_endpoint(req: MatchRequest) -> MatchResponse:
        best_lag, score, sweep = template_match(req.signal.to_function(), req.template.to_function())
        return MatchResponse(best_lag=best_lag, score=score, sweep=SlideResponse.from_result(sweep))

    @app.post("/figures/heatmap", response_model=HeatmapResponse)
    async def heatmap_endpoint(req: HeatmapRequest) -> HeatmapResponse:
        csv_text, pgm = heatmap_texts(req.kind, resolution=req.resolution)
        return HeatmapResponse(csv=csv_text, pgm=pgm)

    @app.post("/figures/scatter", response_model=CsvResponse)
    async def scatter_endpoint(req: ScatterRequest) -> CsvResponse:
        return CsvResponse(csv=scatter_text(samples=req.samples, seed=req.seed))

    @app.post("/figures/sincos", response_model=CsvResponse)
    async def sincos_endpoint(req: SincosRequest) -> CsvResponse:
        return CsvResponse(csv=sincos_text(resolution=req.resolution))

    return app


app = create_app()
