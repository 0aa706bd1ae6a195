"""Thin typed client for the HTTP service.

With no ``base_url`` the client talks to the in-process ASGI app, so
the CLI works without a running server; with a URL it issues the same
requests over the network.  Domain errors travel as structured 422
payloads and are re-raised client-side as the original exception
types, making the transport invisible to callers.
"""

from __future__ import annotations

import asyncio
from typing import Any, Dict, Optional, Tuple

import httpx

from ..errors import (
    BothZeroError,
    EmptyComparisonError,
    FormatError,
    GridMismatchError,
    KernelTooLongError,
    LengthMismatchError,
)
from ..functions import SampledFunction
from ..kinds import BoundaryMode, IndexKind, SlideDirection, SupportMode
from ..multiset import RealMultiset
from ..sliding import SlideResult
from .schemas import ComparisonOp, FunctionPayload, SlideResponse


class ServiceError(RuntimeError):
    """The service returned an unexpected response."""


_CODE_ERRORS = {
    "both_zero": BothZeroError,
    "empty_comparison": EmptyComparisonError,
    "grid_mismatch": GridMismatchError,
    "length_mismatch": LengthMismatchError,
    "kernel_too_long": KernelTooLongError,
    "format": FormatError,
}


def _function_payload(f: SampledFunction) -> Dict[str, Any]:
    return {"origin": f.origin, "dx": f.dx, "values": f.values.tolist()}


class ServiceClient:
    """Issues requests against the simdex service, local or remote."""

    def __init__(self, base_url: Optional[str] = None, timeout: float = 30.0):
        self.base_url = base_url
        self.timeout = timeout

    def _post(self, path: str, payload: Dict[str, Any]) -> Dict[str, Any]:
        if self.base_url is None:
            return self._post_inprocess(path, payload)
        response = httpx.post(self.base_url.rstrip("/") + path, json=payload, timeout=self.timeout)
        return self._unwrap(response)

    def _post_inprocess(self, path: str, payload: Dict[str, Any]) -> Dict[str, Any]:
        from .app import app

        async def call() -> httpx.Response:
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(transport=transport, base_url="http://simdex.local") as client:
                return await client.post(path, json=payload)

        return self._unwrap(asyncio.run(call()))

    def _get(self, path: str) -> Dict[str, Any]:
        if self.base_url is None:
            return self._get_inprocess(path)
        response = httpx.get(self.base_url.rstrip("/") + path, timeout=self.timeout)
        return self._unwrap(response)

    def _get_inprocess(self, path: str) -> Dict[str, Any]:
        from .app import app

        async def call() -> httpx.Response:
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(transport=transport, base_url="http://simdex.local") as client:
                return await client.get(path)

        return self._unwrap(asyncio.run(call()))

    @staticmethod
    def _unwrap(response: httpx.Response) -> Dict[str, Any]:
        if response.status_code == 422:
            detail = response.json().get("detail")
            if isinstance(detail, dict) and "code" in detail:
                error = _CODE_ERRORS.get(detail["code"])
                if error is not None:
                    raise error(detail.get("message", ""))
            raise ServiceError(f"invalid request: {detail}")
        if response.status_code != 200:
            raise ServiceError(f"service returned {response.status_code}: {response.text}")
        return response.json()

    # ------------------------------------------------------------------
    # Typed operations
    # ------------------------------------------------------------------

    def health(self) -> Dict[str, Any]:
        return self._get("/health")

    def scalar_eval(self, kind: IndexKind, x: float, y: float) -> float:
        data = self._post("/scalar/eval", {"kind": kind.value, "x": x, "y": y})
        return float(data["value"])

    def compare_mset(
        self,
        op: ComparisonOp,
        kind: IndexKind,
        mode: SupportMode,
        a: RealMultiset,
        b: RealMultiset,
    ) -> float:
        payload = {
            "op": op,
            "kind": kind.value,
            "mode": mode.value,
            "a": {str(label): mult for label, mult in a.to_dict().items()},
            "b": {str(label): mult for label, mult in b.to_dict().items()},
        }
        return float(self._post("/compare/mset", payload)["value"])

    def compare_vector(
        self,
        op: ComparisonOp,
        kind: IndexKind,
        mode: SupportMode,
        a: list,
        b: list,
    ) -> float:
        payload = {
            "op": op,
            "kind": kind.value,
            "mode": mode.value,
            "a": [float(v) for v in a],
            "b": [float(v) for v in b],
        }
        return float(self._post("/compare/vector", payload)["value"])

    def compare_function(
        self,
        op: ComparisonOp,
        kind: IndexKind,
        mode: SupportMode,
        a: SampledFunction,
        b: SampledFunction,
    ) -> float:
        payload = {
            "op": op,
            "kind": kind.value,
            "mode": mode.value,
            "a": _function_payload(a),
            "b": _function_payload(b),
        }
        return float(self._post("/compare/function", payload)["value"])

    def slide(
        self,
        kind: IndexKind,
        f: SampledFunction,
        g: SampledFunction,
        direction: SlideDirection = SlideDirection.CORRELATION,
        boundary: BoundaryMode = BoundaryMode.FULL,
    ) -> SlideResult:
        payload = {
            "kind": kind.value,
            "direction": direction.value,
            "boundary": boundary.value,
            "f": _function_payload(f),
            "g": _function_payload(g),
        }
        data = self._post("/slide", payload)
        return SlideResponse(**data).to_result()

    def match(self, signal: SampledFunction, template: SampledFunction) -> Tuple[int, float, SlideResult]:
        payload = {"signal": _function_payload(signal), "template": _function_payload(template)}
        data = self._post("/match", payload)
        sweep = SlideResponse(**data["sweep"]).to_result()
        return int(data["best_lag"]), float(data["score"]), sweep

    def heatmap(self, kind: IndexKind, resolution: int = 201) -> Tuple[str, str]:
        data = self._post("/figures/heatmap", {"kind": kind.value, "resolution": resolution})
        return data["csv"], data["pgm"]

    def scatter(self, samples: int = 10000, seed: int = 1) -> str:
        return self._post("/figures/scatter", {"samples": samples, "seed": seed})["csv"]

    def sincos(self, resolution: int = 4096) -> str:
        return self._post("/figures/sincos", {"resolution": resolution})["csv"]
