"""Similarity-based convolution and correlation sweeps.

A sweep slides the kernel ``g`` across the signal ``f`` one sample at a
time and evaluates a similarity functional on each overlap window.
Correlation pairs f[lag+j] with g[j]; convolution is the same sweep
with the kernel reversed and the lags renumbered so that lag k matches
the standard discrete convolution index.

Boundary handling: Valid emits only lags with complete overlap; Full
emits every lag with at least one overlapping sample, reading the
signal as 0 outside its extent. Lags whose denominator has no mass are
reported with value 0 and a degenerate flag instead of aborting the
sweep.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, Tuple

import numpy as np

from ._core import aggregate_index, coincidence_value
from .errors import EmptyComparisonError, GridMismatchError, KernelTooLongError
from .functions import SampledFunction, l1_norm
from .kinds import BoundaryMode, IndexKind, SlideDirection, SupportMode

__all__ = ["SlideResult", "slide", "coincidence_correlate", "template_match"]


@dataclass(frozen=True)
class SlideResult:
    """Sweep output: one value per integer lag, lag spacing dx.

    ``degenerate[k]`` marks lags whose window had no mass to compare;
    their value is reported as 0.
    """

    lags: Tuple[int, ...]
    values: Tuple[float, ...]
    degenerate: Tuple[bool, ...]
    dx: float

    def __post_init__(self):
        if not (len(self.lags) == len(self.values) == len(self.degenerate)):
            raise ValueError("lags, values, and degenerate must have equal lengths")

    def __len__(self) -> int:
        return len(self.lags)

    def __iter__(self) -> Iterator[Tuple[int, float, bool]]:
        return iter(zip(self.lags, self.values, self.degenerate))

    def best(self) -> Tuple[int, float]:
        """Lag and value of the largest non-degenerate entry; ties go
        to the smallest lag."""
        best_pair = None
        for lag, value, flag in self:
            if flag:
                continue
            if best_pair is None or value > best_pair[1]:
                best_pair = (lag, value)
        if best_pair is None:
            raise EmptyComparisonError("every lag in the sweep is degenerate")
        return best_pair


def _windows(
    f: SampledFunction, g_values: np.ndarray, boundary: BoundaryMode
) -> Tuple[range, Callable[[int], np.ndarray]]:
    nf = len(f)
    ng = g_values.size
    if boundary is BoundaryMode.VALID:
        if ng > nf:
            raise KernelTooLongError(f"kernel has {ng} samples but the signal only {nf}")
        signal = f.values
        return range(0, nf - ng + 1), lambda lag: signal[lag : lag + ng]
    pad = np.zeros(ng - 1)
    padded = np.concatenate([pad, f.values, pad])
    return range(-(ng - 1), nf), lambda lag: padded[lag + ng - 1 : lag + 2 * ng - 1]


def _sweep(
    f: SampledFunction,
    g_values: np.ndarray,
    boundary: BoundaryMode,
    evaluate: Callable[[np.ndarray, np.ndarray], float],
) -> Tuple[list, list, list]:
    lag_range, window = _windows(f, g_values, boundary)
    lags, values, flags = [], [], []
    for lag in lag_range:
        try:
            value, flag = evaluate(window(lag), g_values), False
        except EmptyComparisonError:
            value, flag = 0.0, True
        lags.append(lag)
        values.append(value)
        flags.append(flag)
    return lags, values, flags


def _require_same_dx(f: SampledFunction, g: SampledFunction) -> None:
    if f.dx != g.dx:
        raise GridMismatchError(f"sample spacings differ: {f.dx} vs {g.dx}")


def slide(
    kind: IndexKind,
    f: SampledFunction,
    g: SampledFunction,
    direction: SlideDirection = SlideDirection.CORRELATION,
    boundary: BoundaryMode = BoundaryMode.FULL,
) -> SlideResult:
    """Similarity sweep of ``g`` across ``f`` for the chosen index.

    For S1-S3 each lag equals the functional index of the overlap
    window (zero-padded in Full mode) against the kernel, so the dx
    factors cancel per lag. S4 keeps the global normalization
    dx*sum(f[lag+j]*g[j]) / (|f| |g|) with the L1 norms of the whole
    signals, which makes the sweep a normalized version of the
    standard convolution or correlation.
    """
    _require_same_dx(f, g)
    g_values = g.values[::-1] if direction is SlideDirection.CONVOLUTION else g.values
    if kind is IndexKind.S4:
        den = l1_norm(f) * l1_norm(g)

        def evaluate(window: np.ndarray, kernel: np.ndarray) -> float:
            if den == 0.0:
                raise EmptyComparisonError("s4 denominator is zero: a signal has no mass")
            return f.dx * math.fsum((window * kernel).tolist()) / den

    else:

        def evaluate(window: np.ndarray, kernel: np.ndarray) -> float:
            return aggregate_index(kind, window, kernel, scale=f.dx)

    lags, values, flags = _sweep(f, g_values, boundary, evaluate)
    if direction is SlideDirection.CONVOLUTION:
        offset = len(g) - 1
        lags = [lag + offset for lag in lags]
    return SlideResult(tuple(lags), tuple(values), tuple(flags), f.dx)


def coincidence_correlate(
    f: SampledFunction,
    g: SampledFunction,
    boundary: BoundaryMode = BoundaryMode.FULL,
    mode: SupportMode = SupportMode.RESTRICTED,
) -> SlideResult:
    """Correlation sweep of the coincidence index (interiority times
    S1) with the chosen interiority support mode."""
    _require_same_dx(f, g)

    def evaluate(window: np.ndarray, kernel: np.ndarray) -> float:
        return coincidence_value(window, kernel, mode, scale=f.dx)

    lags, values, flags = _sweep(f, g.values, boundary, evaluate)
    return SlideResult(tuple(lags), tuple(values), tuple(flags), f.dx)


def template_match(
    signal: SampledFunction, template: SampledFunction
) -> Tuple[int, float, SlideResult]:
    """Locate ``template`` inside ``signal``.

    Runs a valid-boundary coincidence correlation with full-support
    interiority and returns (best lag, its score, the whole sweep);
    ties break toward the smallest lag.
    """
    scores = coincidence_correlate(signal, template, BoundaryMode.VALID, SupportMode.FULL)
    best_lag, score = scores.best()
    return best_lag, score, scores
