"""Shared aggregate kernels over aligned value arrays.

Every tier (multisets, vectors, sampled functions, sliding windows)
reduces to the same arithmetic on a pair of aligned float arrays; this
module holds that arithmetic in one place so the tiers agree bit for
bit. Sums use :func:`math.fsum`, which is exact and therefore
independent of element order: dropping zero terms or permuting labels
cannot change any result.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import EmptyComparisonError
from .kinds import IndexKind, SupportMode

__all__ = [
    "common_values",
    "diamond_values",
    "aggregate_index",
    "interiority_value",
    "coincidence_value",
]


def common_values(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Pointwise signed overlap: sign(x)*sign(y)*min(|x|, |y|)."""
    return np.sign(x) * np.sign(y) * np.minimum(np.abs(x), np.abs(y))


def diamond_values(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Pointwise envelope: max(|x|, |y|)."""
    return np.maximum(np.abs(x), np.abs(y))


def _fsum(values: np.ndarray) -> float:
    # tolist() hands fsum native floats, which is both exact and fast
    return math.fsum(values.tolist())


def index_fraction(
    kind: IndexKind, x: np.ndarray, y: np.ndarray, scale: float = 1.0
) -> tuple[float, float]:
    """Numerator and denominator of the aggregate index of ``kind``.

    ``scale`` is the quadrature weight per element: 1 for multisets and
    vectors, the grid spacing dx for sampled functions.
    """
    ax = np.abs(x)
    ay = np.abs(y)
    if kind is IndexKind.S1:
        return scale * _fsum(common_values(x, y)), scale * _fsum(np.maximum(ax, ay))
    if kind is IndexKind.S2:
        return 2.0 * scale * _fsum(common_values(x, y)), scale * _fsum(ax + ay)
    if kind is IndexKind.S3:
        return scale * _fsum(x * y), scale * _fsum(np.maximum(ax, ay) ** 2)
    # S4 normalizes the raw product mass by both total masses
    return scale * _fsum(x * y), (scale * _fsum(ax)) * (scale * _fsum(ay))


def aggregate_index(
    kind: IndexKind, x: np.ndarray, y: np.ndarray, scale: float = 1.0
) -> float:
    """Aggregate similarity index over one aligned array pair."""
    num, den = index_fraction(kind, x, y, scale)
    if den == 0.0:
        raise EmptyComparisonError(f"{kind.value} denominator is zero: no mass to compare")
    return num / den


def interiority_value(
    x: np.ndarray, y: np.ndarray, mode: SupportMode, scale: float = 1.0
) -> float:
    """Nesting degree: shared mass over the smaller total mass.

    Restricted mode keeps only positions whose values agree in sign,
    in the numerator and in both denominator masses alike.
    """
    ax = np.abs(x)
    ay = np.abs(y)
    if mode is SupportMode.RESTRICTED:
        keep = np.sign(x) * np.sign(y) > 0
        ax = ax[keep]
        ay = ay[keep]
    num = scale * _fsum(np.minimum(ax, ay))
    den = min(scale * _fsum(ax), scale * _fsum(ay))
    if den == 0.0:
        raise EmptyComparisonError("interiority denominator is zero: no mass on the selected support")
    return num / den


def coincidence_value(
    x: np.ndarray, y: np.ndarray, mode: SupportMode, scale: float = 1.0
) -> float:
    """Product of interiority and the S1 index; the factorization is
    exact because it is computed as that product."""
    return interiority_value(x, y, mode, scale) * aggregate_index(IndexKind.S1, x, y, scale)
