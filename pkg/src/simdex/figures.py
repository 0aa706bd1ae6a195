"""Deterministic figure artifacts.

Three emitters, all returning file contents as text so callers decide
where bytes land: a similarity heatmap over [-1,1]^2 (CSV plus PGM
image), a random scatter relating the four indices, and the pointwise
sine/cosine comparison curves over one period.
"""

from __future__ import annotations

import math

import numpy as np

from .fileio import fmt_float, pgm_text
from .functions import (
    SampledFunction,
    elementwise_common_product,
    elementwise_diamond,
    elementwise_index,
    functional_index,
)
from .kinds import IndexKind
from .scalar import index_arrays

__all__ = ["heatmap_texts", "scatter_text", "sincos_text"]

BOUNDED_KINDS = (IndexKind.S1, IndexKind.S2, IndexKind.S3)


def _symmetric_axis(resolution: int) -> np.ndarray:
    # antisymmetrize so axis[n-1-i] == -axis[i] exactly; the diagonal and
    # anti-diagonal of the grid then hit x == y and x == -y bit for bit
    axis = np.linspace(-1.0, 1.0, resolution)
    return 0.5 * (axis - axis[::-1])


def heatmap_texts(kind: IndexKind, resolution: int = 201) -> tuple[str, str]:
    """CSV (``x,y,value``) and PGM renderings of the index over
    [-1,1]^2 on a ``resolution``-point axis.

    The undefined (0,0) cell of the bounded kinds is left empty in the
    CSV and rendered mid-gray. Pixels map value -1 to 0 and +1 to 255,
    rounding halves away from zero.
    """
    if resolution < 3:
        raise ValueError("resolution must be at least 3")
    axis = _symmetric_axis(resolution)
    xg, yg = np.meshgrid(axis, axis, indexing="ij")
    grid = index_arrays(kind, xg, yg)

    coords = [fmt_float(v) for v in axis]
    cells = [[fmt_float(v) for v in row] for row in grid]
    lines = ["x,y,value"]
    for i in range(resolution):
        for j in range(resolution):
            if kind in BOUNDED_KINDS and axis[i] == 0.0 and axis[j] == 0.0:
                lines.append(f"{coords[i]},{coords[j]},")
            else:
                lines.append(f"{coords[i]},{coords[j]},{cells[i][j]}")
    csv_text = "\n".join(lines) + "\n"

    pixels = np.floor(255.0 * (grid + 1.0) / 2.0 + 0.5).astype(np.int64).clip(0, 255)
    # image rows run from y = +1 down to -1, columns from x = -1 to +1
    return csv_text, pgm_text(pixels.T[::-1, :])


def scatter_text(samples: int = 10000, seed: int = 1) -> str:
    """CSV ``x,y,s1,s2,s3,s4`` for uniform random pairs on [-1,1]^2.

    The measure-zero (0,0) draw is rejected and resampled so every row
    is defined for all four kinds. Deterministic for a fixed seed.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = np.random.default_rng(seed)
    xs = rng.uniform(-1.0, 1.0, samples)
    ys = rng.uniform(-1.0, 1.0, samples)
    undefined = (xs == 0.0) & (ys == 0.0)
    while undefined.any():
        count = int(undefined.sum())
        xs[undefined] = rng.uniform(-1.0, 1.0, count)
        ys[undefined] = rng.uniform(-1.0, 1.0, count)
        undefined = (xs == 0.0) & (ys == 0.0)
    columns = [index_arrays(kind, xs, ys) for kind in IndexKind]
    lines = ["x,y,s1,s2,s3,s4"]
    for i in range(samples):
        row = [fmt_float(xs[i]), fmt_float(ys[i])] + [fmt_float(col[i]) for col in columns]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def sincos_text(resolution: int = 4096) -> str:
    """CSV of the pointwise sine/cosine comparison over one period.

    Columns are ``x,f,g,common,diamond,s1p`` with f = sin and g = cos
    on [0, 2*pi); footer comments carry the four aggregate functional
    values over the period.
    """
    if resolution < 8:
        raise ValueError("resolution must be at least 8")
    dx = 2.0 * math.pi / resolution
    x = dx * np.arange(resolution)
    f = SampledFunction(0.0, dx, np.sin(x))
    g = SampledFunction(0.0, dx, np.cos(x))
    common = elementwise_common_product(f, g).values
    diamond = elementwise_diamond(f, g).values
    s1p = elementwise_index(IndexKind.S1, f, g).values
    lines = ["x,f,g,common,diamond,s1p"]
    for i in range(resolution):
        lines.append(
            ",".join(
                fmt_float(v)
                for v in (x[i], f.values[i], g.values[i], common[i], diamond[i], s1p[i])
            )
        )
    for kind in IndexKind:
        lines.append(f"# {kind.value} = {fmt_float(functional_index(kind, f, g))}")
    return "\n".join(lines) + "\n"
