"""Sampled real functions on a uniform grid and their similarity
functionals.

Integrals are rectangle-rule sums, dx times the exact sum of the
samples; the integrands involve min, max, and sign, so a higher-order
rule would buy nothing. All binary operations require the two grids to
be identical (same origin, spacing, and length); resampling is the
caller's job.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._core import (
    aggregate_index,
    coincidence_value,
    common_values,
    diamond_values,
    interiority_value,
)
from .errors import GridMismatchError
from .kinds import IndexKind, SupportMode
from .scalar import index_arrays

__all__ = [
    "SampledFunction",
    "l1_norm",
    "elementwise_common_product",
    "elementwise_diamond",
    "elementwise_index",
    "functional_index",
    "functional_interiority",
    "functional_coincidence",
]


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """A real function sampled at x_j = origin + j*dx, j = 0..len-1."""

    origin: float
    dx: float
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1 or values.size == 0:
            raise ValueError("values must be a nonempty one-dimensional sequence")
        if not (self.dx > 0) or not math.isfinite(self.dx):
            raise ValueError("dx must be a positive finite spacing")
        values = values.copy()
        values.flags.writeable = False
        object.__setattr__(self, "origin", float(self.origin))
        object.__setattr__(self, "dx", float(self.dx))
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return int(self.values.size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SampledFunction):
            return NotImplemented
        return (
            self.origin == other.origin
            and self.dx == other.dx
            and np.array_equal(self.values, other.values)
        )

    @property
    def grid(self) -> np.ndarray:
        """Sample x-coordinates."""
        return self.origin + self.dx * np.arange(len(self))

    def with_values(self, values: np.ndarray) -> "SampledFunction":
        """Same grid, new samples."""
        return SampledFunction(self.origin, self.dx, values)


def _require_aligned(f: SampledFunction, g: SampledFunction) -> None:
    if f.origin != g.origin or f.dx != g.dx or len(f) != len(g):
        raise GridMismatchError(
            f"grids differ: (origin={f.origin}, dx={f.dx}, n={len(f)})"
            f" vs (origin={g.origin}, dx={g.dx}, n={len(g)})"
        )


def l1_norm(f: SampledFunction) -> float:
    """Integral of |f|: dx times the exact sample sum."""
    return f.dx * math.fsum(np.abs(f.values).tolist())


def elementwise_common_product(f: SampledFunction, g: SampledFunction) -> SampledFunction:
    """Pointwise signed overlap sign(f)sign(g)min(|f|, |g|)."""
    _require_aligned(f, g)
    return f.with_values(common_values(f.values, g.values))


def elementwise_diamond(f: SampledFunction, g: SampledFunction) -> SampledFunction:
    """Pointwise envelope max(|f|, |g|)."""
    _require_aligned(f, g)
    return f.with_values(diamond_values(f.values, g.values))


def elementwise_index(kind: IndexKind, f: SampledFunction, g: SampledFunction) -> SampledFunction:
    """Pointwise similarity curve; samples where both inputs are zero
    map to 0 so whole-signal sweeps stay total."""
    _require_aligned(f, g)
    return f.with_values(index_arrays(kind, f.values, g.values))


def functional_index(kind: IndexKind, f: SampledFunction, g: SampledFunction) -> float:
    """Aggregate similarity functional over the shared grid.

    For S1 this is exactly the integral of the common product over the
    integral of the diamond; dx cancels in the S1-S3 ratios. S4 is
    dx*sum(f*g) normalized by the product of the two L1 norms.
    """
    _require_aligned(f, g)
    return aggregate_index(kind, f.values, g.values, scale=f.dx)


def functional_interiority(
    f: SampledFunction, g: SampledFunction, mode: SupportMode = SupportMode.RESTRICTED
) -> float:
    """Nesting degree of the lighter function inside the heavier one."""
    _require_aligned(f, g)
    return interiority_value(f.values, g.values, mode, scale=f.dx)


def functional_coincidence(
    f: SampledFunction, g: SampledFunction, mode: SupportMode = SupportMode.RESTRICTED
) -> float:
    """Interiority times the S1 functional, as that exact product."""
    _require_aligned(f, g)
    return coincidence_value(f.values, g.values, mode, scale=f.dx)
