"""Sign-aware similarity indices between two real scalars.

Four indices are provided, all symmetric in their arguments:

* ``S1``: ratio of the smaller to the larger modulus, signed.
* ``S2``: ratio of twice the smaller modulus to the modulus sum, signed.
* ``S3``: product of the values over the squared larger modulus.
* ``S4``: the bare product, unbounded.

S1 through S3 live in [-1, +1] and hit +1 exactly when the inputs are
equal and nonzero; they are undefined at (0, 0). S4 is defined
everywhere and S4(0, 0) = 0.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import BothZeroError
from .kinds import IndexKind

__all__ = [
    "sign",
    "conjoint_sign",
    "diagonal_distance",
    "normalized_diagonal_distance",
    "scalar_index",
    "magnitude_index",
    "index_arrays",
]

_SQRT2 = math.sqrt(2.0)


def sign(value: float) -> int:
    """Return -1, 0, or +1 according to the sign of ``value``."""
    if value > 0.0:
        return 1
    if value < 0.0:
        return -1
    return 0


def conjoint_sign(x: float, y: float) -> int:
    """Product of the signs of ``x`` and ``y``: +1 for agreement, -1 for
    opposition, 0 when either value is zero."""
    return sign(x) * sign(y)


def diagonal_distance(x: float, y: float) -> float:
    """Euclidean distance from the point (x, y) to the identity line y = x."""
    return abs(x - y) / _SQRT2


def normalized_diagonal_distance(x: float, y: float) -> float:
    """Distance |x - y| scaled by the larger modulus.

    Zero exactly when x = y, one when exactly one input is zero, and up
    to two for opposite-sign pairs. Undefined at (0, 0).
    """
    big = max(abs(x), abs(y))
    if big == 0.0:
        raise BothZeroError("normalized distance is undefined at (0, 0)")
    return abs(x - y) / big


def scalar_index(kind: IndexKind, x: float, y: float) -> float:
    """Similarity index of the chosen ``kind`` between two reals.

    Raises :class:`BothZeroError` for S1-S3 when both inputs are zero.
    """
    if kind is IndexKind.S4:
        return x * y
    ax = abs(x)
    ay = abs(y)
    big = max(ax, ay)
    if big == 0.0:
        raise BothZeroError(f"{kind.value} is undefined at (0, 0)")
    if kind is IndexKind.S1:
        return conjoint_sign(x, y) * (min(ax, ay) / big)
    if kind is IndexKind.S2:
        return conjoint_sign(x, y) * ((2.0 * min(ax, ay)) / (ax + ay))
    # S3: divide before multiplying so huge inputs cannot overflow
    return (x / big) * (y / big)


def magnitude_index(kind: IndexKind, x: float, y: float) -> float:
    """Similarity of the moduli, ignoring signs. Always nonnegative."""
    return scalar_index(kind, abs(x), abs(y))


def index_arrays(kind: IndexKind, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Elementwise :func:`scalar_index` over two equal-shape arrays.

    Matches the scalar function bit for bit, except that (0, 0) pairs
    yield 0 instead of raising, which suits bulk sweeps where the caller
    screens or tolerates degenerate cells.
    """
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if kind is IndexKind.S4:
        return x * y
    ax = np.abs(x)
    ay = np.abs(y)
    big = np.maximum(ax, ay)
    ok = big > 0.0
    safe = np.where(ok, big, 1.0)
    if kind is IndexKind.S1:
        out = np.sign(x) * np.sign(y) * (np.minimum(ax, ay) / safe)
    elif kind is IndexKind.S2:
        total = np.where(ok, ax + ay, 1.0)
        out = np.sign(x) * np.sign(y) * ((2.0 * np.minimum(ax, ay)) / total)
    else:
        out = (x / safe) * (y / safe)
    return np.where(ok, out, 0.0)
