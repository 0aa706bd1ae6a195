"""CSV and PGM encodings shared by the CLI and the test fixtures.

Numbers are written as the shortest decimal string that round-trips to
the same double, with a trailing ``.0`` stripped, so emitted files are
diff-friendly and reproduce bit-identically. Loaders skip blank lines
and ``#`` comments and reject structural problems with
:class:`FormatError`.
"""

from __future__ import annotations

import csv
import math
from typing import List, Sequence

import numpy as np

from .errors import FormatError
from .functions import SampledFunction
from .multiset import RealMultiset
from .sliding import SlideResult

__all__ = [
    "fmt_float",
    "read_mset_csv",
    "read_vector_csv",
    "read_function_csv",
    "slide_csv_text",
    "pgm_text",
]

# relative tolerance for deciding a function file's grid is uniform
GRID_TOLERANCE = 1e-9


def fmt_float(value: float) -> str:
    """Shortest round-trip decimal form, integer-valued floats bare."""
    text = repr(float(value))
    return text[:-2] if text.endswith(".0") else text


def _parse_real(text: str, where: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise FormatError(f"{where}: not a decimal real: {text!r}") from None
    if not math.isfinite(value):
        raise FormatError(f"{where}: value must be finite, got {text!r}")
    return value


def _read_rows(path: str, header: Sequence[str]) -> List[List[str]]:
    with open(path, newline="", encoding="utf-8") as handle:
        raw = [
            (number, row)
            for number, row in enumerate(csv.reader(handle), start=1)
            if row and not row[0].lstrip().startswith("#")
        ]
    if not raw:
        raise FormatError(f"{path}: empty file, expected header {','.join(header)!r}")
    first_number, first = raw[0]
    if [cell.strip() for cell in first] != list(header):
        raise FormatError(f"{path}:{first_number}: expected header {','.join(header)!r}")
    rows = []
    for number, row in raw[1:]:
        if len(row) != len(header):
            raise FormatError(f"{path}:{number}: expected {len(header)} fields, got {len(row)}")
        rows.append([cell.strip() for cell in row])
    return rows


def read_mset_csv(path: str) -> RealMultiset:
    """Load a ``label,multiplicity`` file; duplicate labels are an error."""
    entries = {}
    for number, (label, text) in enumerate(_read_rows(path, ("label", "multiplicity")), start=2):
        if label in entries:
            raise FormatError(f"{path}: duplicate label {label!r}")
        entries[label] = _parse_real(text, f"{path}:{number}")
    return RealMultiset(entries)


def read_vector_csv(path: str) -> List[float]:
    """Load a single-column ``value`` file into a component list."""
    rows = _read_rows(path, ("value",))
    if not rows:
        raise FormatError(f"{path}: a vector needs at least one component")
    return [_parse_real(row[0], f"{path}:{number}") for number, row in enumerate(rows, start=2)]


def read_function_csv(path: str) -> SampledFunction:
    """Load an ``x,value`` file sampled on a uniform, increasing grid.

    The spacing is inferred from the endpoints; rows may deviate from
    it by at most 1e-9 relatively. A single-row file gets spacing 1.
    """
    rows = _read_rows(path, ("x", "value"))
    if not rows:
        raise FormatError(f"{path}: a function needs at least one sample")
    xs, values = [], []
    for number, (x_text, v_text) in enumerate(rows, start=2):
        xs.append(_parse_real(x_text, f"{path}:{number}"))
        values.append(_parse_real(v_text, f"{path}:{number}"))
    if len(xs) == 1:
        return SampledFunction(xs[0], 1.0, values)
    dx = (xs[-1] - xs[0]) / (len(xs) - 1)
    if dx <= 0:
        raise FormatError(f"{path}: x must be strictly increasing")
    for i in range(1, len(xs)):
        step = xs[i] - xs[i - 1]
        if step <= 0 or abs(step / dx - 1.0) > GRID_TOLERANCE:
            raise FormatError(
                f"{path}: non-uniform grid at row {i + 2}: step {step!r} vs spacing {dx!r}"
            )
    return SampledFunction(xs[0], dx, values)


def slide_csv_text(result: SlideResult) -> str:
    """Encode a sweep as ``lag,value,degenerate`` rows (flag 0/1)."""
    lines = ["lag,value,degenerate"]
    for lag, value, flag in result:
        lines.append(f"{lag},{fmt_float(value)},{int(flag)}")
    return "\n".join(lines) + "\n"


def pgm_text(pixels: np.ndarray) -> str:
    """Encode a grayscale image as plain PGM (P2, maxval 255).

    Rows are wrapped at 17 samples to respect the format's 70-column
    line limit.
    """
    grid = np.asarray(pixels)
    if grid.ndim != 2:
        raise ValueError("pixels must be a 2-D array")
    if grid.size and (grid.min() < 0 or grid.max() > 255):
        raise ValueError("pixel values must lie in [0, 255]")
    height, width = grid.shape
    lines = ["P2", f"{width} {height}", "255"]
    for row in grid:
        cells = [str(int(v)) for v in row]
        for start in range(0, width, 17):
            lines.append(" ".join(cells[start : start + 17]))
    return "\n".join(lines) + "\n"
