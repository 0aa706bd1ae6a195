"""Real-multiplicity multisets and their aggregate similarity indices.

A multiset here is a finite map from labels to real multiplicities,
negative values included. Binary operations align the two operands over
the union of their supports, reading absent labels as multiplicity
zero, so every formula is total in the labels.
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from typing import Iterable, Tuple, Union

import numpy as np

from ._core import aggregate_index, coincidence_value, interiority_value
from .kinds import IndexKind, SupportMode

__all__ = [
    "RealMultiset",
    "mset_union",
    "mset_intersection",
    "mset_cardinality",
    "mset_index",
    "mset_interiority",
    "mset_coincidence",
]

Label = Union[str, int]
Entries = Union[Mapping[Label, float], Iterable[Tuple[Label, float]], None]


class RealMultiset:
    """Finite map from labels to real (possibly negative) multiplicities.

    Entries with multiplicity zero are dropped at construction, so the
    stored labels are exactly the support. Instances are immutable.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Entries = None):
        raw = dict(entries) if entries is not None else {}
        cleaned = {}
        for label, mult in raw.items():
            value = float(mult)
            if value != 0.0:
                cleaned[label] = value
        self._entries = cleaned

    @property
    def support(self) -> frozenset:
        """Labels with nonzero multiplicity."""
        return frozenset(self._entries)

    def multiplicity(self, label: Label) -> float:
        """Multiplicity of ``label``, 0 when absent."""
        return self._entries.get(label, 0.0)

    def to_dict(self) -> dict:
        return dict(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, label: Label) -> bool:
        return label in self._entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, RealMultiset):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        body = ", ".join(f"{label!r}: {value!r}" for label, value in sorted(self._entries.items(), key=_label_key))
        return f"RealMultiset({{{body}}})"


def _label_key(item):
    label = item[0] if isinstance(item, tuple) else item
    return (type(label).__name__, label)


def _aligned(a: RealMultiset, b: RealMultiset) -> tuple[np.ndarray, np.ndarray]:
    labels = sorted(a.support | b.support, key=_label_key)
    x = np.array([a.multiplicity(label) for label in labels], dtype=float)
    y = np.array([b.multiplicity(label) for label in labels], dtype=float)
    return x, y


def mset_union(a: RealMultiset, b: RealMultiset) -> RealMultiset:
    """Labelwise maximum of the two multiplicities."""
    labels = a.support | b.support
    return RealMultiset({label: max(a.multiplicity(label), b.multiplicity(label)) for label in labels})


def mset_intersection(a: RealMultiset, b: RealMultiset) -> RealMultiset:
    """Labelwise minimum of the two multiplicities."""
    labels = a.support | b.support
    return RealMultiset({label: min(a.multiplicity(label), b.multiplicity(label)) for label in labels})


def mset_cardinality(a: RealMultiset) -> float:
    """Total mass: the sum of the absolute multiplicities."""
    return math.fsum(abs(value) for value in a.to_dict().values())


def mset_index(kind: IndexKind, a: RealMultiset, b: RealMultiset) -> float:
    """Aggregate similarity index between two multisets.

    Raises :class:`EmptyComparisonError` when the denominator has no
    mass (for S1-S3, both supports empty; for S4, either one empty).
    """
    x, y = _aligned(a, b)
    return aggregate_index(kind, x, y)


def mset_interiority(
    a: RealMultiset, b: RealMultiset, mode: SupportMode = SupportMode.RESTRICTED
) -> float:
    """How nested the lighter multiset is inside the heavier one."""
    x, y = _aligned(a, b)
    return interiority_value(x, y, mode)


def mset_coincidence(
    a: RealMultiset, b: RealMultiset, mode: SupportMode = SupportMode.RESTRICTED
) -> float:
    """Interiority times the S1 index, computed as that exact product."""
    x, y = _aligned(a, b)
    return coincidence_value(x, y, mode)
