"""Similarity indices for dense real vectors.

A vector of length N is the multiset whose labels are the component
positions 1..N, so every operation here delegates to the multiset tier;
the two views agree exactly by construction.
"""

from __future__ import annotations

from typing import Sequence

from .errors import LengthMismatchError
from .kinds import IndexKind, SupportMode
from .multiset import RealMultiset, mset_coincidence, mset_index, mset_interiority

__all__ = ["vector_index", "vector_interiority", "vector_coincidence"]


def _as_mset(components: Sequence[float]) -> RealMultiset:
    return RealMultiset({i + 1: float(v) for i, v in enumerate(components)})


def _check_lengths(x: Sequence[float], y: Sequence[float]) -> None:
    if len(x) != len(y):
        raise LengthMismatchError(f"vector lengths differ: {len(x)} vs {len(y)}")


def vector_index(kind: IndexKind, x: Sequence[float], y: Sequence[float]) -> float:
    """Aggregate similarity index between two equal-length vectors."""
    _check_lengths(x, y)
    return mset_index(kind, _as_mset(x), _as_mset(y))


def vector_interiority(
    x: Sequence[float], y: Sequence[float], mode: SupportMode = SupportMode.RESTRICTED
) -> float:
    """Nesting degree between two equal-length vectors."""
    _check_lengths(x, y)
    return mset_interiority(_as_mset(x), _as_mset(y), mode)


def vector_coincidence(
    x: Sequence[float], y: Sequence[float], mode: SupportMode = SupportMode.RESTRICTED
) -> float:
    """Interiority times the S1 index for vectors."""
    _check_lengths(x, y)
    return mset_coincidence(_as_mset(x), _as_mset(y), mode)
