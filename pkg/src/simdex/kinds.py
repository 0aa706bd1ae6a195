"""Enumerations selecting index variants and evaluation modes."""

from enum import Enum


class IndexKind(str, Enum):
    """The four similarity indices.

    S1 is the min/max (Jaccard-style) index, S2 the 2*min/sum (Dice-style)
    index, S3 the product over squared max, and S4 the bare product, which
    is unbounded.
    """

    S1 = "s1"
    S2 = "s2"
    S3 = "s3"
    S4 = "s4"


class SupportMode(str, Enum):
    """Support used by the interiority index.

    RESTRICTED sums only over positions where both values share a strict
    sign; FULL takes the whole support into account.
    """

    RESTRICTED = "restricted"
    FULL = "full"


class SlideDirection(str, Enum):
    """Convolution evaluates the kernel reversed; correlation does not."""

    CONVOLUTION = "conv"
    CORRELATION = "corr"


class BoundaryMode(str, Enum):
    """Valid emits only complete-overlap lags; full zero-pads the edges."""

    VALID = "valid"
    FULL = "full"
