"""Sign-aware similarity indices for scalars, multisets, vectors, and
sampled signals, with sliding comparison operators built on top."""

from .errors import (
    BothZeroError,
    EmptyComparisonError,
    FormatError,
    GridMismatchError,
    KernelTooLongError,
    LengthMismatchError,
    SimdexError,
)
from .functions import (
    SampledFunction,
    elementwise_common_product,
    elementwise_diamond,
    elementwise_index,
    functional_coincidence,
    functional_index,
    functional_interiority,
    l1_norm,
)
from .kinds import BoundaryMode, IndexKind, SlideDirection, SupportMode
from .multiset import (
    RealMultiset,
    mset_cardinality,
    mset_coincidence,
    mset_index,
    mset_interiority,
    mset_intersection,
    mset_union,
)
from .sliding import SlideResult, coincidence_correlate, slide, template_match
from .scalar import (
    conjoint_sign,
    diagonal_distance,
    magnitude_index,
    normalized_diagonal_distance,
    scalar_index,
    sign,
)
from .vectors import vector_coincidence, vector_index, vector_interiority

__version__ = "0.1.0"

__all__ = [
    "BothZeroError",
    "BoundaryMode",
    "EmptyComparisonError",
    "FormatError",
    "GridMismatchError",
    "IndexKind",
    "KernelTooLongError",
    "LengthMismatchError",
    "RealMultiset",
    "SampledFunction",
    "SimdexError",
    "SlideDirection",
    "SlideResult",
    "SupportMode",
    "coincidence_correlate",
    "slide",
    "template_match",
    "conjoint_sign",
    "elementwise_common_product",
    "elementwise_diamond",
    "elementwise_index",
    "functional_coincidence",
    "functional_index",
    "functional_interiority",
    "l1_norm",
    "mset_cardinality",
    "mset_coincidence",
    "mset_index",
    "mset_interiority",
    "mset_intersection",
    "mset_union",
    "diagonal_distance",
    "magnitude_index",
    "normalized_diagonal_distance",
    "scalar_index",
    "sign",
    "vector_coincidence",
    "vector_index",
    "vector_interiority",
    "__version__",
]
