import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from simdex import (
    BothZeroError,
    IndexKind,
    conjoint_sign,
    diagonal_distance,
    magnitude_index,
    normalized_diagonal_distance,
    scalar_index,
    sign,
)
from simdex.scalar import index_arrays

ALL_KINDS = list(IndexKind)
BOUNDED_KINDS = [IndexKind.S1, IndexKind.S2, IndexKind.S3]

finite = st.floats(min_value=-1e300, max_value=1e300, allow_nan=False)
nonzero = finite.filter(lambda v: v != 0.0)


@pytest.mark.parametrize(
    "value,expected",
    [(3.5, 1), (-0.2, -1), (0.0, 0), (0, 0), (-0.0, 0), (1e-300, 1)],
)
def test_sign(value, expected):
    assert sign(value) == expected


@pytest.mark.parametrize(
    "x,y,expected",
    [(2, 3, 1), (2, -3, -1), (0, 5, 0), (-1, -1, 1), (0, 0, 0)],
)
def test_conjoint_sign(x, y, expected):
    assert conjoint_sign(x, y) == expected


def test_diagonal_distance():
    assert diagonal_distance(1, 1) == 0.0
    assert diagonal_distance(1, 3) == pytest.approx(2 / math.sqrt(2), abs=1e-12)
    assert diagonal_distance(-1, 1) == pytest.approx(2 / math.sqrt(2), abs=1e-12)


def test_normalized_diagonal_distance():
    assert normalized_diagonal_distance(2, 2) == 0.0
    assert normalized_diagonal_distance(1, 2) == 0.5
    assert normalized_diagonal_distance(0, 5) == 1.0
    with pytest.raises(BothZeroError):
        normalized_diagonal_distance(0.0, 0.0)


@pytest.mark.parametrize(
    "kind,x,y,expected",
    [
        (IndexKind.S1, 1, 2, 0.5),
        (IndexKind.S2, 1, 2, 2 / 3),
        (IndexKind.S3, 1, -2, -0.5),
        (IndexKind.S4, 1, 2, 2.0),
        (IndexKind.S1, -3, -3, 1.0),
        (IndexKind.S2, 5, -5, -1.0),
    ],
)
def test_scalar_index_values(kind, x, y, expected):
    assert scalar_index(kind, x, y) == pytest.approx(expected, abs=1e-12)


@given(x=nonzero)
def test_kronecker_reference(x):
    assert scalar_index(IndexKind.S1, x, x) == 1.0
    assert scalar_index(IndexKind.S2, x, x) == 1.0
    assert scalar_index(IndexKind.S1, x, -x) == -1.0


@pytest.mark.parametrize("kind", BOUNDED_KINDS)
def test_both_zero_rejected(kind):
    with pytest.raises(BothZeroError):
        scalar_index(kind, 0.0, 0.0)
    with pytest.raises(BothZeroError):
        magnitude_index(kind, 0.0, 0.0)


def test_s4_allows_zero_pair():
    assert scalar_index(IndexKind.S4, 0.0, 0.0) == 0.0


@pytest.mark.parametrize("kind", BOUNDED_KINDS)
def test_single_zero_gives_zero(kind):
    # sign(0) = 0, so one zero input collapses the bounded indices to 0
    assert scalar_index(kind, 0.0, 7.0) == 0.0
    assert scalar_index(kind, -7.0, 0.0) == 0.0


@pytest.mark.parametrize(
    "kind,x,y,expected",
    [
        (IndexKind.S1, -1, 2, 0.5),
        (IndexKind.S2, -3, -3, 1.0),
        (IndexKind.S4, -1, 2, 2.0),
    ],
)
def test_magnitude_index_values(kind, x, y, expected):
    assert magnitude_index(kind, x, y) == pytest.approx(expected, abs=1e-12)


@given(kind=st.sampled_from(ALL_KINDS), x=finite, y=finite)
def test_symmetry(kind, x, y):
    if x == 0.0 and y == 0.0 and kind is not IndexKind.S4:
        return
    assert scalar_index(kind, x, y) == scalar_index(kind, y, x)


@given(kind=st.sampled_from(BOUNDED_KINDS), x=finite, y=finite)
def test_bounds(kind, x, y):
    if x == 0.0 and y == 0.0:
        return
    assert -1.0 <= scalar_index(kind, x, y) <= 1.0
    assert 0.0 <= magnitude_index(kind, x, y) <= 1.0


@given(x=finite, y=finite)
def test_unit_value_only_on_diagonal(x, y):
    # s1 = +1 exactly iff x = y != 0, and -1 exactly iff x = -y != 0
    if x == 0.0 and y == 0.0:
        return
    v = scalar_index(IndexKind.S1, x, y)
    assert (v == 1.0) == (x == y)
    assert (v == -1.0) == (x == -y)


@given(x=st.floats(min_value=1e-300, max_value=1e300), y=st.floats(min_value=1e-300, max_value=1e300))
def test_ordering_on_positive_pairs(x, y):
    s1 = scalar_index(IndexKind.S1, x, y)
    s2 = scalar_index(IndexKind.S2, x, y)
    assert s1 <= s2 + 1e-12
    if x == y:
        assert s1 == s2 == 1.0


@given(x=finite, y=finite)
def test_s3_equals_s1_pointwise(x, y):
    # |x||y| = min * max forces the two formulas to coincide
    if x == 0.0 and y == 0.0:
        return
    s1 = scalar_index(IndexKind.S1, x, y)
    s3 = scalar_index(IndexKind.S3, x, y)
    assert abs(s3 - s1) <= 1e-12


@given(x=finite, y=finite)
def test_dice_jaccard_relation(x, y):
    if x == 0.0 and y == 0.0:
        return
    j = scalar_index(IndexKind.S1, x, y)
    s2 = scalar_index(IndexKind.S2, x, y)
    assert abs(s2 - 2 * j / (1 + abs(j))) <= 1e-12


# magnitudes kept in the normal range so c*x cannot underflow to zero
signed_moderate = st.one_of(
    st.just(0.0),
    st.floats(min_value=1e-75, max_value=1e75),
    st.floats(min_value=-1e75, max_value=-1e-75),
)


@given(
    kind=st.sampled_from(BOUNDED_KINDS),
    x=signed_moderate,
    y=signed_moderate,
    c=st.one_of(
        st.floats(min_value=1e-75, max_value=1e75),
        st.floats(min_value=-1e75, max_value=-1e-75),
    ),
)
def test_scale_invariance(kind, x, y, c):
    if x == 0.0 and y == 0.0:
        return
    base = scalar_index(kind, x, y)
    scaled = scalar_index(kind, c * x, c * y)
    assert abs(scaled - base) <= 1e-12


@given(
    x=st.floats(min_value=1e-150, max_value=1e150),
    y=st.floats(min_value=1e-150, max_value=1e150),
    flip=st.booleans(),
)
def test_corrected_derivation_identities(x, y, flip):
    # For same-sign pairs: 1 - |x-y|/max = s1 magnitude and
    # 1 - |x-y|/(|x|+|y|) = s2 magnitude
    if flip:
        x, y = -x, -y
    ax, ay = abs(x), abs(y)
    lhs1 = 1.0 - abs(x - y) / max(ax, ay)
    lhs2 = 1.0 - abs(x - y) / (ax + ay)
    assert abs(lhs1 - magnitude_index(IndexKind.S1, x, y)) <= 1e-12
    assert abs(lhs2 - magnitude_index(IndexKind.S2, x, y)) <= 1e-12
    assert abs(1.0 - normalized_diagonal_distance(x, y) - magnitude_index(IndexKind.S1, x, y)) <= 1e-12


@given(kind=st.sampled_from(ALL_KINDS), x=finite, y=finite)
def test_magnitude_is_index_of_moduli(kind, x, y):
    if x == 0.0 and y == 0.0 and kind is not IndexKind.S4:
        return
    assert magnitude_index(kind, x, y) == scalar_index(kind, abs(x), abs(y))


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_index_arrays_matches_scalar(kind):
    rng = np.random.default_rng(7)
    xs = rng.uniform(-10, 10, 500)
    ys = rng.uniform(-10, 10, 500)
    out = index_arrays(kind, xs, ys)
    for x, y, v in zip(xs, ys, out):
        assert v == scalar_index(kind, float(x), float(y))


def test_index_arrays_zero_pair_convention():
    xs = np.array([0.0, 0.0, 1.0])
    ys = np.array([0.0, 2.0, 0.0])
    for kind in ALL_KINDS:
        out = index_arrays(kind, xs, ys)
        # the array path maps (0,0) to 0 instead of raising, for bulk sweeps
        assert list(out) == [0.0, 0.0, 0.0]
