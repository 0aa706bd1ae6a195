import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.integrate import quad

from simdex import (
    EmptyComparisonError,
    GridMismatchError,
    IndexKind,
    RealMultiset,
    SampledFunction,
    SupportMode,
    elementwise_common_product,
    elementwise_diamond,
    elementwise_index,
    functional_coincidence,
    functional_index,
    functional_interiority,
    l1_norm,
    mset_index,
)


def const(value, n=100, dx=0.01, origin=0.0):
    return SampledFunction(origin, dx, np.full(n, float(value)))


def sincos(resolution=4096):
    dx = 2 * math.pi / resolution
    x = dx * np.arange(resolution)
    return SampledFunction(0.0, dx, np.sin(x)), SampledFunction(0.0, dx, np.cos(x))


sample_lists = st.lists(st.floats(min_value=-10, max_value=10, allow_nan=False), min_size=1, max_size=32)


def function_pairs():
    return sample_lists.flatmap(
        lambda xs: st.tuples(
            st.just(xs),
            st.lists(
                st.floats(min_value=-10, max_value=10, allow_nan=False),
                min_size=len(xs),
                max_size=len(xs),
            ),
        )
    )


def test_construction_validates():
    with pytest.raises(ValueError):
        SampledFunction(0.0, 0.0, [1.0])
    with pytest.raises(ValueError):
        SampledFunction(0.0, -0.5, [1.0])
    with pytest.raises(ValueError):
        SampledFunction(0.0, 1.0, [])
    with pytest.raises(ValueError):
        SampledFunction(0.0, 1.0, [[1.0, 2.0]])


def test_values_are_frozen():
    f = const(1.0)
    with pytest.raises(ValueError):
        f.values[0] = 2.0


def test_grid():
    f = SampledFunction(1.0, 0.5, [0.0, 0.0, 0.0])
    assert list(f.grid) == [1.0, 1.5, 2.0]
    assert len(f) == 3


def test_l1_norm_examples():
    assert l1_norm(const(1.0)) == pytest.approx(1.0, rel=1e-12)
    assert l1_norm(const(0.0)) == 0.0
    assert l1_norm(const(-2.0)) == pytest.approx(2.0, rel=1e-12)


def test_elementwise_common_product_examples():
    two = const(2.0)
    assert elementwise_common_product(two, two) == two
    out = elementwise_common_product(const(1.0), const(-1.0))
    assert np.all(out.values == -1.0)
    out = elementwise_common_product(const(3.0), const(1.0))
    assert np.all(out.values == 1.0)


def test_elementwise_diamond_examples():
    assert np.all(elementwise_diamond(const(3.0), const(1.0)).values == 3.0)
    assert elementwise_diamond(const(2.0), const(2.0)) == const(2.0)
    assert np.all(elementwise_diamond(const(-3.0), const(1.0)).values == 3.0)


def test_elementwise_index_on_sine_and_cosine():
    f, g = sincos(8)
    s1p = elementwise_index(IndexKind.S1, f, g)
    # pi/4 is sample 1 on this grid: equal values give +1
    assert s1p.values[1] == pytest.approx(1.0, abs=1e-12)
    # 3*pi/4 is sample 3: equal moduli, opposite signs
    assert s1p.values[3] == pytest.approx(-1.0, abs=1e-12)
    same = elementwise_index(IndexKind.S1, f, f)
    nonzero = f.values != 0.0
    assert np.all(same.values[nonzero] == 1.0)
    assert np.all(same.values[~nonzero] == 0.0)


def test_functional_index_constants():
    assert functional_index(IndexKind.S1, const(1.0), const(1.0)) == 1.0
    assert functional_index(IndexKind.S1, const(1.0), const(-1.0)) == -1.0
    assert functional_index(IndexKind.S2, const(1.0), const(1.0)) == 1.0


def test_functional_index_sine_cosine_period():
    f, g = sincos()
    assert abs(functional_index(IndexKind.S1, f, g)) <= 1e-3
    assert abs(functional_index(IndexKind.S4, f, g)) <= 1e-3
    assert functional_index(IndexKind.S1, f, f) == pytest.approx(1.0, abs=1e-12)


def test_functional_index_against_adaptive_quadrature():
    # independent oracle: adaptive quadrature on the continuous integrands
    f, g = sincos()
    kinks = [k * math.pi / 4 for k in range(9)]

    def common(x):
        fx, gx = math.sin(x), math.cos(x)
        return np.sign(fx) * np.sign(gx) * min(abs(fx), abs(gx))

    def diamond(x):
        return max(abs(math.sin(x)), abs(math.cos(x)))

    num, _ = quad(common, 0, 2 * math.pi, points=kinks, limit=200)
    den, _ = quad(diamond, 0, 2 * math.pi, points=kinks, limit=200)
    assert den == pytest.approx(4 * math.sqrt(2), rel=1e-9)
    rect_den = f.dx * math.fsum(elementwise_diamond(f, g).values.tolist())
    assert rect_den == pytest.approx(den, abs=1e-4)
    assert functional_index(IndexKind.S1, f, g) == pytest.approx(num / den, abs=1e-3)


def test_grid_mismatch_rejected():
    f = const(1.0)
    for other in (const(1.0, origin=0.5), const(1.0, dx=0.02), const(1.0, n=50)):
        with pytest.raises(GridMismatchError):
            functional_index(IndexKind.S1, f, other)
        with pytest.raises(GridMismatchError):
            elementwise_common_product(f, other)
        with pytest.raises(GridMismatchError):
            functional_interiority(f, other)


def test_functional_interiority_examples():
    f = const(2.5)
    assert functional_interiority(f, f, SupportMode.RESTRICTED) == 1.0
    assert functional_interiority(const(1.0), const(5.0), SupportMode.RESTRICTED) == 1.0


def test_functional_interiority_half_support():
    # f is 2 on the first half of [0,1) and 0 afterwards; g is 1 throughout
    f = SampledFunction(0.0, 0.01, np.concatenate([np.full(50, 2.0), np.zeros(50)]))
    g = const(1.0)
    # restricted support is the first half: num 0.5, masses min(1.0, 0.5)
    assert functional_interiority(f, g, SupportMode.RESTRICTED) == pytest.approx(1.0, rel=1e-12)
    # full support brings g's whole unit mass into the denominator
    assert functional_interiority(f, g, SupportMode.FULL) == pytest.approx(0.5, rel=1e-12)


def test_functional_coincidence_examples():
    f = const(1.0)
    assert functional_coincidence(f, f, SupportMode.RESTRICTED) == 1.0
    assert functional_coincidence(const(1.0), const(5.0), SupportMode.RESTRICTED) == pytest.approx(0.2, rel=1e-12)
    with pytest.raises(EmptyComparisonError):
        functional_coincidence(const(1.0), const(-1.0), SupportMode.RESTRICTED)


@given(pair=function_pairs())
def test_decomposition_identity_exact(pair):
    xs, ys = pair
    f = SampledFunction(0.0, 0.25, xs)
    g = SampledFunction(0.0, 0.25, ys)
    num = f.dx * math.fsum(elementwise_common_product(f, g).values.tolist())
    den = f.dx * math.fsum(elementwise_diamond(f, g).values.tolist())
    if den == 0.0:
        with pytest.raises(EmptyComparisonError):
            functional_index(IndexKind.S1, f, g)
        return
    assert functional_index(IndexKind.S1, f, g) == num / den


@given(pair=function_pairs(), kind=st.sampled_from(list(IndexKind)))
def test_mset_equivalence_at_unit_spacing(pair, kind):
    # one sample per label at dx=1 must reproduce the multiset index
    xs, ys = pair
    f = SampledFunction(0.0, 1.0, xs)
    g = SampledFunction(0.0, 1.0, ys)
    a = RealMultiset({i: v for i, v in enumerate(xs)})
    b = RealMultiset({i: v for i, v in enumerate(ys)})
    try:
        direct = functional_index(kind, f, g)
    except EmptyComparisonError:
        with pytest.raises(EmptyComparisonError):
            mset_index(kind, a, b)
        return
    assert direct == mset_index(kind, a, b)


@given(pair=function_pairs(), kind=st.sampled_from([IndexKind.S1, IndexKind.S2, IndexKind.S3]))
def test_dx_invariance_for_bounded_kinds(pair, kind):
    xs, ys = pair
    f = SampledFunction(0.0, 0.5, xs)
    g = SampledFunction(0.0, 0.5, ys)
    fh = SampledFunction(0.0, 0.25, np.repeat(f.values, 2))
    gh = SampledFunction(0.0, 0.25, np.repeat(g.values, 2))
    try:
        coarse = functional_index(kind, f, g)
    except EmptyComparisonError:
        return
    assert functional_index(kind, fh, gh) == pytest.approx(coarse, abs=1e-12)


@given(pair=function_pairs(), kind=st.sampled_from([IndexKind.S1, IndexKind.S2, IndexKind.S3]))
def test_functional_bounds(pair, kind):
    xs, ys = pair
    f = SampledFunction(0.0, 0.1, xs)
    g = SampledFunction(0.0, 0.1, ys)
    try:
        value = functional_index(kind, f, g)
    except EmptyComparisonError:
        return
    assert -1.0 <= value <= 1.0


@given(pair=function_pairs())
def test_coincidence_factorization_and_bounds(pair):
    xs, ys = pair
    f = SampledFunction(0.0, 0.1, xs)
    g = SampledFunction(0.0, 0.1, ys)
    for mode in SupportMode:
        try:
            c = functional_coincidence(f, g, mode)
        except EmptyComparisonError:
            continue
        assert c == functional_interiority(f, g, mode) * functional_index(IndexKind.S1, f, g)
        assert -1.0 <= c <= 1.0
        assert 0.0 <= functional_interiority(f, g, mode) <= 1.0


def test_pointwise_s3_matches_s1_but_aggregates_differ():
    f = SampledFunction(0.0, 1.0, [1.0, 0.5])
    g = SampledFunction(0.0, 1.0, [1.0, 2.0])
    curve1 = elementwise_index(IndexKind.S1, f, g)
    curve3 = elementwise_index(IndexKind.S3, f, g)
    assert np.max(np.abs(curve3.values - curve1.values)) <= 1e-12
    assert functional_index(IndexKind.S1, f, g) == pytest.approx(0.5, abs=1e-12)
    assert functional_index(IndexKind.S3, f, g) == pytest.approx(0.4, abs=1e-12)