import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

import oracles
from relmap.approx import chm_map
from relmap.errors import DimensionMismatchError, EmptyTargetError
from relmap.grid import make_disk
from relmap.kernels import dot_kernel
from relmap.morphology import dilate
from relmap.relation import (
    CHM,
    Convolution,
    ExactDilation,
    GeneralizedMean,
    Relation,
    compute_map,
    disk_footprint,
    heatmap_from_map,
    intersected_map,
    make_method,
    midcut,
    pixel_footprint,
    relational_map,
    score,
    score_heatmap,
)

unit = st.floats(0.0, 1.0, allow_nan=False)


def test_method_construction():
    assert make_method("chm", p=30) == CHM(30.0)
    assert make_method("conv", mode="none") == Convolution("none")
    with pytest.raises(ValueError):
        make_method("erosion")
    with pytest.raises(ValueError):
        GeneralizedMean(p=-1)
    with pytest.raises(ValueError):
        ExactDilation("lukasiewicz")


def test_relation_requires_shared_domain():
    with pytest.raises(DimensionMismatchError):
        Relation(np.zeros((3, 3)), np.zeros((3, 4)), dot_kernel())


def test_right_of_dilation_is_a_rightward_fan(right_scene):
    phi = compute_map(right_scene.source, right_scene.kernel, ExactDilation())
    assert phi[50, 90] == 1.0
    assert phi[50, 10] == 0.0
    # the fan widens with distance: further right, more rows are reached
    assert (phi[:, 90] > 0.5).sum() > (phi[:, 40] > 0.5).sum()


def test_conv_with_dot_kernel_returns_source(rng):
    src = rng.random((8, 8))
    rel = Relation(src, src, dot_kernel(1, 1))
    np.testing.assert_array_equal(relational_map(rel, Convolution()), src)


def test_chm_beats_conv_on_right_of(right_scene):
    src, B = right_scene.source, right_scene.kernel
    exact = dilate(src, B)
    err = lambda a: np.mean((a - exact) ** 2)
    assert err(compute_map(src, B, CHM(100))) < err(compute_map(src, B, Convolution()))


def test_dispatch_to_chm(rng):
    m = rng.random((5, 5))
    w = rng.random((3, 3))
    np.testing.assert_array_equal(compute_map(m, w, CHM(12.0)), chm_map(m, w, 12.0))


def test_intersected_map(rng):
    phi = rng.random((4, 4))
    np.testing.assert_array_equal(intersected_map(phi, np.ones((4, 4))), phi)
    a = np.zeros((4, 4))
    a[:2] = 1
    assert not intersected_map(phi * a, 1 - a).any()
    l = rng.random((4, 4))
    expected = np.array([[phi[r, c] * l[r, c] for c in range(4)] for r in range(4)])
    np.testing.assert_array_equal(intersected_map(phi, l), expected)


def test_score_examples(rng):
    phi = np.zeros((10, 10))
    phi[:, 5:] = 1.0
    inside = make_disk(10, 10, (8, 5), 1)
    outside = make_disk(10, 10, (1, 5), 1)
    assert score(phi, inside) == 1.0
    assert score(phi, outside) == 0.0
    assert score(np.full((10, 10), 0.4), rng.random((10, 10))) == pytest.approx(0.4)
    with pytest.raises(EmptyTargetError):
        score(phi, np.zeros((10, 10)))


@settings(max_examples=50)
@given(arrays(np.float64, (5, 5), elements=unit), arrays(np.float64, (5, 5), elements=unit),
       arrays(np.float64, (5, 5), elements=st.floats(0.01, 1.0)), unit, st.floats(0.01, 1.0))
def test_score_linear_and_scale_invariant(phi1, phi2, target, a, c):
    b = 1.0 - a
    lhs = score(a * phi1 + b * phi2, target)
    assert lhs == pytest.approx(a * score(phi1, target) + b * score(phi2, target), abs=1e-12)
    assert score(phi1, c * target) == pytest.approx(score(phi1, target), abs=1e-12)


def test_disk_footprint():
    fp = disk_footprint(5)
    assert fp.shape == (11, 11) and fp.sum() == 81
    np.testing.assert_array_equal(disk_footprint(0), [[1.0]])


def test_heatmap_single_pixel_equals_map(rng):
    phi = rng.random((9, 7))
    np.testing.assert_array_equal(heatmap_from_map(phi, pixel_footprint()), phi)


def test_heatmap_constant_map(rng):
    h = heatmap_from_map(np.full((12, 12), 0.3), disk_footprint(3))
    np.testing.assert_allclose(h, 0.3, rtol=1e-14)


def test_heatmap_matches_naive_oracle(rng):
    phi = rng.random((12, 10))
    fp = disk_footprint(2.5) * rng.random((5, 5))
    fp[2, 2] = 1.0
    np.testing.assert_allclose(heatmap_from_map(phi, fp), oracles.heatmap(phi, fp), rtol=0, atol=1e-12)


def test_heatmap_right_of_disk_target(right_scene):
    phi = dilate(right_scene.source, right_scene.kernel)
    fp = disk_footprint(5)
    fast = score_heatmap(right_scene.source, right_scene.kernel, ExactDilation(), fp)
    np.testing.assert_allclose(fast, oracles.heatmap(phi, fp), rtol=0, atol=1e-12)
    assert ((fast >= 0) & (fast <= 1)).all()


def test_heatmap_hollow_footprint_marks_missing():
    fp = np.zeros((7, 7))
    fp[0, 0] = 1.0  # only the offset (-3, -3) is set
    h = heatmap_from_map(np.full((5, 5), 0.5), fp)
    assert np.isnan(h[0, 0]) and np.isnan(h[2, 1])
    assert h[4, 4] == 0.5


def test_midcut():
    g = np.arange(100 * 100, dtype=float).reshape(100, 100)
    col = midcut(g, "mid_x")
    assert col.shape == (100,) and (col == g[:, 49]).all()
    assert (midcut(g, "mid_y") == g[49, :]).all()
    assert (midcut(np.full((5, 4), 0.2), "mid_y") == 0.2).all()
    assert (midcut(np.arange(15.0).reshape(3, 5), "mid_x") == [2, 7, 12]).all()
    with pytest.raises(ValueError):
        midcut(g, "diag")


def test_midcut_symmetry_close_to(close_scene):
    phi = dilate(close_scene.source, close_scene.kernel)
    for axis in ("mid_x", "mid_y"):
        cut = midcut(phi, axis)
        # source centered on pixel 50: the cut is symmetric about index 50
        np.testing.assert_allclose(cut[1:], cut[1:][::-1], rtol=0, atol=1e-12)
