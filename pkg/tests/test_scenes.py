import numpy as np
import pytest

from relmap.morphology import is_extensive
from relmap.scenes import RELATIONS, build_scene


def test_reference_geometry():
    right = build_scene("right", 100)
    assert right.source.sum() == 81 and right.source[50, 20] == 1
    assert right.kernel.shape == (199, 199) and is_extensive(right.kernel)
    close = build_scene("close", 100)
    assert close.source[50, 50] == 1 and close.source.sum() == 81
    assert not is_extensive(close.kernel)
    inside = build_scene("inside", 100)
    assert inside.source.sum() == 2500
    np.testing.assert_array_equal(inside.kernel, [[1.0]])
    far = build_scene("far", 100)
    assert far.kernel[99, 99 + 10] == 0.0 and far.kernel[99, 99 + 30] == pytest.approx(0.5)


def test_scaling_with_side():
    s = build_scene("right", 200)
    assert s.source_center == (40, 100) and s.source_radius == 10
    assert s.kernel.shape == (399, 399)


@pytest.mark.parametrize("relation", RELATIONS)
def test_rectangular_images(relation):
    s = build_scene(relation, 30, 20)
    assert s.source.shape == (20, 30)
    assert all(n % 2 == 1 for n in s.kernel.shape)


def test_origin_value_and_support_options():
    s = build_scene("right", 20, origin_value=0.0, support=(9, 5))
    assert s.kernel.shape == (5, 9) and s.kernel[2, 4] == 0.0
    with pytest.raises(ValueError):
        build_scene("below", 20)
