"""Experiment geometries: a source object and a relation kernel per relation.

All four relations scale with the image side ``N`` (the 100x100 case gives the
reference setup):

======== ================================ =====================================
relation source                           kernel
======== ================================ =====================================
right    disk r=N/20 at (N/5, N/2)        directional, pointing right
close    disk r=N/20 at the center        crown (ring without the origin)
far      disk r=N/20 at the center        ramp from 0.2 N to 0.4 N
inside   square of side N/2 at the center dot
======== ================================ =====================================
"""
from dataclasses import dataclass

import numpy as np

from .grid import make_disk, make_square
from .kernels import default_support, directional_kernel, dot_kernel, far_kernel, ring_kernel

__all__ = ["RELATIONS", "Scene", "build_scene", "CROWN_RADII", "FAR_RADII"]

RELATIONS = ("right", "close", "far", "inside")

# fractions of min(W, H)
CROWN_RADII = (0.03, 0.08, 0.12, 0.20)
FAR_RADII = (0.2, 0.4)


@dataclass(frozen=True)
class Scene:
    relation: str
    source: np.ndarray
    kernel: np.ndarray
    source_center: tuple
    source_radius: float


def build_scene(relation, width=100, height=None, origin_value=1.0,
                crown=CROWN_RADII, far=FAR_RADII, support=None):
    """Source grid and kernel for one of :data:`RELATIONS`.

    ``support`` overrides the kernel size ``(size_x, size_y)``; by default the
    kernel covers every offset inside the image.
    """
    height = width if height is None else height
    n = min(width, height)
    radius = n / 20
    sx, sy = default_support(width, height) if support is None else support
    center = (width // 2, height // 2)
    if relation == "right":
        center = (width // 5, height // 2)
        source = make_disk(width, height, center, radius)
        kernel = directional_kernel(sx, sy, 0.0, origin_value)
    elif relation == "close":
        source = make_disk(width, height, center, radius)
        kernel = ring_kernel(sx, sy, *(f * n for f in crown))
    elif relation == "far":
        source = make_disk(width, height, center, radius)
        kernel = far_kernel(sx, sy, *(f * n for f in far))
    elif relation == "inside":
        radius = n / 2
        source = make_square(width, height, center, max(1, n // 2))
        kernel = dot_kernel(1, 1)
    else:
        raise ValueError(f"unknown relation {relation!r}; expected one of {RELATIONS}")
    return Scene(relation, source, kernel, center, radius)
