"""Dense 2D membership grids.

A membership grid is a float64 numpy array of shape ``(height, width)`` with
values in [0, 1]. Pixels are addressed as ``(col, row)`` with the origin at the
top-left corner, so ``grid[row, col]`` is the pixel at ``(col, row)``.
"""
import numpy as np

from .errors import DimensionMismatchError, InvalidDimensionError

__all__ = [
    "as_grid",
    "zeros",
    "ones",
    "make_disk",
    "make_square",
    "elementwise_mul",
    "grid_sum",
    "elementwise_pow",
]


def as_grid(values, check_range=True):
    """Convert ``values`` to a float64 2D array, validating shape and range."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise InvalidDimensionError(f"expected a non-empty 2D grid, got shape {arr.shape}")
    if check_range and not ((arr >= 0.0) & (arr <= 1.0)).all():
        raise ValueError("membership values must lie in [0, 1]")
    return arr


def _check_dims(width, height):
    if width < 1 or height < 1:
        raise InvalidDimensionError(f"grid dimensions must be >= 1, got {width}x{height}")


def _check_center(width, height, center):
    col, row = center
    if not (0 <= col < width and 0 <= row < height):
        raise InvalidDimensionError(f"center {center} lies outside a {width}x{height} grid")


def zeros(width, height):
    _check_dims(width, height)
    return np.zeros((height, width))


def ones(width, height):
    _check_dims(width, height)
    return np.ones((height, width))


def make_disk(width, height, center, radius):
    """Crisp disk: 1 where the pixel-center distance to ``center`` is <= radius."""
    _check_dims(width, height)
    _check_center(width, height, center)
    if radius < 0:
        raise InvalidDimensionError(f"radius must be >= 0, got {radius}")
    col, row = center
    rows, cols = np.mgrid[0:height, 0:width]
    return ((cols - col) ** 2 + (rows - row) ** 2 <= radius**2).astype(np.float64)


def make_square(width, height, center, side):
    """Crisp axis-aligned square of the given side, clipped to the grid.

    An even side has no middle pixel; the square then spans offsets
    ``-(side/2 - 1) .. side/2`` so that ``center`` is the top-left pixel of the
    central 2x2 block.
    """
    _check_dims(width, height)
    _check_center(width, height, center)
    if side < 1:
        raise InvalidDimensionError(f"side must be >= 1, got {side}")
    side = int(side)
    lo = (side - 1) // 2
    hi = side // 2
    col, row = center
    out = np.zeros((height, width))
    out[max(row - lo, 0):row + hi + 1, max(col - lo, 0):col + hi + 1] = 1.0
    return out


def elementwise_mul(a, b):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shape mismatch: {a.shape} vs {b.shape}")
    return a * b


def grid_sum(a):
    return float(np.sum(a, dtype=np.float64))


def elementwise_pow(a, p):
    """Per-pixel ``a ** p`` with ``0 ** 0 == 1``."""
    if p < 0:
        raise ValueError(f"power must be >= 0, got {p}")
    return np.power(np.asarray(a, dtype=np.float64), float(p))
