"""Fuzzy structuring elements for spatial relations.

Kernels are float64 arrays of shape ``(size_y, size_x)`` with both sizes odd;
the origin is the center pixel. An offset ``(dx, dy)`` addresses
``kernel[cy + dy, cx + dx]`` where ``(cx, cy)`` is the center, so ``dx`` grows
to the right and ``dy`` grows downwards (the row direction).
"""
import numpy as np

from .errors import InvalidKernelError

__all__ = [
    "check_kernel",
    "kernel_mass",
    "default_support",
    "offset_grid",
    "directional_kernel",
    "ring_kernel",
    "far_kernel",
    "dot_kernel",
    "flip_kernel",
]


def _check_sizes(size_x, size_y):
    for s in (size_x, size_y):
        if int(s) != s or s < 1 or s % 2 == 0:
            raise InvalidKernelError(f"kernel sizes must be odd and >= 1, got {size_x}x{size_y}")


def check_kernel(kernel):
    """Validate a kernel array and return it as float64."""
    k = np.asarray(kernel, dtype=np.float64)
    if k.ndim != 2:
        raise InvalidKernelError(f"kernel must be 2D, got shape {k.shape}")
    _check_sizes(k.shape[1], k.shape[0])
    if not ((k >= 0.0) & (k <= 1.0)).all():
        raise InvalidKernelError("kernel weights must lie in [0, 1]")
    if not (k > 0).any():
        raise InvalidKernelError("kernel must have at least one positive weight")
    return k


def kernel_mass(kernel):
    return float(np.sum(kernel, dtype=np.float64))


def default_support(width, height):
    """Kernel sizes ``(2W - 1, 2H - 1)``: large enough to reach every pixel offset."""
    return 2 * width - 1, 2 * height - 1


def offset_grid(size_x, size_y):
    """Integer offset arrays ``(dx, dy)`` of a kernel footprint."""
    _check_sizes(size_x, size_y)
    cx, cy = (size_x - 1) // 2, (size_y - 1) // 2
    dy, dx = np.mgrid[-cy:cy + 1, -cx:cx + 1]
    return dx, dy


def directional_kernel(size_x, size_y, direction, origin_value=1.0):
    """Weight ``max(0, 1 - 2*theta/pi)`` where theta is the angle to ``direction``.

    ``direction`` is in radians, 0 pointing right and pi/2 pointing down the
    rows. The origin has no angle and takes ``origin_value``.
    """
    if not 0.0 <= origin_value <= 1.0:
        raise InvalidKernelError(f"origin_value must lie in [0, 1], got {origin_value}")
    dx, dy = offset_grid(size_x, size_y)
    ux, uy = np.cos(direction), np.sin(direction)
    theta = np.abs(np.arctan2(dx * uy - dy * ux, dx * ux + dy * uy))
    w = np.maximum(0.0, 1.0 - 2.0 * theta / np.pi)
    w[(dx == 0) & (dy == 0)] = origin_value
    return w


def _ramp(d, lo, hi):
    # 0 at d <= lo, 1 at d >= hi; a step when lo == hi
    if hi > lo:
        with np.errstate(over="ignore"):
            return np.clip((d - lo) / (hi - lo), 0.0, 1.0)
    return (d > lo).astype(np.float64)


def ring_kernel(size_x, size_y, r1, r2, r3, r4):
    """Trapezoidal ring over the offset radius.

    Zero up to ``r1``, rising to 1 on ``[r1, r2]``, flat to ``r3``, falling to
    zero on ``[r3, r4]``. ``r1 = r2 = 0`` gives the plain decreasing "close to"
    disk (with weight 1 at the origin).
    """
    if not 0 <= r1 <= r2 <= r3 <= r4:
        raise InvalidKernelError(f"need 0 <= r1 <= r2 <= r3 <= r4, got {(r1, r2, r3, r4)}")
    dx, dy = offset_grid(size_x, size_y)
    d = np.hypot(dx, dy)
    # r2 == 0 means no hole at all, origin included
    rise = _ramp(d, r1, r2) if r2 > 0 else np.ones_like(d)
    if r4 > r3:
        with np.errstate(over="ignore"):
            fall = np.clip((r4 - d) / (r4 - r3), 0.0, 1.0)
    else:
        fall = (d <= r4).astype(np.float64)
    return np.minimum(rise, fall)


def far_kernel(size_x, size_y, r_a, r_b):
    """Zero up to ``r_a``, rising linearly to 1 at ``r_b``, 1 beyond."""
    if not 0 <= r_a <= r_b:
        raise InvalidKernelError(f"need 0 <= r_a <= r_b, got {(r_a, r_b)}")
    dx, dy = offset_grid(size_x, size_y)
    return _ramp(np.hypot(dx, dy), r_a, r_b)


def dot_kernel(size_x=1, size_y=1):
    dx, dy = offset_grid(size_x, size_y)
    return ((dx == 0) & (dy == 0)).astype(np.float64)


def flip_kernel(kernel):
    """Point reflection through the origin: ``out(v) = kernel(-v)``."""
    return np.ascontiguousarray(np.asarray(kernel)[::-1, ::-1])
