"""Relational maps, intersected maps, scores and score heatmaps."""
from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from . import _engine
from .approx import DEFAULT_EPS, DEFAULT_P, NORM_MODES, check_power, chm_map, conv_map, genmean_map
from .errors import DimensionMismatchError, EmptyTargetError, InvalidDimensionError
from .grid import as_grid, elementwise_mul, grid_sum
from .kernels import check_kernel, offset_grid
from .morphology import TNORMS, dilate

__all__ = [
    "ExactDilation",
    "Convolution",
    "CHM",
    "GeneralizedMean",
    "METHOD_NAMES",
    "make_method",
    "Relation",
    "compute_map",
    "relational_map",
    "intersected_map",
    "score",
    "disk_footprint",
    "pixel_footprint",
    "heatmap_from_map",
    "score_heatmap",
    "midcut",
]


@dataclass(frozen=True)
class ExactDilation:
    tnorm: str = "product"
    name: ClassVar[str] = "dilation"

    def __post_init__(self):
        if self.tnorm not in TNORMS:
            raise ValueError(f"unknown t-norm {self.tnorm!r}")


@dataclass(frozen=True)
class Convolution:
    mode: str = "kernel_sum"
    name: ClassVar[str] = "conv"

    def __post_init__(self):
        if self.mode not in NORM_MODES:
            raise ValueError(f"unknown normalisation mode {self.mode!r}")


@dataclass(frozen=True)
class CHM:
    p: float = DEFAULT_P
    eps: float = DEFAULT_EPS
    weighting: str = "tnorm"
    name: ClassVar[str] = "chm"

    def __post_init__(self):
        check_power(self.p)
        if not self.eps > 0:
            raise ValueError(f"eps must be > 0, got {self.eps}")
        if self.weighting not in ("tnorm", "kernel"):
            raise ValueError(f"unknown weighting {self.weighting!r}")


@dataclass(frozen=True)
class GeneralizedMean:
    p: float = DEFAULT_P
    tnorm: str = "product"
    name: ClassVar[str] = "genmean"

    def __post_init__(self):
        check_power(self.p)
        if self.tnorm not in TNORMS:
            raise ValueError(f"unknown t-norm {self.tnorm!r}")


METHOD_NAMES = ("dilation", "conv", "chm", "genmean")


def make_method(name, p=DEFAULT_P, eps=DEFAULT_EPS, tnorm="product", mode="kernel_sum"):
    """Build a map method from its short name, ignoring irrelevant options."""
    if name == "dilation":
        return ExactDilation(tnorm)
    if name == "conv":
        return Convolution(mode)
    if name == "chm":
        return CHM(p, eps)
    if name == "genmean":
        return GeneralizedMean(p, tnorm)
    raise ValueError(f"unknown method {name!r}; expected one of {METHOD_NAMES}")


@dataclass(frozen=True)
class Relation:
    """A relation between a source grid and a target grid through a kernel."""

    source: np.ndarray
    target: np.ndarray
    kernel: np.ndarray

    def __post_init__(self):
        if np.shape(self.source) != np.shape(self.target):
            raise DimensionMismatchError(
                f"source and target must share a domain: {np.shape(self.source)} vs {np.shape(self.target)}"
            )


def compute_map(source, kernel, method, threads=None):
    """Relational map of ``source`` through ``kernel`` with the given method."""
    if isinstance(method, ExactDilation):
        return dilate(source, kernel, method.tnorm, threads)
    if isinstance(method, Convolution):
        return conv_map(source, kernel, method.mode, threads)
    if isinstance(method, CHM):
        return chm_map(source, kernel, method.p, method.eps, method.weighting, threads=threads)
    if isinstance(method, GeneralizedMean):
        return genmean_map(source, kernel, method.p, method.tnorm, threads=threads)
    raise TypeError(f"not a map method: {method!r}")


def relational_map(rel, method, threads=None):
    return compute_map(rel.source, rel.kernel, method, threads)


def intersected_map(phi, target):
    return elementwise_mul(phi, target)


def score(phi, target):
    """Normalised relational score ``sum(phi * target) / sum(target)``."""
    mass = grid_sum(target)
    if not mass > 0:
        raise EmptyTargetError("target has zero total membership")
    return grid_sum(intersected_map(phi, target)) / mass


def disk_footprint(radius):
    """Crisp disk footprint centered on its origin pixel, for heatmap targets."""
    if radius < 0:
        raise InvalidDimensionError(f"radius must be >= 0, got {radius}")
    half = int(np.floor(radius))
    dx, dy = offset_grid(2 * half + 1, 2 * half + 1)
    return (dx**2 + dy**2 <= radius**2).astype(np.float64)


def pixel_footprint():
    return np.ones((1, 1))


def heatmap_from_map(phi, footprint, threads=None):
    """Score of a target with ``footprint`` centered at every pixel.

    The footprint is clipped to the grid at the borders and the score divides
    by the clipped mass. Placements whose clipped mass is zero are NaN.
    """
    phi = as_grid(phi, check_range=False)
    fp = check_kernel(footprint)
    num = _engine.correlate(phi, fp, threads)
    den = _engine.correlate(np.ones_like(phi), fp, threads)
    out = np.full(phi.shape, np.nan)
    np.divide(num, den, out=out, where=den > 0)
    return out


def score_heatmap(source, kernel, method, footprint, threads=None):
    """Heatmap of scores over all target placements; the map is computed once."""
    return heatmap_from_map(compute_map(source, kernel, method, threads), footprint, threads)


def midcut(grid, axis):
    """Central column (``"mid_x"``) or central row (``"mid_y"``) of a grid.

    Even dimensions take the lower-middle index.
    """
    grid = np.asarray(grid)
    h, w = grid.shape
    if axis == "mid_x":
        return grid[:, (w - 1) // 2].copy()
    if axis == "mid_y":
        return grid[(h - 1) // 2, :].copy()
    raise ValueError(f"axis must be 'mid_x' or 'mid_y', got {axis!r}")
