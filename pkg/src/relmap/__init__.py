"""Fuzzy-morphology spatial-relation maps and their differentiable approximations."""
from . import io
from .approx import chm_map, conv_map, genmean_map
from .bench import BenchRecord, mse, sweep_p, timing
from .errors import (
    DimensionMismatchError,
    EmptyTargetError,
    GridInvariantError,
    GridParseError,
    InvalidDimensionError,
    InvalidKernelError,
    NumericalFailureError,
    RelmapError,
)
from .grad import conv_score, ds_dk, ds_dl, fd_check
from .grid import elementwise_mul, elementwise_pow, grid_sum, make_disk, make_square
from .kernels import directional_kernel, dot_kernel, far_kernel, flip_kernel, ring_kernel
from .morphology import dilate, is_extensive
from .relation import (
    CHM,
    Convolution,
    ExactDilation,
    GeneralizedMean,
    Relation,
    compute_map,
    intersected_map,
    midcut,
    relational_map,
    score,
    score_heatmap,
)
from .scenes import build_scene

__version__ = "0.1.0"
