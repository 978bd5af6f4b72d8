"""Analytic gradients of the convolution score and a finite-difference checker.

The convolution score of a relation ``(k, l, B)`` is

    S(k, l) = sum_u (k * B)(u) l(u) / sum_u l(u)

It depends on the source ``k`` and the target ``l`` only; its derivative with
respect to any other object is identically zero.
"""
import math

import numpy as np

from . import _engine
from .approx import NORM_MODES, conv_map
from .errors import EmptyTargetError, NumericalFailureError
from .grid import as_grid, grid_sum
from .kernels import check_kernel, kernel_mass

__all__ = ["conv_score", "ds_dk", "ds_dl", "fd_check"]


def _target_mass(target):
    mass = grid_sum(target)
    if not mass > 0:
        raise EmptyTargetError("target has zero total membership")
    return mass


def conv_score(source, target, kernel, mode="kernel_sum", threads=None):
    """Score of ``target`` against the convolution map of ``source``.

    Inputs are not range-checked, so finite-difference probes may step
    slightly outside [0, 1].
    """
    source = as_grid(source, check_range=False)
    target = as_grid(target, check_range=False)
    mass = _target_mass(target)
    phi = _engine.convolve(source, check_kernel(kernel), threads)
    if mode == "kernel_sum":
        phi /= kernel_mass(kernel)
    return float(np.sum(phi * target)) / mass


def ds_dk(target, kernel, mode="kernel_sum", threads=None):
    """Gradient of the convolution score with respect to the source.

    ``G(x) = sum_u l(u) B(u - x) / sum_u l(u)``, further divided by the kernel
    mass under ``kernel_sum`` normalisation. It does not involve the source.
    """
    if mode not in NORM_MODES:
        raise ValueError(f"unknown normalisation mode {mode!r}")
    target = as_grid(target, check_range=False)
    kernel = check_kernel(kernel)
    mass = _target_mass(target)
    g = _engine.correlate(target, kernel, threads) / mass
    if mode == "kernel_sum":
        g /= kernel_mass(kernel)
    return g


def ds_dl(source, target, kernel, mode="kernel_sum", threads=None):
    """Gradient of the convolution score with respect to the target.

    ``G(x) = (phi(x) * sum l - sum(phi * l)) / (sum l)^2``.
    """
    target = as_grid(target, check_range=False)
    mass = _target_mass(target)
    phi = conv_map(as_grid(source, check_range=False), kernel, mode, threads)
    return (phi * mass - float(np.sum(phi * target))) / mass**2


def fd_check(score_fn, at, analytic, step=1e-6, pixels=None):
    """Largest relative gap between central differences and an analytic gradient.

    Returns ``max |fd - g| / max(1, |g|)`` over ``pixels`` (an iterable of
    ``(row, col)`` pairs, all pixels by default). Perturbed grids are not
    clamped.
    """
    if not step > 0:
        raise ValueError(f"step must be > 0, got {step}")
    at = np.array(at, dtype=np.float64)
    analytic = np.asarray(analytic, dtype=np.float64)
    if pixels is None:
        pixels = np.ndindex(at.shape)
    worst = 0.0
    for idx in pixels:
        idx = tuple(idx)
        orig = at[idx]
        at[idx] = orig + step
        up = score_fn(at)
        at[idx] = orig - step
        down = score_fn(at)
        at[idx] = orig
        if not (math.isfinite(up) and math.isfinite(down)):
            raise NumericalFailureError(f"non-finite score while probing pixel {idx}")
        fd = (up - down) / (2.0 * step)
        g = analytic[idx]
        worst = max(worst, abs(fd - g) / max(1.0, abs(g)))
    return float(worst)
