"""Differentiable approximations of the dilation-based relational map.

Three operators stand in for :func:`relmap.morphology.dilate`:

* :func:`conv_map` -- plain convolution of the source with the kernel;
* :func:`chm_map` -- counter-harmonic mean of the dilation terms;
* :func:`genmean_map` -- normalised power mean of the dilation terms.

The two mean operators converge to the dilation as ``p`` grows.
"""
import math

import numpy as np

from . import _engine
from .errors import InvalidKernelError
from .grid import as_grid
from .kernels import check_kernel, kernel_mass
from .morphology import tnorm_function

__all__ = ["NORM_MODES", "DEFAULT_P", "DEFAULT_EPS", "conv_map", "chm_map", "genmean_map"]

NORM_MODES = ("kernel_sum", "none")
DEFAULT_P = 100.0
DEFAULT_EPS = 1e-30


def check_power(p):
    p = float(p)
    if not (p > 0 and math.isfinite(p)):
        raise ValueError(f"p must be a positive finite number, got {p}")
    return p


def conv_map(k, B, mode="kernel_sum", threads=None):
    """Convolution map ``(k * B)(x) = sum_t k(t) B(x - t)``.

    With ``mode="kernel_sum"`` the result is divided by the kernel mass and
    stays in [0, 1]. ``mode="none"`` returns the raw convolution, which may
    exceed 1.
    """
    if mode not in NORM_MODES:
        raise ValueError(f"unknown normalisation mode {mode!r}; expected one of {NORM_MODES}")
    k = as_grid(k)
    B = check_kernel(B)
    out = _engine.convolve(k, B, threads)
    if mode == "kernel_sum":
        out /= kernel_mass(B)
    return out


def chm_map(m, w, p=DEFAULT_P, eps=DEFAULT_EPS, weighting="tnorm", tnorm="product",
            threads=None, tau=None):
    """Counter-harmonic mean map.

    ``weighting="tnorm"`` (default) takes the counter-harmonic mean of the
    dilation terms ``t(w(x - y), m(y))``::

        sum_y t^(p+1) / (sum_y t^p + eps)

    which for the product t-norm is ``(m^(p+1) * w^(p+1)) / (m^p * w^p)``. Each
    pixel is evaluated relative to its largest term so that high powers of
    small memberships do not underflow; ``tau`` may pass that per-pixel maximum
    (the dilation) in when it is already known.

    ``weighting="kernel"`` uses the kernel as plain convolution weights,
    ``(m^(p+1) * w) / (m^p * w + eps)``. Both forms coincide for crisp kernels,
    but only the first converges to the dilation when the kernel is fuzzy.

    The result is clamped to [0, 1].
    """
    p = check_power(p)
    if not eps > 0:
        raise ValueError(f"eps must be > 0, got {eps}")
    m = as_grid(m)
    w = check_kernel(w)
    if weighting == "kernel":
        num = _engine.convolve(np.power(m, p + 1.0), w, threads)
        den = _engine.convolve(np.power(m, p), w, threads)
        out = num / (den + eps)
    elif weighting == "tnorm":
        t = tnorm_function(tnorm)
        if tau is None:
            tau = _engine.sup_tnorm(m, w, t, threads)
        den, num = _engine.power_sums(m, w, t, tau, p, with_next=True, threads=threads)
        out = tau * num / (den + eps)
    else:
        raise ValueError(f"unknown weighting {weighting!r}; expected 'tnorm' or 'kernel'")
    return np.clip(out, 0.0, 1.0)


def genmean_map(m, w, p=DEFAULT_P, tnorm="product", threads=None, tau=None):
    """Power-mean map ``(sum_y t(w(x - y), m(y))^p / sum_v w(v)) ** (1/p)``.

    Evaluated as ``tau * (sum_y (t / tau)^p / sum w) ** (1/p)`` with ``tau``
    the per-pixel maximum term, which is exact in real arithmetic and immune
    to underflow at large ``p``. Pixels with ``tau == 0`` map to 0. The result
    is clamped to [0, 1]; it can only exceed 1 for ``p < 1``.
    """
    p = check_power(p)
    m = as_grid(m)
    w = check_kernel(w)
    mass = kernel_mass(w)
    if mass <= 0:
        raise InvalidKernelError("kernel mass must be positive")
    t = tnorm_function(tnorm)
    if tau is None:
        tau = _engine.sup_tnorm(m, w, t, threads)
    acc = _engine.power_sums(m, w, t, tau, p, threads=threads)
    out = tau * np.power(acc / mass, 1.0 / p)
    return np.clip(out, 0.0, 1.0)
