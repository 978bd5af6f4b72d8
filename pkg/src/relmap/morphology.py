"""Exact fuzzy dilation, the reference every approximation is measured against."""
import numpy as np

from . import _engine
from .grid import as_grid
from .kernels import check_kernel

__all__ = ["TNORMS", "tnorm_function", "dilate", "is_extensive"]


def _product(weight, values):
    return values * weight


def _minimum(weight, values):
    return np.minimum(values, weight)


TNORMS = {"product": _product, "minimum": _minimum}


def tnorm_function(tnorm):
    try:
        return TNORMS[tnorm]
    except KeyError:
        raise ValueError(f"unknown t-norm {tnorm!r}; expected one of {sorted(TNORMS)}") from None


def dilate(m, w, tnorm="product", threads=None):
    """Fuzzy dilation ``out(x) = max_y t(w(x - y), m(y))``.

    ``m`` is zero outside the grid and ``w`` zero outside its support. The
    evaluation is the plain double loop over pixels and kernel offsets.
    """
    m = as_grid(m)
    w = check_kernel(w)
    return _engine.sup_tnorm(m, w, tnorm_function(tnorm), threads)


def is_extensive(w):
    """True when the kernel origin has weight 1, so dilation dominates its input."""
    w = np.asarray(w)
    return bool(w[(w.shape[0] - 1) // 2, (w.shape[1] - 1) // 2] == 1.0)
