"""Direct-loop sliding engine shared by every map operator.

All operators here evaluate sums or maxima of the form

    out(x) = REDUCE_v  f(K(v), img(x - v))

over the non-zero offsets ``v`` of an odd-sized kernel ``K`` whose origin is its
center pixel, with ``img`` treated as zero outside its bounds. The loop runs
over kernel offsets in row-major order and updates the overlapping window of the
output with one vectorised numpy call per offset, so the per-pixel accumulation
order is fixed regardless of how the output rows are split across threads.
"""
import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np


def resolve_threads(threads=None):
    """Return the worker count, falling back to ``RELMAP_THREADS`` then 1."""
    if threads is None:
        env = os.environ.get("RELMAP_THREADS")
        threads = int(env) if env else 1
    return max(1, int(threads))


def kernel_offsets(kernel):
    """Offsets ``(dr, dc, weight)`` of the non-zero kernel entries, row-major."""
    kh, kw = kernel.shape
    cr, cc = (kh - 1) // 2, (kw - 1) // 2
    rows, cols = np.nonzero(kernel)
    return [(int(r) - cr, int(c) - cc, float(kernel[r, c])) for r, c in zip(rows, cols)]


def _window(shift, lo, hi, size):
    # out index i reads input index i - shift; restrict i to [lo, hi)
    start = max(lo, shift, 0)
    stop = min(hi, size + shift, size)
    if start >= stop:
        return None
    return slice(start, stop), slice(start - shift, stop - shift)


def sweep(shape, offsets, visit, threads=None):
    """Call ``visit(out_slice, in_slice, weight)`` for every offset.

    ``out_slice`` and ``in_slice`` are 2-tuples of slices addressing the
    overlapping windows of the output and the input image. With several threads
    the output rows are split into disjoint bands; each band still visits the
    offsets in the same order.
    """
    h, w = shape
    nthreads = min(resolve_threads(threads), h)

    def band(r0, r1):
        for dr, dc, wv in offsets:
            rows = _window(dr, r0, r1, h)
            if rows is None:
                continue
            cols = _window(dc, 0, w, w)
            if cols is None:
                continue
            visit((rows[0], cols[0]), (rows[1], cols[1]), wv)

    if nthreads == 1:
        band(0, h)
        return
    edges = np.linspace(0, h, nthreads + 1).astype(int)
    with ThreadPoolExecutor(max_workers=nthreads) as pool:
        futures = [pool.submit(band, int(a), int(b)) for a, b in zip(edges[:-1], edges[1:])]
        for f in futures:
            f.result()


def convolve(img, kernel, threads=None):
    """Zero-padded convolution ``out(x) = sum_v K(v) img(x - v)``."""
    out = np.zeros(img.shape, dtype=np.float64)

    def visit(o, i, wv):
        out[o] += wv * img[i]

    sweep(img.shape, kernel_offsets(kernel), visit, threads)
    return out


def correlate(img, kernel, threads=None):
    """Zero-padded cross-correlation ``out(x) = sum_v K(v) img(x + v)``."""
    return convolve(img, kernel[::-1, ::-1], threads)


def sup_tnorm(img, kernel, tnorm, threads=None):
    """``out(x) = max_v t(K(v), img(x - v))``, zero where nothing overlaps."""
    out = np.zeros(img.shape, dtype=np.float64)

    def visit(o, i, wv):
        np.maximum(out[o], tnorm(wv, img[i]), out=out[o])

    sweep(img.shape, kernel_offsets(kernel), visit, threads)
    return out


def power_sums(img, kernel, tnorm, tau, p, with_next=False, threads=None):
    """Sums of ``(t(K(v), img(x - v)) / tau(x)) ** p`` over offsets.

    ``tau`` must dominate every term at its pixel (the sup-t dilation does), so
    each ratio lies in [0, 1] and nothing overflows; pixels with ``tau == 0``
    contribute zero. With ``with_next`` the sums of the ``p + 1`` powers are
    returned as well.
    """
    # dividing (not multiplying by 1/tau) keeps subnormal maxima finite
    safe = np.where(tau > 0, tau, 1.0)
    acc = np.zeros(img.shape, dtype=np.float64)
    acc_next = np.zeros(img.shape, dtype=np.float64) if with_next else None

    def visit(o, i, wv):
        r = tnorm(wv, img[i])
        r /= safe[o]
        rp = r ** p
        acc[o] += rp
        if with_next:
            rp *= r
            acc_next[o] += rp

    sweep(img.shape, kernel_offsets(kernel), visit, threads)
    return (acc, acc_next) if with_next else acc
