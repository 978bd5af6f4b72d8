"""
=================================
03. Gradients of the conv. score
=================================

The convolution score is differentiable in both the source ``k`` and the
target ``l``. Compare the closed-form gradients with central differences.
"""
import numpy as np

import relmap
from relmap.grad import conv_score, ds_dk, ds_dl, fd_check

rng = np.random.default_rng(0)
k, l = rng.random((12, 12)), rng.random((12, 12))
B = relmap.directional_kernel(23, 23, 0.0)

###############################################################################
# Source gradient: a correlation of the target with the kernel. It does not
# depend on the source at all.

g_k = ds_dk(l, B)
print("ds/dk error vs central differences:", fd_check(lambda kk: conv_score(kk, l, B), k, g_k))

###############################################################################
# Target gradient: positive where the map beats the current score, negative
# elsewhere. Scaling the target leaves the score unchanged, so the gradient is
# orthogonal to ``l``.

g_l = ds_dl(k, l, B)
print("ds/dl error vs central differences:", fd_check(lambda ll: conv_score(k, ll, B), l, g_l))
print("sum ds/dl * l =", float(np.sum(g_l * l)))

###############################################################################
# One plain gradient ascent step on the target raises the score.

before = conv_score(k, l, B)
l_new = np.clip(l + 50.0 * g_l, 0, 1)
print(f"score {before:.5f} -> {conv_score(k, l_new, B):.5f} after one ascent step")
