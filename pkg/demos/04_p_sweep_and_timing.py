"""
=======================================
04. Choosing p, and what each map costs
=======================================

The mean-based maps need a power ``p``; the convolution needs none. Sweep
``p`` for accuracy, then time the four operators. Expect a few minutes.
"""
import relmap
from relmap.bench import sweep_p, timing

###############################################################################
# MSE to the exact dilation on the "right of" scene. Both errors fall as p
# grows and flatten out past p = 100.

scene = relmap.build_scene("right", 100)
for r in sweep_p(scene.source, scene.kernel, [1, 3, 10, 30, 100, 300]):
    print(f"p={r.param:>5g} {r.method:>8}: {r.metric:.3e}")

###############################################################################
# Median wall time per map. The mean maps do a max pass and a power pass over
# every (pixel, offset) pair; the convolution does a single multiply-add pass.

for r in timing([25, 50, 100], repeats=3, warmup=1):
    print(f"N={r.param:>4g} {r.method:>8}: median {r.metric:.3f}s (min {r.metric_min:.3f}s)")
