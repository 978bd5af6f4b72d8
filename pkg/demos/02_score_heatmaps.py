"""
=====================================
02. Relational scores over placements
=====================================

Slide a disk-shaped target over every position of the image, score it against
each relational map, and look at the central row and column of the resulting
heatmaps.
"""
from pathlib import Path

import numpy as np

import relmap
from relmap.io import write_vector
from relmap.relation import disk_footprint, heatmap_from_map, midcut

out = Path("demo_out")
out.mkdir(exist_ok=True)
fp = disk_footprint(5)

###############################################################################
# For "right of", the dilation score is ~1 far to the right of the source and
# 0 to its left. The convolution score follows the same pattern, scaled down.

scene = relmap.build_scene("right", 100)
heat = {}
for name, method in (("dilation", relmap.ExactDilation()), ("conv", relmap.Convolution()),
                     ("chm", relmap.CHM()), ("genmean", relmap.GeneralizedMean())):
    heat[name] = heatmap_from_map(relmap.compute_map(scene.source, scene.kernel, method), fp)
    cut = midcut(heat[name], "mid_y")
    write_vector(out / f"midy_right_{name}.csv", cut)
    print(f"{name:>8}: S at x=5 {cut[5]:.4f}, x=20 {cut[20]:.4f}, x=80 {cut[80]:.4f}")

###############################################################################
# Inside the source the dilation scores high because its kernel contains the
# origin. The crown kernel of "close to" does not, yet the dilation score is
# still high at the source center, while the convolution score is not.

close = relmap.build_scene("close", 100)
col, row = close.source_center
s_dil = heatmap_from_map(relmap.dilate(close.source, close.kernel), fp)[row, col]
s_conv = heatmap_from_map(relmap.conv_map(close.source, close.kernel), fp)[row, col]
print(f"close to, target on the source: dilation {s_dil:.3f}, convolution {s_conv:.3f}")

###############################################################################
# Signed difference maps, stored as PGM with 0.5 meaning "no difference".

for name in ("conv", "chm", "genmean"):
    relmap.io.write_pgm(out / f"heatdiff_right_{name}.pgm", (heat[name] - heat["dilation"] + 1) / 2)
print("largest |S_chm - S_dil|:", float(np.nanmax(np.abs(heat["chm"] - heat["dilation"]))))
