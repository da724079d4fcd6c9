"""Overlap and surface metrics on two shifted boxes.

Dice and Jaccard measure overlap, the Hausdorff distance (95th percentile by
default) and the average surface distance measure how far the two surfaces
are apart in millimetres. Anisotropic spacing scales the surface metrics.
"""
import numpy as np

from dualseg.metrics import evaluate_pair, surface_voxels

gt = np.zeros((32, 32, 32), np.uint8)
gt[8:24, 8:24, 8:24] = 1
pred = np.zeros_like(gt)
pred[10:26, 8:24, 8:24] = 1          # shifted by two voxels along the first axis

print("surface voxels of the reference box:", len(surface_voxels(gt)))

for spacing in ((1.0, 1.0, 1.0), (2.0, 1.0, 1.0)):
    for pct in (95, 100):
        m = evaluate_pair(pred, gt, spacing, pct)
        print(f"spacing {spacing}, HD{pct}: dice {m.dice:.4f}  jaccard {m.jaccard:.4f}  "
              f"hd {m.hausdorff_mm:.3f} mm  asd {m.asd_mm:.3f} mm")

# An empty prediction has no surface. The surface metrics then fall back to the volume diagonal.
m = evaluate_pair(np.zeros_like(gt), gt)
print(f"empty prediction: dice {m.dice}, hd {m.hausdorff_mm:.2f} mm (sentinel: {m.surface_sentinel})")
