"""Boundary labels from erosion.

The boundary target for a binary mask is the set of voxels that erosion
removes: ``mask XOR erode(mask, r)``. Its thickness grows with the kernel
size ``r``, and for ``r = 1`` the erosion changes nothing, so the band is
empty.
"""
import numpy as np

from dualseg.data import SyntheticSpec, generate_synthetic
from dualseg.morphology import boundary_label, erode

# %% One phantom from the synthetic generator.
sample = generate_synthetic(SyntheticSpec(volume_size=48, semi_axis_range=(8, 14), sample_count=1, seed=3))[0]
mask = sample.label
print("foreground voxels:", mask.count())

# %% Band size for each kernel size. Eroded core and band always partition the mask.
for r in (1, 3, 5, 7, 9):
    core = erode(mask, r).as_bool()
    band = boundary_label(mask, r).as_bool()
    assert not (core & band).any() and np.array_equal(core | band, mask.as_bool())
    print(f"r={r}: band {band.sum():6d} voxels ({band.sum() / mask.count():5.1%} of the mask)")

# %% A text rendering of the middle slice for r = 5: '#' core, '+' band.
z = mask.shape[2] // 2
band = boundary_label(mask, 5).voxels[:, :, z]
core = erode(mask, 5).voxels[:, :, z]
rows = []
for i in range(0, mask.shape[0], 2):
    rows.append("".join("#" if core[i, j] else "+" if band[i, j] else "." for j in range(0, mask.shape[1], 1)))
print("\n".join(r for r in rows if set(r) != {"."}))
