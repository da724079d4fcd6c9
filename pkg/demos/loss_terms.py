"""The three loss terms on one toy prediction.

The total loss is ``seg + λ·bnd + λ_cons·cons``. ``seg`` and ``bnd`` are Dice
losses of the two heads. ``cons`` compares the boundary head with the
segmentation output masked to the boundary band.
"""
import torch

from dualseg.losses import LossWeights, boundary_map, total_loss

torch.manual_seed(0)
label = torch.zeros(1, 1, 24, 24, 24)
label[:, :, 6:18, 5:19, 7:17] = 1

# A plausible prediction: the label, smoothed a little, plus noise.
seg = (label * 0.8 + 0.1 + 0.05 * torch.randn_like(label)).clamp(0, 1)
band = boundary_map(label, 5).float()
bnd = (band * 0.7 + 0.15 + 0.05 * torch.randn_like(label)).clamp(0, 1)

for variant in ("mse", "dice"):
    total, parts = total_loss(seg, bnd, label, LossWeights(cons_variant=variant), r=5)
    print(f"{variant:4s}: " + "  ".join(f"{k} {v:.4f}" for k, v in parts.items()))

# With both weights at zero only the segmentation term is left.
total, parts = total_loss(seg, bnd, label, LossWeights(0.0, 0.0), r=5)
print("λ = λ_cons = 0:", f"total {parts['total']:.6f} == seg {parts['seg']:.6f}")
