"""The command-line workflow end to end on a tiny corpus.

The same steps from a shell::

    dualseg gen-data --config syn.toml --out data
    dualseg train --config exp.toml --out run
    dualseg eval --checkpoint run/seed_0/final.pt --manifest data/manifest.json
    dualseg sweep --config exp.toml --out sweep --seed 0
    dualseg report run
"""
import tempfile
from pathlib import Path

from dualseg.cli import main

SYN = """
[synthetic]
volume_size = 24
semi_axis_range = [4, 7]
sample_count = 6
noise_sigma = 0.5
"""

EXP = """
[experiment]
manifest = "data/manifest.json"
seeds = [0, 1]
labeled_count = 2
run_id = "quickstart"

[train]
iterations = 150
r = 3
patch_size = [16, 16, 16]
inference_strides = [8, 8, 8]
foreground_prob = 0.5

[train.backbone]
depth = 3
base_width = 4
feature_channels = 4

[sweep]
axis = "lambda_boundary"
values = [1, 30]
"""

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    (tmp / "syn.toml").write_text(SYN)
    (tmp / "exp.toml").write_text(EXP)

    def run(*argv):
        print("$ dualseg", " ".join(argv))
        status = main(list(argv))
        print(f"(exit {status})\n")

    run("gen-data", "--config", str(tmp / "syn.toml"), "--out", str(tmp / "data"))
    run("train", "--config", str(tmp / "exp.toml"), "--out", str(tmp / "run"))
    run("train", "--config", str(tmp / "exp.toml"), "--out", str(tmp / "run"))   # refuses to overwrite
    run("eval", "--checkpoint", str(tmp / "run/seed_0/final.pt"), "--manifest", str(tmp / "data/manifest.json"))
    run("sweep", "--config", str(tmp / "exp.toml"), "--out", str(tmp / "sweep"), "--seed", "0")
    run("report", str(tmp / "run"))
    print("report files:", sorted(p.name for p in (tmp / "run" / "report").iterdir()))
