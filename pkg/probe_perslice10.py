"""Per-slice final-100 breakdown of a cand10 ma-ib run."""
import csv
import dataclasses
import pathlib
import sys
from collections import defaultdict

import numpy as np

from interslice.config import load_config
from interslice.orchestrator import train

scfg = load_config("src/interslice/presets/desk.cfg")
slices = []
for sl in scfg.slices:
    if sl.traffic.packet_bits == 1500:
        tp = dataclasses.replace(sl.traffic, sigma=400.0)
        sl = dataclasses.replace(sl, traffic=tp, traffic_norm=None)
    else:
        sl = dataclasses.replace(sl, f_th=2.0)
    slices.append(sl)
scfg = dataclasses.replace(
    scfg,
    slices=tuple(slices),
    agent=dataclasses.replace(scfg.agent, eps_end=0.005, beta_ib=1e-2),
)

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 2
out = pathlib.Path(f"runs/probe-perslice10-s{seed}")
out.mkdir(parents=True, exist_ok=True)
train(scfg, variant="ma-ib", seed=seed, outdir=out,
      csv_path=out / "episodes.csv")

lo = scfg.run.episodes - 100
util = defaultdict(list)
act = defaultdict(list)
with open(out / "episodes.csv", newline="") as fh:
    for row in csv.DictReader(fh):
        if int(row["episode"]) >= lo:
            k = int(row["slice"])
            util[k].append(float(row["utilization"]))
            act[k].append(float(row["action"]))

for k in sorted(util):
    u = np.array(util[k])
    a = np.array(act[k])
    levels, counts = np.unique(a, return_counts=True)
    top = sorted(zip(counts, levels), reverse=True)[:4]
    ttxt = " ".join(f"{lv:.2f}:{c/len(a):.2f}" for c, lv in top)
    print(f"s{seed} slice {k}: util={u.mean():.4f} actions[{ttxt}]",
          flush=True)
