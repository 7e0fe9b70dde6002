"""Per-slice final-100 utilization breakdown for one cand8 ma-ib run."""
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
    slices.append(sl)

agent = dataclasses.replace(scfg.agent, eps_end=0.005)
for token in sys.argv[1:]:
    key, _, val = token.partition("=")
    cast = int if key in ("d_z",) else float
    agent = dataclasses.replace(agent, **{key: cast(val)})

scfg = dataclasses.replace(scfg, slices=tuple(slices), agent=agent)

out = pathlib.Path("runs/probe-perslice")
out.mkdir(parents=True, exist_ok=True)
train(scfg, variant="ma-ib", seed=0, outdir=out,
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
    ttxt = " ".join(f"{lv:.1f}:{c/len(a):.2f}" for c, lv in top)
    print(f"slice {k}: util={u.mean():.4f} actions[{ttxt}]", flush=True)
