"""Candidate: heavy sigma 400, theta 1, eps_end 0.005, stock levels."""
import dataclasses
import sys
import time

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
for token in sys.argv[2:]:
    if token.startswith("ib:"):
        key, _, val = token[3:].partition("=")
        cast = int if key in ("d_z",) else float
        agent = dataclasses.replace(agent, **{key: cast(val)})

scfg = dataclasses.replace(scfg, slices=tuple(slices), agent=agent)

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
variants = [a for a in sys.argv[2:] if not a.startswith("ib:")] or [
    "ma-ib", "ma-applied", "ma-vanilla", "static-baseline"]

for variant in variants:
    t0 = time.monotonic()
    res = train(scfg, variant=variant, seed=seed)
    dt = time.monotonic() - t0
    cf = float(np.mean(res.conflict_rates[-100:]))
    us = float(np.mean(res.mean_utilizations[-100:]))
    ut = float(np.mean(res.mean_utilizations_total[-100:]))
    lat = float(np.mean(res.final_latencies[-100:]))
    wins = [float(np.mean(res.conflict_rates[a:b]))
            for a, b in ((300, 350), (350, 400), (400, 450), (450, 500))]
    wtxt = " ".join(f"{w:.4f}" for w in wins)
    print(f"s{seed} {variant:16s} conf[-100]={cf:.4f} util_slice={us:.4f} "
          f"util_total={ut:.4f} lat={lat:.4f} win[{wtxt}] wall={dt:.0f}s",
          flush=True)
