"""cand13: heavy sigma 400, light f_th 2 + mu 5500, eps_end 0.005.

Usage: probe_cand13.py SEED variant [variant ...]
"""
import dataclasses
import sys
import time

import numpy as np

from interslice.config import load_config
from interslice.orchestrator import train


def build():
    scfg = load_config("src/interslice/presets/desk.cfg")
    slices = []
    for sl in scfg.slices:
        if sl.traffic.packet_bits == 1500:
            tp = dataclasses.replace(sl.traffic, sigma=400.0)
            sl = dataclasses.replace(sl, traffic=tp, traffic_norm=None)
        else:
            tp = dataclasses.replace(sl.traffic, mu=5500.0)
            sl = dataclasses.replace(sl, f_th=2.0, traffic=tp,
                                     traffic_norm=None)
        slices.append(sl)
    agent = dataclasses.replace(scfg.agent, eps_end=0.005)
    return dataclasses.replace(scfg, slices=tuple(slices), agent=agent)


seed = int(sys.argv[1])
scfg = build()
for variant in sys.argv[2:]:
    t0 = time.monotonic()
    res = train(scfg, variant=variant, seed=seed)
    dt = time.monotonic() - t0
    cf = float(np.mean(res.conflict_rates[-100:]))
    us = float(np.mean(res.mean_utilizations[-100:]))
    ut = float(np.mean(res.mean_utilizations_total[-100:]))
    lat = float(np.mean(res.final_latencies))
    print(f"s{seed} {variant:16s} conf={cf:.4f} util_slice={us:.4f} "
          f"util_total={ut:.4f} lat={lat:.4f} wall={dt:.0f}s", flush=True)
