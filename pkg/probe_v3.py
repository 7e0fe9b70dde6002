"""Candidate desk retune probe v3: f_max 42, eps_end 0.02, sigma unchanged."""
import dataclasses
import sys
import time

import numpy as np

from interslice.config import load_config
from interslice.orchestrator import train

scfg = load_config("src/interslice/presets/desk.cfg")
scfg = dataclasses.replace(
    scfg,
    edge=dataclasses.replace(scfg.edge, f_max=42.0),
    agent=dataclasses.replace(scfg.agent, eps_end=0.02),
)

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0

for variant in ("ma-ib", "ma-applied", "ma-vanilla", "static-baseline"):
    t0 = time.monotonic()
    res = train(scfg, variant=variant, seed=seed)
    dt = time.monotonic() - t0
    cf = float(np.mean(res.conflict_rates[-100:]))
    us = float(np.mean(res.mean_utilizations[-100:]))
    ut = float(np.mean(res.mean_utilizations_total[-100:]))
    wins = [float(np.mean(res.conflict_rates[a:b]))
            for a, b in ((300, 350), (350, 400), (400, 450), (450, 500))]
    wtxt = " ".join(f"{w:.4f}" for w in wins)
    print(f"s{seed} {variant:16s} conf[-100]={cf:.4f} util_slice={us:.4f} "
          f"util_total={ut:.4f} win[{wtxt}] wall={dt:.1f}s", flush=True)
