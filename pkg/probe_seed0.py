"""One-seed probe of the desk campaign before committing to all five seeds."""
import time

import numpy as np

from interslice.config import load_config
from interslice.orchestrator import train

scfg = load_config("src/interslice/presets/desk.cfg")

for variant in ("ma-ib", "ma-applied", "ma-vanilla", "static-baseline"):
    t0 = time.monotonic()
    res = train(scfg, variant=variant, seed=0)
    dt = time.monotonic() - t0
    cf = float(np.mean(res.conflict_rates[-100:]))
    us = float(np.mean(res.mean_utilizations[-100:]))
    ut = float(np.mean(res.mean_utilizations_total[-100:]))
    lat = float(np.mean(res.final_latencies[-100:]))
    print(f"{variant:16s} conflict[-100]={cf:.4f} util_slice={us:.4f} "
          f"util_total={ut:.4f} latency={lat:.5f} wall={dt:.1f}s", flush=True)
