"""Criterion-7 style check for cand13: eval-latency CDF at the threshold."""
import dataclasses
import pathlib

import numpy as np

from interslice.config import load_config
from interslice.metrics import cdf, quantile_below
from interslice.orchestrator import evaluate, train


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


scfg = build()
out = pathlib.Path("runs/probe-eval7")
out.mkdir(parents=True, exist_ok=True)
train(scfg, variant="ma-ib", seed=0, outdir=out)
paths = sorted(out.glob("agent*_ma-ib_seed0.npz"))
records = evaluate(scfg, paths, episodes=20, steps=scfg.run.steps, seed=99)
obs = np.concatenate([rec.latencies.ravel() for rec in records])
series = cdf(obs)
mono = all(a <= b for a, b in zip(series.fractions, series.fractions[1:]))
print(f"n={obs.size} monotone={mono} top={series.fractions[-1]:.3f} "
      f"F(0.05)={quantile_below(series, scfg.latency_threshold):.4f} "
      f"p50={np.quantile(obs, 0.5):.4f} p90={np.quantile(obs, 0.9):.4f} "
      f"p99={np.quantile(obs, 0.99):.4f} max={obs.max():.4f}", flush=True)
