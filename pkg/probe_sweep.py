"""Single-lever sweep for the utilization-gap criterion: ma-ib vs static."""
import dataclasses
import sys
import time

import numpy as np

from interslice.config import load_config
from interslice.orchestrator import train


def base():
    scfg = load_config("src/interslice/presets/desk.cfg")
    return dataclasses.replace(
        scfg, agent=dataclasses.replace(scfg.agent, eps_end=0.02))


def heavy_mu(scfg, mu):
    slices = []
    for sl in scfg.slices:
        if sl.traffic.packet_bits == 1500:
            tp = dataclasses.replace(sl.traffic, mu=mu)
            sl = dataclasses.replace(sl, traffic=tp, traffic_norm=None)
        slices.append(sl)
    return dataclasses.replace(scfg, slices=tuple(slices))


def light_mu(scfg, mu):
    slices = []
    for sl in scfg.slices:
        if sl.traffic.packet_bits != 1500:
            tp = dataclasses.replace(sl.traffic, mu=mu)
            sl = dataclasses.replace(sl, traffic=tp, traffic_norm=None)
        slices.append(sl)
    return dataclasses.replace(scfg, slices=tuple(slices))


CONFIGS = {
    "theta2": lambda c: dataclasses.replace(
        c, reward=dataclasses.replace(c.reward, theta=2.0)),
    "mu630": lambda c: heavy_mu(c, 630.0),
    "fmax38": lambda c: dataclasses.replace(
        c, edge=dataclasses.replace(c.edge, f_max=38.0)),
    "lscale03": lambda c: dataclasses.replace(
        c, reward=dataclasses.replace(c.reward, latency_scale=0.03)),
    "light5000": lambda c: light_mu(c, 5000.0),
    "light5000_theta2": lambda c: dataclasses.replace(
        light_mu(c, 5000.0),
        reward=dataclasses.replace(c.reward, theta=2.0)),
}

seed = 0
for name in sys.argv[1:]:
    scfg = CONFIGS[name](base())
    row = {}
    for variant in ("ma-ib", "static-baseline"):
        t0 = time.monotonic()
        res = train(scfg, variant=variant, seed=seed)
        dt = time.monotonic() - t0
        row[variant] = res
        cf = float(np.mean(res.conflict_rates[-100:]))
        us = float(np.mean(res.mean_utilizations[-100:]))
        ut = float(np.mean(res.mean_utilizations_total[-100:]))
        lat = float(np.mean(res.final_latencies[-100:]))
        print(f"{name:9s} s{seed} {variant:16s} conf={cf:.4f} "
              f"util_slice={us:.4f} util_total={ut:.4f} lat={lat:.4f} "
              f"wall={dt:.0f}s", flush=True)
    gap = (float(np.mean(row["ma-ib"].mean_utilizations[-100:]))
           - float(np.mean(row["static-baseline"].mean_utilizations_total[-100:])))
    print(f"{name:9s} s{seed} GAP = {gap:+.4f}", flush=True)
