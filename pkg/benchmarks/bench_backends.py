"""Compare the compiled kernels against the pure-Python fallback.

Times the three hot paths (single-sample MLP forward, Poisson inverse
sampling, sum-tree prefix search) plus a short end-to-end training
burst. Backend selection happens at import, so the script re-runs
itself in a child process per backend and aggregates:

    python benchmarks/bench_backends.py [--repeats 3]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def _time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run_child(repeats: int) -> dict:
    import numpy as np

    from interslice import backend
    from interslice.config import load_config
    from interslice.orchestrator import Orchestrator

    rng = np.random.default_rng(7)
    results = {"backend_name": backend.backend_name()}

    sizes = np.array([8, 64, 64, 24], dtype=np.int64)
    n_params = int(sum(sizes[i + 1] * sizes[i] + sizes[i + 1]
                       for i in range(len(sizes) - 1)))
    params = rng.standard_normal(n_params)
    x = rng.standard_normal(8)
    work = np.empty(2 * 64)
    out = np.empty(24)

    def fwd():
        for _ in range(20000):
            backend.mlp_forward1(sizes, params, x, work, out)
    results["mlp_forward1 x20k"] = _time(fwd, repeats)

    us = rng.random(200000)

    def pois():
        for u in us:
            backend.poisson_inv(7.0, u)
    results["poisson_inv x200k"] = _time(pois, repeats)

    tree = backend.SumTree(50000)
    tree.set_batch(np.arange(50000, dtype=np.int64),
                   rng.random(50000) + 1e-3)
    prefixes = rng.random(100000) * tree.total
    found = np.empty(100000, dtype=np.int64)
    results["sumtree prefix x100k"] = _time(
        lambda: tree.find_prefix_batch(prefixes, found), repeats)

    preset = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..",
                          "src", "interslice", "presets", "desk.cfg")
    scfg = load_config(preset)

    def burst():
        orch = Orchestrator(scfg, "ma-ib", seed=0)
        for ep in range(3):
            eps = orch.set_schedules(ep)
            orch.run_episode(ep, 100, eps, learn=True)
    results["training burst 3x100"] = _time(burst, max(1, repeats // 3))
    return results


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--backend", choices=("py", "c"), default=None,
                    help=argparse.SUPPRESS)   # child-process mode
    args = ap.parse_args()

    if args.backend is not None:
        print(json.dumps(run_child(args.repeats)))
        return 0

    rows = {}
    for name in ("py", "c"):
        env = dict(os.environ, INTERSLICE_BACKEND=name)
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__),
             "--backend", name, "--repeats", str(args.repeats)],
            env=env, capture_output=True, text=True)
        if proc.returncode != 0:
            sys.stderr.write(proc.stderr)
            print(f"backend {name!r} unavailable, skipping")
            continue
        rows[name] = json.loads(proc.stdout.strip().splitlines()[-1])

    if not rows:
        print("no backend could be loaded")
        return 1

    names = sorted(k for r in rows.values() for k in r
                   if k != "backend_name")
    names = sorted(set(names))
    width = max(len(n) for n in names) + 2
    labels = {b: rows[b]["backend_name"] for b in rows}
    print(f"{'benchmark (best of repeats, s)':<{width}}"
          + "".join(f"{labels[b]:>14}" for b in rows))
    for n in names:
        line = f"{n:<{width}}"
        for b in rows:
            v = rows[b].get(n)
            line += f"{v:>14.4f}" if v is not None else f"{'n/a':>14}"
        print(line)
    if {"py", "c"} <= rows.keys():
        print()
        for n in names:
            py, cc = rows["py"].get(n), rows["c"].get(n)
            if py and cc:
                print(f"{n}: compiled runs at {py / cc:.1f}x pure-Python")
    return 0


if __name__ == "__main__":
    sys.exit(main())
