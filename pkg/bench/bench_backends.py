#!/usr/bin/env python3
"""Time the hot kernels under the numba backend and the numpy fallback.

Each backend runs in its own subprocess (selection happens at import via
ULAMBDA_BACKEND), with an untimed warmup call so jit compilation does not
pollute the numbers.

Usage:  python bench/bench_backends.py [--repeats N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time
from pathlib import Path

SRC = Path(__file__).resolve().parent.parent / "src"

_WORKER = r"""
import json, sys, time
import numpy as np
from ulambda._kernels import BACKEND, max_abs_on_circle, region_grid_max

repeats = int(sys.argv[1])
rng = np.random.default_rng(7)
coeffs = rng.standard_normal(17) + 1j * rng.standard_normal(17)

def run_circle():
    acc = 0.0
    for _ in range(2000):
        acc += max_abs_on_circle(coeffs, 0.999, 2048, offset=1.0)
    return acc

def run_grid():
    acc = 0.0
    for _ in range(10):
        acc += region_grid_max(1, 0.7, 2001)[0]
    return acc

out = {"backend": BACKEND}
for name, fn in (("circle_max_2048x2000", run_circle), ("region_grid_2001sq_x10", run_grid)):
    fn()  # warmup exercises jit compilation
    best = min(
        (lambda t0=time.perf_counter(): (fn(), time.perf_counter() - t0)[1])()
        for _ in range(repeats)
    )
    out[name] = best
print(json.dumps(out))
"""


def run_backend(backend: str, repeats: int) -> dict:
    env = dict(os.environ, ULAMBDA_BACKEND=backend, PYTHONPATH=str(SRC))
    proc = subprocess.run(
        [sys.executable, "-c", _WORKER, str(repeats)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3, help="timed repetitions; best is kept")
    args = parser.parse_args()

    results = {}
    for backend in ("numpy", "numba"):
        try:
            results[backend] = run_backend(backend, args.repeats)
        except subprocess.CalledProcessError as exc:
            print(f"{backend}: failed ({exc.stderr.strip().splitlines()[-1]})")
    if not results:
        return 1

    names = [k for k in next(iter(results.values())) if k != "backend"]
    print(f"{'kernel':<28}" + "".join(f"{b:>12}" for b in results) + f"{'speedup':>10}")
    for name in names:
        row = f"{name:<28}"
        for b in results:
            row += f"{results[b][name]:>11.4f}s"
        if len(results) == 2:
            t_np, t_nb = results["numpy"][name], results["numba"][name]
            row += f"{t_np / t_nb:>9.2f}x"
        print(row)
    return 0


if __name__ == "__main__":
    t0 = time.time()
    code = main()
    print(f"total {time.time() - t0:.1f}s")
    raise SystemExit(code)
