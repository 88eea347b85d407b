"""Compare the compiled and pure-Python hop-reach kernels.

    python benchmarks/bench_kernels.py [--sizes 200,1000,5000] [--hops 2,3] [--repeat 3]
"""
import argparse
import time

import numpy as np

from netvalue import RngSeed, WsConfig, kernels, ws_generate
from netvalue.graph import reach_counts


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="200,1000,5000")
    ap.add_argument("--hops", default="2,3")
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--p", type=float, default=0.2)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = sorted(kernels.BACKENDS)
    print(f"active backend: {kernels.BACKEND}; available: {', '.join(backends)}")
    header = f"{'n':>7} {'h':>3} " + " ".join(f"{b + ' [ms]':>14}" for b in backends)
    if len(backends) > 1:
        header += f" {'speedup':>9}"
    print(header)
    for n in map(int, args.sizes.split(",")):
        g = ws_generate(WsConfig(n, args.k, args.p), RngSeed(0))
        g.csr  # build adjacency outside the timed region
        for h in map(int, args.hops.split(",")):
            timings, results = {}, []
            for b in backends:
                timings[b], out = best_of(lambda: reach_counts(g, h, b), args.repeat)
                results.append(out)
            assert all(np.array_equal(results[0], r) for r in results[1:]), "backends disagree"
            line = f"{n:>7} {h:>3} " + " ".join(f"{timings[b] * 1e3:>14.2f}" for b in backends)
            if len(backends) > 1:
                line += f" {timings['python'] / timings['cython']:>8.1f}x"
            print(line)


if __name__ == "__main__":
    main()
