"""
Compare the numba and numpy kernel backends on the diagram sweeps.

    python3 benchmarks/bench_kernels.py [--grid 4] [--samples 20000] [--repeat 3]

Numba compile time is measured once and reported separately; the timed runs
are warm.  Both backends must return identical arrays or the script fails.
"""

import argparse
import time

import numpy as np

from schubsupp import kernels
from schubsupp.bounds import all_diagrams, random_diagrams
from schubsupp.weylchar import downset_masks


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--grid", type=int, default=4)
    ap.add_argument("--samples", type=int, default=20000, help="random 6x6 diagrams")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    workloads = [
        (f"all {args.grid}x{args.grid}", all_diagrams(args.grid), args.grid),
        (f"random 6x6 x{args.samples}", random_diagrams(6, args.samples, seed=1), 6),
    ]
    backends = kernels.available_backends()
    if "numba" in backends:
        tiny = all_diagrams(2)
        t = time.perf_counter()
        kernels.r_stats_batch(tiny, 2, "numba")
        kernels.theta_batch(tiny, 2, downset_masks, "numba")
        print(f"numba compile/load: {time.perf_counter() - t:.2f}s")

    print(f"{'workload':<22}{'kernel':<10}" + "".join(f"{b:>10}" for b in backends) + f"{'speedup':>10}")
    for label, cols, n in workloads:
        for kname, fn in (("r_stats", lambda b: kernels.r_stats_batch(cols, n, b)),
                          ("theta", lambda b: kernels.theta_batch(cols, n, downset_masks, b))):
            res = {b: best_of(lambda: fn(b), args.repeat) for b in backends}
            outs = [o for _, o in res.values()]
            assert all(np.array_equal(outs[0], o) for o in outs[1:]), "backends disagree"
            row = f"{label:<22}{kname:<10}" + "".join(f"{res[b][0]:>9.3f}s" for b in backends)
            if len(backends) == 2:
                row += f"{res['numpy'][0] / res['numba'][0]:>9.1f}x"
            print(row)


if __name__ == "__main__":
    main()
