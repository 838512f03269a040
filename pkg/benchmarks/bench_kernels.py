"""Time the compiled kernels against the pure-Python fallback on identical inputs.

    python3 benchmarks/bench_kernels.py [--repeat 5]

The end-to-end rows run a full solve in a subprocess per backend, since the
backend is chosen once at import.
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from sccolor import kernels, proper_to_scc
from sccolor.generate import gen_degenerate, random_conflicts
from sccolor.lll import greedy_order, sample_inventories

SOLVE = """
import time
from sccolor import SolverConfig, moser_tardos_solve, BACKEND
from sccolor.generate import gen_degenerate, random_conflicts
inst = random_conflicts(gen_degenerate(300, 10, 2), 9, 3)
t = time.perf_counter()
rep = moser_tardos_solve(inst, SolverConfig(seed=77, probability_override=0.45))
print(BACKEND, rep.outcome, rep.rounds, f"{time.perf_counter() - t:.4f}")
"""


def cases():
    g = gen_degenerate(20000, 20, 1)
    inst = random_conflicts(g, 30, 2)
    indptr, nbrs, _ = g.adjacency
    S = sample_inventories(inst, 0.3, np.random.default_rng(0)).S
    order, _ = greedy_order(inst)
    small = proper_to_scc(gen_degenerate(60, 3, 4), 4)
    sorder = np.arange(small.n, dtype=np.int64)[::-1].copy()
    return {
        "smallest_last n=20000 d=20": lambda b: b.smallest_last(g.n, indptr, nbrs),
        "prune n=20000 k=30": lambda b: b.prune(S, *inst.arrays),
        "greedy_color n=20000 k=30": lambda b: b.greedy_color(inst.n, inst.k, order, *inst.incidence),
        "backtrack proper 4-coloring n=60": lambda b: b.backtrack(small.n, small.k, sorder, *small.incidence),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if kernels.compiled_backend is None:
        sys.exit("compiled backend not built; run pip install -e . --no-build-isolation")
    print(f"{'kernel':36} {'compiled ms':>12} {'python ms':>12} {'speedup':>8}")
    for name, fn in cases().items():
        times = []
        for backend in (kernels.compiled_backend, kernels.python_backend):
            times.append(min(timeit.repeat(lambda: fn(backend), number=1, repeat=args.repeat)) * 1000)
        print(f"{name:36} {times[0]:12.2f} {times[1]:12.2f} {times[1] / times[0]:8.1f}")
    print("\nend-to-end solve (backend outcome rounds seconds):")
    for pure in ("", "1"):
        env = dict(os.environ, SCCOLOR_PURE_PYTHON=pure)
        if not pure:
            env.pop("SCCOLOR_PURE_PYTHON")
        out = subprocess.run([sys.executable, "-c", SOLVE], env=env, capture_output=True, text=True, check=True)
        print("  " + out.stdout.strip())


if __name__ == "__main__":
    main()
