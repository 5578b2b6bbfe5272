#!/usr/bin/env python3
"""Benchmark the compiled BFS kernels against the pure-Python fallback.

Times every kernel on the same graphs with both backends, verifies the
outputs are bit-identical, and prints the speedups. Usage:

    python benchmarks/bench_kernels.py [--nodes N] [--repeats R]
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from gridwalk import gen_random, gen_small_world
from gridwalk._kernels import pure

try:
    from gridwalk._kernels import _core
except ImportError:
    _core = None


def best_of(fn, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def bench(name, indptr, indices, repeats):
    kernels = [
        ("bfs_distances", lambda mod: mod.bfs_distances(indptr, indices, 0)),
        ("shortest_path_counts", lambda mod: mod.shortest_path_counts(indptr, indices, 0)),
        ("harmonic_closeness", lambda mod: mod.harmonic_closeness(indptr, indices)),
        ("betweenness", lambda mod: mod.betweenness(indptr, indices)),
    ]
    print(f"\n{name} ({len(indptr) - 1} nodes, {len(indices) // 2} edges)")
    print(f"  {'kernel':22s} {'pure':>10s} {'cython':>10s} {'speedup':>8s}")
    for kernel_name, call in kernels:
        t_pure, r_pure = best_of(lambda: call(pure), repeats)
        t_core, r_core = best_of(lambda: call(_core), repeats)
        same = (
            all(np.array_equal(a, b) for a, b in zip(r_pure, r_core))
            if isinstance(r_pure, tuple)
            else np.array_equal(r_pure, r_core)
        )
        marker = "" if same else "  MISMATCH!"
        print(
            f"  {kernel_name:22s} {t_pure * 1e3:9.2f}ms {t_core * 1e3:9.2f}ms"
            f" {t_pure / t_core:7.1f}x{marker}"
        )
        if not same:
            sys.exit(1)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nodes", type=int, default=2000)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if _core is None:
        print("compiled kernels are not built; nothing to compare", file=sys.stderr)
        return 1

    ws = gen_small_world(args.nodes, 8, 0.1, seed=1)
    er = gen_random(args.nodes, 8.0 / (args.nodes - 1), seed=1)
    bench("small-world k=8 p=0.1", *ws.csr(), args.repeats)
    bench("random mean-degree 8", *er.csr(), args.repeats)
    return 0


if __name__ == "__main__":
    sys.exit(main())
