"""Benchmark: numba kernels vs the pure-numpy fallback.

Times the aligned-pair Spearman kernel on a synthetic workload shaped
like the real sweep: thousands of indicator pairs with short (<= 29
point) partially overlapping yearly series. Run from the repo root:

    python benchmarks/bench_spearman.py [--pairs 20000]

The active path follows SDG_INTERACTIONS_NO_NUMBA; both paths are timed
regardless (when numba is importable) and checked against each other.
"""

import argparse
import math
import random
import time

import numpy as np

from sdg_interactions import kernels


def make_workload(n_pairs, seed=0):
    rng = random.Random(seed)
    pairs = []
    for _ in range(n_pairs):
        def series():
            years = sorted(rng.sample(range(1990, 2019), rng.randint(6, 29)))
            values = [rng.uniform(0, 100) for _ in years]
            return (
                np.array(years, dtype=np.int64),
                np.array(values, dtype=np.float64),
            )

        pairs.append((*series(), *series()))
    return pairs


def run(fn, workload, min_n=5):
    out = np.empty(len(workload))
    start = time.perf_counter()
    for i, (ya, va, yb, vb) in enumerate(workload):
        out[i] = fn(ya, va, yb, vb, min_n)
    return time.perf_counter() - start, out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=20000)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    workload = make_workload(args.pairs)
    print(f"workload: {args.pairs} aligned pairs, numba active: {kernels.USING_NUMBA}")

    candidates = [("numpy", kernels.spearman_aligned_numpy)]
    if kernels.USING_NUMBA:
        kernels.warmup()
        candidates.append(("numba", kernels.spearman_aligned_numba))

    results = {}
    for name, fn in candidates:
        best = math.inf
        for _ in range(args.repeats):
            elapsed, values = run(fn, workload)
            best = min(best, elapsed)
        results[name] = (best, values)
        rate = args.pairs / best
        print(f"{name:>6}: {best:.3f}s  ({rate:,.0f} pairs/s)")

    if len(results) == 2:
        a = results["numpy"][1]
        b = results["numba"][1]
        both_nan = np.isnan(a) & np.isnan(b)
        assert np.allclose(a[~both_nan], b[~both_nan], atol=1e-12)
        speedup = results["numpy"][0] / results["numba"][0]
        print(f"paths agree to 1e-12; numba speedup: {speedup:.1f}x")


if __name__ == "__main__":
    main()
