#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Loads both kernel instances in one process and times the same workloads:
exact chromatic numbers, partition counting, canonical forms, and one
generation level.  Usage:

    python3 benchmarks/bench_backends.py [--quick]
"""

import argparse
import time

import numpy as np

from critlab.backend import decode_codes_batch, load_kernels


def build_corpus(kern, n_max: int) -> dict[int, np.ndarray]:
    """Connected-graph matrix stacks by order, generated with `kern`."""
    levels = {1: np.zeros((1, 1, 1), dtype=np.uint8)}
    for n in range(2, n_max + 1):
        codes = []
        for pm in levels[n - 1]:
            cnt, out = kern.children_codes(pm, n - 1)
            codes.extend(int(out[i]) for i in range(cnt))
        levels[n] = decode_codes_batch(np.array(codes, dtype=np.int64), n)
    return levels


def timed(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true",
                        help="smaller workloads (pure backend is slow)")
    args = parser.parse_args()

    n_gen = 6 if args.quick else 7
    n_chrom = 6 if args.quick else 7

    numba_k = load_kernels("numba")
    numpy_k = load_kernels("numpy")
    if numba_k.BACKEND != "numba":
        print("numba unavailable; nothing to compare")
        return

    print("warming the JIT cache...")
    levels = build_corpus(numba_k, n_chrom)
    mats = levels[n_chrom]
    m = mats.shape[0]

    rows = []

    def bench(name, work_numba, work_numpy):
        t_jit = timed(work_numba)
        t_py = timed(work_numpy)
        rows.append((name, t_jit, t_py))

    bench(
        f"chromatic number, {m} graphs n={n_chrom}",
        lambda: [numba_k.chromatic(mats[i], n_chrom) for i in range(m)],
        lambda: [numpy_k.chromatic(mats[i], n_chrom) for i in range(m)],
    )
    bench(
        f"partition count (k=4, limit 2), {m} graphs",
        lambda: [numba_k.count_partitions(mats[i], n_chrom, 4, 2) for i in range(m)],
        lambda: [numpy_k.count_partitions(mats[i], n_chrom, 4, 2) for i in range(m)],
    )
    bench(
        f"canonical form, {m} graphs",
        lambda: [numba_k.canonical_code(mats[i], n_chrom) for i in range(m)],
        lambda: [numpy_k.canonical_code(mats[i], n_chrom) for i in range(m)],
    )
    parents = levels[n_gen - 1]
    bench(
        f"generation level {n_gen - 1} -> {n_gen} ({parents.shape[0]} parents)",
        lambda: [numba_k.children_codes(parents[i], n_gen - 1)
                 for i in range(parents.shape[0])],
        lambda: [numpy_k.children_codes(parents[i], n_gen - 1)
                 for i in range(parents.shape[0])],
    )

    width = max(len(r[0]) for r in rows) + 2
    print(f"\n{'workload'.ljust(width)}{'numba':>10}{'numpy':>10}{'speedup':>9}")
    for name, t_jit, t_py in rows:
        print(f"{name.ljust(width)}{t_jit:>9.3f}s{t_py:>9.3f}s{t_py / t_jit:>8.1f}x")


if __name__ == "__main__":
    main()
