#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Times the three hot per-pixel operations on random inputs and prints a table
of per-call milliseconds (best of N) plus the native speedup. Run from the
repository root:

    python benchmarks/bench_backends.py [--size 1024] [--repeats 7]
"""

import argparse
import time

import numpy as np

from hueseg.backend import available_backends


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best * 1000.0


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=1024, help="square image side (default: 1024)")
    parser.add_argument("--repeats", type=int, default=7, help="timing repeats (default: 7)")
    args = parser.parse_args()

    backends = available_backends()
    rng = np.random.default_rng(0)
    n = args.size
    rgb = rng.integers(0, 256, size=(n, n, 3), dtype=np.uint8)
    bins = rng.integers(0, 256, size=(n, n), dtype=np.uint8)
    achromatic = rng.integers(0, 16, size=(n, n)) == 0
    lut = np.zeros(256, dtype=bool)
    lut[rng.integers(0, 256, size=4)] = True
    mask = rng.integers(0, 2, size=(n, n)).astype(bool)

    cases = {
        "hue_field": lambda impl: impl.hue_field_kernel(rgb),
        "classify": lambda impl: impl.classify_kernel(bins, achromatic, lut, False),
        "median_3x3": lambda impl: impl.majority_filter_kernel(mask, 3, 1),
        "median_5x5_x2": lambda impl: impl.majority_filter_kernel(mask, 5, 2),
    }

    # correctness cross-check before timing
    if len(backends) == 2:
        for name, case in cases.items():
            ref = case(backends["python"])
            got = case(backends["native"])
            if isinstance(ref, tuple):
                ok = all(np.array_equal(a, b) for a, b in zip(ref, got))
            else:
                ok = np.array_equal(ref, got)
            if not ok:
                raise SystemExit(f"backend outputs disagree for {name}")

    print(f"image: {n}x{n}, repeats: {args.repeats}, backends: {', '.join(sorted(backends))}")
    header = f"{'kernel':<14}" + "".join(f"{b + ' (ms)':>14}" for b in sorted(backends))
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name, case in cases.items():
        times = {b: best_of(lambda: case(impl), args.repeats) for b, impl in backends.items()}
        row = f"{name:<14}" + "".join(f"{times[b]:>14.2f}" for b in sorted(backends))
        if len(backends) == 2:
            row += f"{times['python'] / times['native']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
