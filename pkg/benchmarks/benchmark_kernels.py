#!/usr/bin/env python3
"""Compare the interpreted and numba-compiled enumeration kernels.

Usage:
    python benchmarks/benchmark_kernels.py [--repeat N]

Each kernel runs on a workload large enough to dominate call overhead:
pruned counting of two nontrivial classes, pruned listing of a mid-size
class, and a full oracle scan.  The compiled variant is warmed once so
compilation time is reported separately from steady-state runtime.
"""
from __future__ import annotations

import argparse
import time

from ballotkit._kernels import (
    NUMBA_ENABLED,
    oracle_fill_jit,
    oracle_fill_py,
    pruned_count_jit,
    pruned_count_py,
    pruned_fill_jit,
    pruned_fill_py,
)
from ballotkit.enumeration import _mask3
from ballotkit.patterns import parse_pattern_set

CASES = [
    ("pruned_count {321} n=11", "count", "321", 11),
    ("pruned_count {231,312,321} n=18", "count", "231,312,321", 18),
    ("pruned_fill {132} n=10", "fill", "132", 10),
    ("oracle_fill {132,213} n=9", "oracle", "132,213", 9),
]


def _run(kind, fn, mask, n):
    if kind == "count":
        return fn(n, mask, True)
    return fn(n, mask, True, 0)


def _time(kind, fn, mask, n, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = _run(kind, fn, mask, n)
        best = min(best, time.perf_counter() - t0)
    size = int(result) if kind == "count" else len(result)
    return best, size


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if not NUMBA_ENABLED:
        print("numba backend unavailable (missing or disabled via BALLOTKIT_NUMBA); "
              "only the interpreted path can be timed")

    print(f"{'case':<36} {'python':>10} {'numba':>10} {'speedup':>9}  result")
    for label, kind, class_text, n in CASES:
        mask = _mask3(parse_pattern_set(class_text))
        py_fn = {"count": pruned_count_py, "fill": pruned_fill_py, "oracle": oracle_fill_py}[kind]
        py_time, size = _time(kind, py_fn, mask, n, args.repeat)
        if NUMBA_ENABLED:
            jit_fn = {"count": pruned_count_jit, "fill": pruned_fill_jit,
                      "oracle": oracle_fill_jit}[kind]
            t0 = time.perf_counter()
            _run(kind, jit_fn, mask, n)  # warm: includes compilation
            warm = time.perf_counter() - t0
            jit_time, jit_size = _time(kind, jit_fn, mask, n, args.repeat)
            assert jit_size == size, f"backend mismatch in {label}"
            print(f"{label:<36} {py_time:>9.3f}s {jit_time:>9.4f}s {py_time / jit_time:>8.1f}x"
                  f"  {size} (first numba call {warm:.2f}s)")
        else:
            print(f"{label:<36} {py_time:>9.3f}s {'-':>10} {'-':>9}  {size}")


if __name__ == "__main__":
    main()
