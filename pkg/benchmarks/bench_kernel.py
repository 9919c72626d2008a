"""Benchmark: compiled transfer-step kernel vs the pure-Python fallback.

Runs the DP oracle over representative workloads with each kernel and
prints a comparison table.  Results are exact either way; only wall-clock
time differs.

Usage: python benchmarks/bench_kernel.py [--repeat N]
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from filterpaths import _kernel_py  # noqa: E402
from filterpaths.model import LEFT, RIGHT, canonical_arrangement, step_rules  # noqa: E402

try:
    from filterpaths import _kernel  # type: ignore[attr-defined]
except ImportError:
    _kernel = None


def run_dp(advance_row, start_x: int, n_rows: int, arr) -> int:
    lo = start_x - n_rows
    width = 2 * n_rows + 1
    rules = step_rules(arr)
    wr = bytes(rules.get((lo + i, RIGHT), 1) for i in range(width))
    wl = bytes(rules.get((lo + i, LEFT), 1) for i in range(width))
    row = [0] * width
    row[start_x - lo] = 1
    for _ in range(n_rows):
        row = advance_row(row, wr, wl)
    return sum(row)


def timed(advance_row, workloads, repeat: int) -> tuple[float, int]:
    best = float("inf")
    checksum = 0
    for _ in range(repeat):
        t0 = time.perf_counter()
        checksum = 0
        for start_x, n_rows, arr in workloads:
            checksum += run_dp(advance_row, start_x, n_rows, arr)
        best = min(best, time.perf_counter() - t0)
    return best, checksum


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    workloads = []
    for l in (2, 3, 4, 5):
        for n_rows in (48, 96, 192):
            workloads.append((0, n_rows, canonical_arrangement(l, n_rows)))

    py_time, py_sum = timed(_kernel_py.advance_row, workloads, args.repeat)
    print(f"pure-python kernel: {py_time * 1e3:8.1f} ms  (row-sum checksum {py_sum})")
    if _kernel is None:
        print("compiled kernel:   not built (run `python setup.py build_ext --inplace`)")
        return 0
    cy_time, cy_sum = timed(_kernel.advance_row, workloads, args.repeat)
    print(f"compiled kernel:    {cy_time * 1e3:8.1f} ms  (row-sum checksum {cy_sum})")
    if cy_sum != py_sum:
        print("CHECKSUM MISMATCH between kernels")
        return 1
    print(f"speedup: {py_time / cy_time:.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
