"""Compare the compiled modular-arithmetic kernels against the pure-numpy
fallback.

The backend is chosen at import time from HOPFBRACE_PURE, so this script
re-runs itself in a subprocess with the flag set and reports both timings
side by side.

Usage: python3 benchmarks/bench_kernels.py [--sizes 64,128,256] [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

PRIME = 2147483629  # largest prime below 2^31, stresses the reduction path


def run_benchmarks(sizes, repeat):
    from hopfbrace.kernels import backend, matmul_mod, rref_mod

    rng = np.random.default_rng(20240901)
    results = {"backend": backend(), "matmul": {}, "rref": {}}
    for n in sizes:
        a = rng.integers(0, PRIME, size=(n, n), dtype=np.int64)
        b = rng.integers(0, PRIME, size=(n, n), dtype=np.int64)
        best = min(
            _timed(lambda: matmul_mod(a, b, PRIME)) for _ in range(repeat)
        )
        results["matmul"][n] = best
        # low-rank matrix keeps the elimination non-trivial
        u = rng.integers(0, PRIME, size=(n, n // 2), dtype=np.int64)
        v = rng.integers(0, PRIME, size=(n // 2, n), dtype=np.int64)
        m = matmul_mod(u, v, PRIME)
        best = min(_timed(lambda: rref_mod(m, PRIME)) for _ in range(repeat))
        results["rref"][n] = best
    return results


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="64,128,256")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--emit-json", action="store_true",
                        help="print raw results as JSON (used by the subprocess)")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    results = run_benchmarks(sizes, args.repeat)
    if args.emit_json:
        print(json.dumps(results))
        return

    if results["backend"] == "compiled":
        env = dict(os.environ, HOPFBRACE_PURE="1")
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--sizes", args.sizes,
             "--repeat", str(args.repeat), "--emit-json"],
            env=env, capture_output=True, text=True, check=True,
        )
        other = json.loads(proc.stdout)
        compiled, pure = results, other
    else:
        print("compiled backend unavailable; showing pure-numpy timings only")
        compiled, pure = None, results

    print(f"modulus p = {PRIME}")
    header = f"{'kernel':<10} {'n':>5} {'pure (s)':>12}"
    if compiled:
        header += f" {'compiled (s)':>14} {'speedup':>9}"
    print(header)
    for kernel in ("matmul", "rref"):
        for n in sizes:
            tp = pure[kernel][str(n)] if isinstance(next(iter(pure[kernel])), str) else pure[kernel][n]
            line = f"{kernel:<10} {n:>5} {tp:>12.4f}"
            if compiled:
                tc = compiled[kernel][n]
                line += f" {tc:>14.4f} {tp / tc:>8.1f}x"
            print(line)


if __name__ == "__main__":
    main()
