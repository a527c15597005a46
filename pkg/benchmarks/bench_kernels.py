"""Compare the compiled kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 200]

Reports per-call time of the power scan used by ``analyze`` for a few
matrix sizes, then the end-to-end round trip over all feasible triples
with n <= 10 under each backend (run in a subprocess so the backend
choice made at import applies).
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from ppindex import _kernels_py
from ppindex.testing import random_matrix

try:
    from ppindex import _kernels
except ImportError:
    _kernels = None

ROUND_TRIP = """
import time
from ppindex import BACKEND, analyze, feasible_pairs, synthesize
t = time.perf_counter()
for _ in range({reps}):
    for n in range(1, 11):
        for j, k in sorted(feasible_pairs(n)):
            analyze(synthesize(j, k, n)[0])
print(BACKEND, (time.perf_counter() - t) / {reps})
"""


def scan_times(n, repeat, rng):
    A = random_matrix(n, rng)
    L = n + 1
    out = {"python": min(timeit.repeat(lambda: _kernels_py.power_gram_residuals(A, L), number=repeat, repeat=3))}
    if _kernels is not None:
        ref = _kernels_py.power_gram_residuals(A, L)
        got = _kernels.power_gram_residuals(A, L)
        assert np.allclose(ref, got, atol=1e-12), (ref, got)
        out["cython"] = min(timeit.repeat(lambda: _kernels.power_gram_residuals(A, L), number=repeat, repeat=3))
    return {k: v / repeat for k, v in out.items()}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=200)
    ap.add_argument("--round-trip-reps", type=int, default=3)
    args = ap.parse_args()
    rng = np.random.default_rng(0)

    print("power scan (A^1 .. A^(n+1) Gram projection residuals), seconds per call")
    print(f"{'n':>4} {'python':>12} {'cython':>12} {'speedup':>8}")
    for n in (2, 4, 6, 8, 12, 20, 40):
        t = scan_times(n, args.repeat, rng)
        cy = t.get("cython")
        sp = f"{t['python'] / cy:8.1f}" if cy else "     n/a"
        print(f"{n:>4} {t['python']:12.3e} {cy if cy else float('nan'):12.3e} {sp}")

    print("\nround trip over all feasible triples, n <= 10, seconds per pass")
    for pure in ("1", "0"):
        env = dict(os.environ, PPINDEX_PURE_PYTHON=pure)
        code = ROUND_TRIP.format(reps=args.round_trip_reps)
        res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        print("  " + res.stdout.strip())


if __name__ == "__main__":
    main()
