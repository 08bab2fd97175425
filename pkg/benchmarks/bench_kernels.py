"""Benchmark the Jacobi eigensolver backends.

Times the compiled extension against the pure-Python fallback (and
numpy.linalg.eigh as a reference point) on random symmetric matrices
and on normalized Laplacians of random connected graphs.

Usage:
    python benchmarks/bench_kernels.py [--sizes 20 40 80] [--repeats 5]
"""

import argparse
import statistics
import sys
import time

import numpy as np

from eigenmotif import _kernels_py
from eigenmotif.families import random_connected
from eigenmotif.spectral import normalized_laplacian

try:
    from eigenmotif import _kernels
except ImportError:
    _kernels = None


def time_solver(solver, matrices, repeats):
    best = []
    for m in matrices:
        runs = []
        for _ in range(repeats):
            start = time.perf_counter()
            solver(m)
            runs.append(time.perf_counter() - start)
        best.append(min(runs))
    return statistics.median(best)


def matrices_for(n, count=3):
    rng = np.random.default_rng(n)
    dense = [(lambda a: (a + a.T) / 2)(rng.standard_normal((n, n)))
             for _ in range(count)]
    laps = [normalized_laplacian(random_connected(n, 0.4, seed=int(s)))
            for s in rng.integers(0, 2 ** 31, size=count)]
    return dense + laps


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[20, 40, 80])
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args(argv)

    if _kernels is None:
        print("compiled extension not built; timing the fallback only",
              file=sys.stderr)

    header = f"{'n':>5} {'python (ms)':>14} {'compiled (ms)':>14} " \
             f"{'speedup':>8} {'lapack (ms)':>12}"
    print(header)
    print("-" * len(header))
    for n in args.sizes:
        mats = matrices_for(n)
        t_py = time_solver(_kernels_py.jacobi_eigh, mats, args.repeats)
        t_np = time_solver(np.linalg.eigh, mats, args.repeats)
        if _kernels is not None:
            t_c = time_solver(_kernels.jacobi_eigh, mats, args.repeats)
            print(f"{n:>5} {t_py * 1e3:>14.3f} {t_c * 1e3:>14.3f} "
                  f"{t_py / t_c:>7.1f}x {t_np * 1e3:>12.3f}")
        else:
            print(f"{n:>5} {t_py * 1e3:>14.3f} {'-':>14} {'-':>8} "
                  f"{t_np * 1e3:>12.3f}")

    # sanity: both backends agree on one matrix
    probe = matrices_for(16)[0]
    vals_py, _ = _kernels_py.jacobi_eigh(probe)
    if _kernels is not None:
        vals_c, _ = _kernels.jacobi_eigh(probe)
        drift = np.abs(vals_py - vals_c).max()
        print(f"\nbackend agreement on a 16x16 probe: max |diff| = {drift:.3g}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
