"""Timing comparison of the special-function backends.

Runs the Bessel-K0 and Airy-Ai evaluators over a range of array sizes with
both the compiled (numba) backend and the pure-numpy fallback, and prints a
small table of median times plus the speedup ratio.

Usage: python benchmarks/bench_specfun.py [--sizes 100,10000,1000000]
"""

import argparse
import statistics
import time

import numpy as np

from modewake import _backend, specfun


def time_call(fn, x, repeats=7):
    fn(x)  # warm-up (triggers JIT compilation on the numba path)
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(x)
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def bench(sizes):
    rng = np.random.default_rng(0)
    rows = []
    for size in sizes:
        xk = rng.uniform(1e-3, 40.0, size)
        xa = rng.uniform(-30.0, 30.0, size)
        for name, x, numpy_fn, numba_fn in (
            ("K0", xk, specfun.k0_numpy, "k0_arr"),
            ("Ai", xa, specfun.ai_numpy, "ai_arr"),
        ):
            t_numpy = time_call(numpy_fn, x)
            if _backend.NUMBA_ENABLED:
                from modewake import _specfun_numba

                t_numba = time_call(getattr(_specfun_numba, numba_fn), x)
            else:
                t_numba = float("nan")
            rows.append((name, size, t_numpy, t_numba))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes",
        default="100,10000,1000000",
        help="comma-separated array sizes",
    )
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if not _backend.NUMBA_ENABLED:
        print("numba backend inactive (not installed or disabled via "
              "MODEWAKE_DISABLE_NUMBA); reporting numpy times only\n")

    print(f"{'fn':<4} {'n':>9} {'numpy [ms]':>12} {'numba [ms]':>12} {'speedup':>9}")
    for name, size, t_numpy, t_numba in bench(sizes):
        ratio = t_numpy / t_numba if t_numba == t_numba else float("nan")
        print(
            f"{name:<4} {size:>9} {1e3 * t_numpy:>12.3f} "
            f"{1e3 * t_numba:>12.3f} {ratio:>8.1f}x"
        )


if __name__ == "__main__":
    main()
