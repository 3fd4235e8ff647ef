"""Benchmark the compiled kernels against the pure-numpy fallbacks.

Runs the hot sweep kernels on the divisor lattice of a highly composite n
(60 divisors by default) and reports best-of-k wall times per backend.

    python benchmarks/bench_kernels.py [--n 5040] [--repeat 5]

The same comparison is available implicitly by running anything under
LATMOD_PURE_NUMPY=1.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from latmod import _kernels_np
from latmod.generators import gen_zn

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False


def best_of(fn, args, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=5040, help="modulus for the divisor lattice")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    bundle = gen_zn(args.n)
    ml = bundle.scalars
    mod = bundle.module
    lat = ml.lat
    car = mod.carrier
    print(f"instance zn({args.n}): |L| = {len(ml)}")

    cases = [
        ("residual_scalar_table", (lat.leq, lat.join, ml.mul, lat.bottom)),
        ("radical_vec", (lat.leq, lat.join, ml.powcap, lat.bottom)),
        ("principal_scalar_flags", (lat.meet, lat.join, ml.mul, ml.res)),
        ("scalar_classification_flags", (lat.leq, ml.mul, ml.rad, ml.powcap, lat.top)),
        ("residual_mm_table", (car.leq, lat.join, mod.action, lat.bottom)),
        (
            "module_2abs_flags",
            (lat.leq, car.leq, ml.mul, mod.action, mod.colon_im, mod.rad_i, car.top),
        ),
        (
            "delta_primary_flags",
            (car.leq, mod.action, mod.ai, mod.rad_i.astype(np.int64), car.top),
        ),
    ]

    if not HAS_NUMBA:
        print("numba not installed: timing the numpy fallback only")

    header = f"{'kernel':34}{'numpy (ms)':>12}"
    if HAS_NUMBA:
        header += f"{'numba (ms)':>12}{'speedup':>9}"
    print(header)
    for name, call_args in cases:
        np_time, np_result = best_of(getattr(_kernels_np, name), call_args, args.repeat)
        line = f"{name:34}{np_time * 1e3:12.2f}"
        if HAS_NUMBA:
            from latmod import _kernels_nb

            compiled = njit(cache=True)(getattr(_kernels_nb, name))
            compiled(*call_args)  # compile outside the timed region
            nb_time, nb_result = best_of(compiled, call_args, args.repeat)
            np.testing.assert_array_equal(nb_result, np_result, err_msg=name)
            line += f"{nb_time * 1e3:12.2f}{np_time / nb_time:9.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
