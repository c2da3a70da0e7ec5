#!/usr/bin/env python3
"""Benchmark the hot quadrature kernels: numba @njit vs pure numpy.

The kernels dominate the runtime of the propagator oracles and the
``--oracle`` CLI grids.  This script times both backends on representative
workloads and prints a comparison table; run it after any kernel change.

    python3 benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import time

import numpy as np

from evanesce import _kernels
from evanesce.quadrature import panel_nodes


def timeit(fn, args, repeats):
    fn(*args)  # warm (JIT compile on the numba path)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    # damped radial sum at the least-damped extrapolation step of a typical
    # oracle call: eps ~ 3e-3, p_max ~ 9000, dense oscillation panels
    p, w = panel_nodes(0.0, 9000.0, 12000, order=16)
    yield "damped_radial_3d", (p, w, 6.0, 2.4, 1.0, 3.125e-3)
    yield "damped_radial_1d", (p, w, 6.0, 2.4, 1.0, 3.125e-3)
    u, uw = panel_nodes(0.0, np.pi / 2, 2048, order=16)
    yield "evanescent_kappa", (u, uw, 12.0, 3.0, 1.0)
    wn, ww = panel_nodes(0.0, 7.0, 4096, order=16)
    yield "rotated_hankel", (wn * wn, 2.0 * wn * ww, 1.0)
    th, tw = panel_nodes(0.0, np.pi, 4096, order=16)
    yield "i1_theta", (th, tw, 10.0)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=7)
    args = ap.parse_args()

    np_impl = _kernels.numpy_impl()
    nb_impl = _kernels.numba_impl()
    if nb_impl is None:
        print("numba unavailable: timing the numpy path only")

    header = f"{'kernel':<20} {'nodes':>8} {'numpy [ms]':>12} {'numba [ms]':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, wargs in workloads():
        n = len(wargs[0])
        t_np = timeit(np_impl[name], wargs, args.repeats) * 1e3
        if nb_impl is not None:
            t_nb = timeit(nb_impl[name], wargs, args.repeats) * 1e3
            ratio = f"{t_np / t_nb:7.2f}x"
            print(f"{name:<20} {n:>8} {t_np:>12.3f} {t_nb:>12.3f} {ratio:>8}")
        else:
            print(f"{name:<20} {n:>8} {t_np:>12.3f} {'-':>12} {'-':>8}")

    # cross-check: both paths agree to roundoff
    if nb_impl is not None:
        worst = 0.0
        for name, wargs in workloads():
            a, b = np_impl[name](*wargs), nb_impl[name](*wargs)
            worst = max(worst, abs(a - b) / max(abs(a), 1e-300))
        print(f"\nbackend agreement: max rel deviation {worst:.2e}")


if __name__ == "__main__":
    main()
