#!/usr/bin/env python3
"""Time the numba kernels against their numpy fallbacks.

Numba is warmed up once per kernel so compilation is excluded.  Results are
checked for equality before timing.

    python benchmarks/bench_kernels.py [--repeat 5] [--json out.json]
"""
from __future__ import annotations

import argparse
import json
import time

import numpy as np

from wreathfoulkes import _kernels
from wreathfoulkes.tensor import basis_colors, parity_vector
from wreathfoulkes.wreath import class_representative, classes


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    for r, n in [(2, 6), (3, 5), (2, 7)]:
        images, colors = _kernels.group_arrays(r, n)
        yield f"descents W({r},{n})", lambda b, i=images, c=colors: _kernels.descent_numbers(i, c, b)
        yield f"color-0 cycles W({r},{n})", lambda b, i=images, c=colors, r=r: _kernels.color0_cycle_counts(i, c, r, b)
    for r, n, k in [(2, 4, 2), (2, 6, 2), (3, 5, 2)]:
        w = class_representative(classes(r, n)[len(classes(r, n)) // 2])
        args = (np.array(w.images), np.array(w.colors), np.array(basis_colors(r, k)),
                np.array(parity_vector(r, "odd")), r)
        yield f"tensor trace W({r},{n}) k={k}", lambda b, a=args: _kernels.tensor_trace_counts(*a, backend=b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", help="also write results here")
    args = ap.parse_args()

    if not _kernels.HAVE_NUMBA:
        print("numba unavailable (or disabled by WREATHFOULKES_DISABLE_NUMBA); nothing to compare")
        return

    rows = []
    print(f"{'kernel':32s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}")
    for name, fn in cases():
        assert np.array_equal(fn("numpy"), fn("numba")), name
        t_np = best_of(lambda: fn("numpy"), args.repeat)
        t_nb = best_of(lambda: fn("numba"), args.repeat)
        rows.append({"kernel": name, "numpy_s": t_np, "numba_s": t_nb, "speedup": t_np / t_nb})
        print(f"{name:32s} {1e3 * t_np:10.3f} {1e3 * t_nb:10.3f} {t_np / t_nb:8.1f}x")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
