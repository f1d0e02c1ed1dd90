"""Compare the numba and numpy kernel backends on the grid sweeps.

Usage: python benchmarks/bench_kernels.py [--size 300] [--repeat 3]

Compilation is triggered once before timing, so numba figures are
steady-state.  Each row also checks that both backends agree.
"""
import argparse
import time

import numpy as np

from tamemdeg.kernels import get_backend


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=300, help="a_max = d_max for every grid")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    n = args.size

    np_k = get_backend("numpy")
    try:
        jit_k = get_backend("numba")
    except ImportError:
        jit_k = None
        print("numba not importable; timing numpy only")

    cases = {
        "lemma31_grid": lambda k: k.lemma31_grid(n, n),
        "ap_exclusion_grid": lambda k: k.ap_exclusion_grid(n, n, 2, False),
        "type3_ap_grid": lambda k: k.type3_ap_grid(n, n),
    }
    if jit_k is not None:
        for fn in cases.values():
            fn(jit_k)  # compile

    print(f"{'kernel':<20}{'numpy [s]':>12}{'numba [s]':>12}{'speedup':>10}  agree")
    for name, fn in cases.items():
        t_np, r_np = _best(lambda: fn(np_k), args.repeat)
        if jit_k is None:
            print(f"{name:<20}{t_np:>12.4f}{'-':>12}{'-':>10}  -")
            continue
        t_jit, r_jit = _best(lambda: fn(jit_k), args.repeat)
        agree = np.array_equal(np.asarray(r_np), np.asarray(r_jit))
        print(f"{name:<20}{t_np:>12.4f}{t_jit:>12.4f}{t_np / t_jit:>9.1f}x  {agree}")


if __name__ == "__main__":
    main()
