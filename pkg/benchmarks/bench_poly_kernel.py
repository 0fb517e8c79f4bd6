#!/usr/bin/env python3
"""Compare the compiled and pure-Python polynomial kernels.

The dominant cost in btlab is building the Witt ring laws (exact
multivariate polynomial multiply-accumulate with big integer
coefficients), so that is what we time: a cold ``sum_polynomials(p, n)``
in a fresh interpreter per run, once with the compiled kernel and once
with BTLAB_PURE_PYTHON=1.

Usage: python benchmarks/bench_poly_kernel.py [--p 5] [--n 4] [--repeat 3]
"""

import argparse
import os
import statistics
import subprocess
import sys

SNIPPET = """
import time
from btlab.polynomials import KERNEL_NAME
from btlab.witt import sum_polynomials
t0 = time.perf_counter()
polys = sum_polynomials({p}, {n})
dt = time.perf_counter() - t0
print(KERNEL_NAME, dt, len(polys[-1]))
"""


def run_once(p, n, pure):
    env = dict(os.environ)
    if pure:
        env["BTLAB_PURE_PYTHON"] = "1"
    else:
        env.pop("BTLAB_PURE_PYTHON", None)
    out = subprocess.run(
        [sys.executable, "-c", SNIPPET.format(p=p, n=n)],
        env=env,
        check=True,
        capture_output=True,
        text=True,
    ).stdout.split()
    return out[0], float(out[1]), int(out[2])


def bench_kernels_in_process(p, n, repeat):
    """Time one heavy multiply with each kernel module directly."""
    import time

    from btlab import _poly_kernel_py as pure

    try:
        from btlab import _poly_kernel as compiled
    except ImportError:
        print("kernel-only comparison skipped: compiled kernel not available")
        return
    from btlab.witt import sum_polynomials

    top = sum_polynomials(p, max(n - 1, 2))[-1].terms
    square = compiled.mul(top, top)
    big = compiled.mul(square, square)
    print(
        f"kernel-only multiply ({len(big)} x {len(top)} terms, best of {repeat}):"
    )
    for name, mul in (("cython", compiled.mul), ("python", pure.mul)):
        mul(big, top)
        times = []
        for _ in range(repeat):
            t0 = time.perf_counter()
            mul(big, top)
            times.append(time.perf_counter() - t0)
        print(f"  {name:>7}: {min(times) * 1000:.1f} ms")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    print(f"building S_0..S_{args.n - 1} for p={args.p} (cold, fresh process each run)")
    results = {}
    for pure in (False, True):
        times = []
        for _ in range(args.repeat):
            kernel, dt, terms = run_once(args.p, args.n, pure)
            times.append(dt)
        results[kernel] = (min(times), statistics.median(times), terms)
        print(
            f"  {kernel:>7}: min {min(times):.3f}s  median {statistics.median(times):.3f}s"
            f"  (top polynomial: {terms} terms)"
        )
    if "cython" in results and "python" in results:
        speedup = results["python"][0] / results["cython"][0]
        print(f"compiled kernel end-to-end speedup: {speedup:.2f}x")
    elif "cython" not in results:
        print("compiled kernel not available; both runs used the pure kernel")
    bench_kernels_in_process(args.p, args.n, args.repeat)


if __name__ == "__main__":
    main()
