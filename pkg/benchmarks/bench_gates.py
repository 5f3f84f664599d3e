"""Benchmark the numba gate kernels against the pure-numpy fallback.

Times each kernel on a few register shapes and prints a table with the
speedup of numba over numpy, then times a full sweep of the symmetric-graph
verification as an end-to-end sample. JIT compilation happens during warmup
and is excluded from the timings.

    python benchmarks/bench_gates.py            # full sizes
    python benchmarks/bench_gates.py --quick    # smaller registers
"""

import argparse
import time

import numpy as np

from graphsym import backend, fourier_matrix
from graphsym.verify import run_theorem1

FULL_SHAPES = [(20, 2), (13, 3), (9, 5)]
QUICK_SHAPES = [(14, 2), (9, 3), (6, 5)]


def _random_amps(rng, size):
    amps = rng.normal(size=size) + 1j * rng.normal(size=size)
    return np.ascontiguousarray(amps / np.linalg.norm(amps))


def _timed(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _kernel_calls(kern, amps, n, d):
    hmat = fourier_matrix(d)
    calls = {
        "shift": lambda: kern.shift(amps, n, d, n // 2),
        "gr": lambda: kern.gr(amps, n, d, 0, n - 1),
        "permute": lambda: kern.permute(
            amps, n, d, np.roll(np.arange(n, dtype=np.int64), 1)
        ),
        "hadamard": lambda: kern.hadamard(amps, n, d, n // 2, hmat),
    }
    if d == 2:
        calls["cz"] = lambda: kern.cz(amps, n, d, 0, 1)
    return calls


def bench_kernels(shapes, repeats):
    rng = np.random.default_rng(0)
    numpy_k = backend._load("numpy")
    numba_k = backend._load("numba")
    print(f"{'kernel':<10} {'shape':<12} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for n, d in shapes:
        amps = _random_amps(rng, d**n)
        np_calls = _kernel_calls(numpy_k, amps, n, d)
        nb_calls = _kernel_calls(numba_k, amps, n, d)
        for name in np_calls:
            nb_calls[name]()  # compile before timing
            t_np = _timed(np_calls[name], repeats)
            t_nb = _timed(nb_calls[name], repeats)
            print(
                f"{name:<10} {f'{d}^{n}':<12} {t_np * 1e3:>10.3f} "
                f"{t_nb * 1e3:>10.3f} {t_np / t_nb:>8.2f}x"
            )


def bench_sweep(repeats):
    print("\nend-to-end: symmetric-graph sweep over all 5-vertex graphs")
    for choice in ("numpy", "numba"):
        backend.set_backend(choice)
        run_theorem1(5)  # warm up
        best = _timed(lambda: run_theorem1(5), repeats)
        print(f"  {choice:<6} {best * 1e3:>10.1f} ms")
    backend.set_backend("auto")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="use smaller registers")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    bench_kernels(QUICK_SHAPES if args.quick else FULL_SHAPES, args.repeats)
    bench_sweep(max(2, args.repeats // 2))


if __name__ == "__main__":
    main()
