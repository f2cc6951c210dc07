"""Compare the NumPy and compiled kernel backends.

Run from the repository root:

    python3 benchmarks/bench_kernels.py

Times the fractional-integral transform at several grid sizes and the
Jacobi eigensolver at several matrix sizes, once per backend.
"""

import time

import numpy as np

from fracsl._kernels import _load_compiled, _load_numpy


def _time(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_transforms(impls):
    print(f"{'transform':<18}{'n':>8}" +
          "".join(f"{name:>14}" for name in impls))
    for n in (1024, 4096, 16384):
        rng = np.random.default_rng(n)
        f = rng.standard_normal(n + 1)
        h = 1.0 / n
        for op in ("fracint_left", "caputo_left_l1"):
            row = f"{op:<18}{n:>8}"
            for impl in impls.values():
                seconds = _time(lambda: impl[op](f, 0.75, h))
                row += f"{seconds * 1e3:>12.2f}ms"
            print(row)


def bench_eigh(impls):
    print(f"{'eigensolver':<18}{'m':>8}" +
          "".join(f"{name:>14}" for name in impls))
    for m in (32, 64, 128):
        rng = np.random.default_rng(m)
        raw = rng.standard_normal((m, m))
        matrix = 0.5 * (raw + raw.T)
        row = f"{'jacobi':<18}{m:>8}"
        for impl in impls.values():
            seconds = _time(lambda: impl["eigh_symmetric"](matrix))
            row += f"{seconds * 1e3:>12.2f}ms"
        print(row)


def main():
    impls = {"numpy": _load_numpy()}
    try:
        impls["compiled"] = _load_compiled()
    except ImportError:
        print("compiled backend not built; timing numpy only")
    bench_transforms(impls)
    print()
    bench_eigh(impls)


if __name__ == "__main__":
    main()
