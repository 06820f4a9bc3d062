"""Times the compiled kernels against the pure numpy fallbacks.

Run from the repository root after installing the package:

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each kernel is timed on representative workloads; the report shows the
best wall time per backend and the speedup. Absent a compiled build the
script says so and exits.
"""

import argparse
import string
import time

import numpy as np

from stylebreach._kernels import _pure

try:
    from stylebreach._kernels import _fast
except ImportError:
    _fast = None


def time_call(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def split_dense_case(rng, n):
    values = rng.normal(size=n)
    y = rng.integers(0, 2, n).astype(np.float64)
    w = rng.uniform(0.5, 1.5, n)
    return values, y, w, 5


def histogram_case(rng, n, d, n_bins):
    binned = rng.integers(0, n_bins, (n, d)).astype(np.int32)
    grad = rng.normal(size=n)
    hess = rng.uniform(0.01, 0.3, n)
    rows = np.arange(n, dtype=np.int64)
    return binned, grad, hess, rows, n_bins


def split_hist_case(rng, d, n_bins):
    hist = np.zeros((d, n_bins, 3))
    hist[:, :, 0] = rng.normal(size=(d, n_bins))
    hist[:, :, 1] = rng.uniform(0.01, 1.0, (d, n_bins))
    hist[:, :, 2] = rng.integers(1, 50, (d, n_bins))
    return hist, np.arange(d), 1.0, 1.0, 20


def edit_distance_case(rng, length):
    letters = list(string.ascii_lowercase)
    a = "".join(rng.choice(letters, size=length))
    b = "".join(rng.choice(letters, size=length))
    return a, b


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5,
                        help="timing repetitions, best is kept (default 5)")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if _fast is None:
        print("compiled extension not available; nothing to compare")
        return 1

    rng = np.random.default_rng(args.seed)
    cases = [
        ("best_split_dense n=20000", "best_split_dense",
         split_dense_case(rng, 20000)),
        ("build_histograms 20000x40", "build_histograms",
         histogram_case(rng, 20000, 40, 64)),
        ("best_split_hist 200 feats", "best_split_hist",
         split_hist_case(rng, 200, 64)),
        ("damerau_levenshtein 400ch", "damerau_levenshtein",
         edit_distance_case(rng, 400)),
    ]

    rows = []
    for label, name, case_args in cases:
        pure_fn = getattr(_pure, name)
        fast_fn = getattr(_fast, name)
        t_pure = time_call(pure_fn, case_args, args.repeat)
        t_fast = time_call(fast_fn, case_args, args.repeat)
        rows.append((label, t_pure, t_fast, t_pure / t_fast))

    width = max(len(r[0]) for r in rows)
    print(f"{'case'.ljust(width)}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}")
    print(f"{'-' * width}  {'-' * 10}  {'-' * 10}  {'-' * 8}")
    for label, t_pure, t_fast, ratio in rows:
        print(f"{label.ljust(width)}  {t_pure * 1e3:>8.2f}ms  "
              f"{t_fast * 1e3:>8.2f}ms  {ratio:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
