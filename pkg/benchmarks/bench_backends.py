"""Compare the compiled repetition kernels against the pure-Python fallback.

Run:  python3 benchmarks/bench_backends.py [--sizes 512,2048,8192]

Workloads mirror the hot paths: full scans of paperfolding prefixes
(first_repetition per odd-difference class), incremental search extension
(clean_after_append on growing prefixes), and the quadratic exponent scan.
"""

import argparse
import time

from apavoid import _kernels_py as pure
from apavoid.words import FoldingSequence, paperfolding_prefix

try:
    from apavoid import _speedups as compiled
except ImportError:
    compiled = None


def _time(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def scan_odd_diffs(impl, s):
    n = len(s)
    for j in range(1, min(n, 64), 2):
        for start in range(j):
            impl.first_repetition(s[start::j], 2, 1, False, 1)


def incremental_extend(impl, s):
    for i in range(1, len(s) + 1):
        impl.clean_after_append(s[:i], 3, 1, True, 1)


def exponent_scan(impl, s):
    impl.max_exponent_pair(s)


WORKLOADS = [
    ("odd-diff scan, threshold 2", scan_odd_diffs),
    ("incremental extend, threshold 3+", incremental_extend),
    ("max exponent scan", exponent_scan),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="512,2048,8192",
                        help="comma-separated prefix lengths")
    args = parser.parse_args()
    sizes = [int(x) for x in args.sizes.split(",")]

    if compiled is None:
        print("compiled extension not available; showing pure timings only")

    for n in sizes:
        s = paperfolding_prefix(FoldingSequence.ordinary(), n).symbols
        print(f"\nprefix length {n}")
        for name, fn in WORKLOADS:
            if name == "incremental extend, threshold 3+" and n > 4096:
                s_inc = s[:4096]
            else:
                s_inc = s
            t_pure = _time(fn, pure, s_inc)
            if compiled is not None:
                t_comp = _time(fn, compiled, s_inc)
                ratio = t_pure / t_comp if t_comp else float("inf")
                print(f"  {name:36s} pure {t_pure*1e3:9.2f} ms   "
                      f"compiled {t_comp*1e3:9.2f} ms   x{ratio:.1f}")
            else:
                print(f"  {name:36s} pure {t_pure*1e3:9.2f} ms")


if __name__ == "__main__":
    main()
