"""Measure that evaluating the skein polynomial scales linearly in word length.

The probe words repeat a block with trivial net effect so the basis vector
stays bounded; what is measured is the per-letter cost of the fold itself,
not the growth of the output polynomial.

Usage:  python scripts/benchmark_fold.py
"""

import sys
import time

from braid3.hecke import homfly

BLOCK = (1, 2, -2, -1)


def best_time(length: int, repeats: int = 5) -> float:
    word = BLOCK * (length // len(BLOCK))
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        homfly(word)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    homfly(BLOCK * 64)  # warm up
    lengths = [1_000, 10_000, 100_000]
    times = [best_time(n) for n in lengths]
    print(f"{'length':>8} {'seconds':>10} {'us/letter':>10}")
    for n, t in zip(lengths, times):
        print(f"{n:>8} {t:>10.4f} {1e6 * t / n:>10.2f}")
    for (n1, t1), (n2, t2) in zip(zip(lengths, times), zip(lengths[1:], times[1:])):
        print(f"ratio {n2}/{n1}: {t2 / t1:.2f}x (linear would be {n2 // n1}x)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
