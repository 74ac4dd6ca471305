"""Benchmark the additive-closure kernels: compiled vs pure Python.

The kernel computes the member bitmask of the monoid generated by a set of
naturals up to a limit; it dominates the cost of n0 ideal arithmetic. Run:

    python3 benchmarks/bench_closure.py
"""

import random
import time

from semideal._kernels import backend_name
from semideal._kernels.closure_py import additive_closure as closure_pure

try:
    from semideal._kernels._closure import additive_closure as closure_c
except ImportError:
    closure_c = None


CASES = [
    ("pair coprime", [101, 103], 101 * 103 * 4),
    ("triple small", [6, 10, 15], 4000),
    ("wide random", None, 200_000),
    ("dense many", list(range(50, 90)), 50_000),
]


def _materialize():
    rng = random.Random(7)
    out = []
    for name, gens, limit in CASES:
        if gens is None:
            gens = sorted(rng.sample(range(500, 5000), 12))
        out.append((name, gens, limit))
    return out


def _time(fn, gens, limit, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(gens, limit)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    print(f"selected backend: {backend_name()}")
    rows = []
    for name, gens, limit in _materialize():
        t_pure = _time(closure_pure, gens, limit)
        if closure_c is not None:
            t_c = _time(closure_c, gens, limit)
            if closure_c(gens, limit) != closure_pure(gens, limit):
                raise SystemExit(f"kernel mismatch on case {name!r}")
        else:
            t_c = None
        rows.append((name, t_pure, t_c))
    print(f"{'case':<16} {'pure (ms)':>10} {'compiled (ms)':>14} {'speedup':>8}")
    for name, t_pure, t_c in rows:
        if t_c is None:
            print(f"{name:<16} {t_pure * 1e3:>10.3f} {'n/a':>14} {'n/a':>8}")
        else:
            print(f"{name:<16} {t_pure * 1e3:>10.3f} {t_c * 1e3:>14.3f} {t_pure / t_c:>8.2f}x")


if __name__ == "__main__":
    main()
