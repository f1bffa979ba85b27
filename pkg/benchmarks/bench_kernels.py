"""Benchmark the pure-Python flow kernel against the compiled one.

Runs the same all-pairs local-connectivity workloads through both kernel
implementations, checks they agree bit-for-bit, and reports wall times.

    python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time

from conndim import parse_dimacs, build_reduction, threshold_graph, \
    ThresholdSequence
from conndim._kernels import pure

try:
    from conndim._kernels import _speedups
except ImportError:
    _speedups = None


def random_graph(n: int, p: float, seed: int):
    rng = random.Random(seed)
    return n, [(u, v) for u in range(n) for v in range(u + 1, n)
               if rng.random() < p]


def workloads():
    n, edges = random_graph(40, 0.15, 7)
    yield "sparse random n=40", n, edges
    n, edges = random_graph(28, 0.5, 11)
    yield "dense random n=28", n, edges
    g = threshold_graph(ThresholdSequence([0, 1] * 12))
    yield "alternating threshold n=24", g.n, list(g.sorted_edges)
    f = parse_dimacs("p cnf 4 4\n1 2 3 0\n-1 2 4 0\n-2 -3 4 0\n1 -3 -4 0\n")
    g, _ = build_reduction(f)
    yield "3-SAT reduction n=44", g.n, list(g.sorted_edges)


def run(kernel, n, edges, pairs):
    start = time.perf_counter()
    out = kernel.flow_many(n, edges, pairs)
    return time.perf_counter() - start, out


def main():
    print(f"compiled kernel available: {_speedups is not None}")
    total_pure = total_fast = 0.0
    for name, n, edges in workloads():
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        t_pure, out_pure = run(pure, n, edges, pairs)
        total_pure += t_pure
        line = f"{name:32s} pairs={len(pairs):5d}  pure {t_pure * 1e3:8.1f} ms"
        if _speedups is not None:
            t_fast, out_fast = run(_speedups, n, edges, pairs)
            total_fast += t_fast
            if list(out_pure) != list(out_fast):
                raise SystemExit(f"KERNEL MISMATCH on {name!r}")
            line += (f"  compiled {t_fast * 1e3:8.1f} ms"
                     f"  speedup {t_pure / t_fast:6.1f}x")
        print(line)
    if _speedups is not None:
        print(f"{'TOTAL':32s} {'':12s}  pure {total_pure * 1e3:8.1f} ms"
              f"  compiled {total_fast * 1e3:8.1f} ms"
              f"  speedup {total_pure / total_fast:6.1f}x")


if __name__ == "__main__":
    main()
