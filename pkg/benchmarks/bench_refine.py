#!/usr/bin/env python3
"""Benchmark the refinement kernels: pure Python vs compiled.

Runs the coherent closure of C_{n,3} (initial coloring to stable
partition) with each available backend and reports per-size timings.

    python3 benchmarks/bench_refine.py --sizes 40 80 120
"""

import argparse
import time

from arcschemes.closure import RelationSet, _initial_coloring
from arcschemes.graphs import elementary_caw
from arcschemes.kernels import available_backends


def closure_time(refine, mat, rank):
    start = time.perf_counter()
    rounds = 0
    while True:
        mat, new_rank = refine(mat, rank)
        rounds += 1
        if new_rank == rank:
            break
        rank = new_rank
    return time.perf_counter() - start, rounds, rank


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[40, 80, 120, 160])
    parser.add_argument("--k", type=int, default=3, help="connection-set radius")
    args = parser.parse_args()

    backends = available_backends()
    names = list(backends)
    header = f"{'n':>5}  {'rank':>4}  " + "  ".join(f"{name:>10}" for name in names)
    if len(names) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    for n in args.sizes:
        g = elementary_caw(n, args.k)
        mat0 = _initial_coloring(RelationSet.of_graph(g))
        rank0 = int(mat0.max()) + 1
        times = {}
        final_rank = None
        for name, module in backends.items():
            elapsed, rounds, final_rank = closure_time(module.refine_step, mat0, rank0)
            times[name] = elapsed
        row = f"{n:>5}  {final_rank:>4}  " + "  ".join(
            f"{times[name] * 1000:>8.1f}ms" for name in names
        )
        if len(names) == 2:
            row += f"  {times[names[0]] / times[names[1]]:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
