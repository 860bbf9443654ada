#!/usr/bin/env python3
"""Time the linear-time solvers at large n (ordering/decomposition excluded)."""

import argparse
import time

from mist import (block_decompose, gen_block, gen_bp_with_ordering,
                  gen_cactus, solve_block_cactus, solve_bp)


def bench(solver: str, n: int, seed: int) -> float:
    if solver == "bp":
        g, o = gen_bp_with_ordering(n, seed)
        start = time.perf_counter()
        t = solve_bp(g, o, verify=False)
    else:
        g = (gen_block if solver == "block" else gen_cactus)(n, seed)
        bd = block_decompose(g)
        start = time.perf_counter()
        t = solve_block_cactus(g, bd)
    dt = time.perf_counter() - start
    print(f"  {solver:7s} n={n:>7d}  {dt:6.3f}s  internal={t.internal_count}")
    return dt


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="*",
                    default=[50_000, 100_000, 200_000])
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    for solver in ("block", "cactus", "bp"):
        print(f"{solver}:")
        prev = None
        for n in args.sizes:
            dt = bench(solver, n, args.seed)
            if prev is not None:
                print(f"          ratio vs previous size: {dt / prev:.2f}")
            prev = dt


if __name__ == "__main__":
    main()
