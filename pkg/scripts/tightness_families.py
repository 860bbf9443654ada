#!/usr/bin/env python3
"""Tabulate the tightness families: the gap Opt vs |E(P*)| grows with n.

Both families have n = 5k, m = 7k - 1, an optimal path cover with 4k edges,
and Opt = 3k, so |E(P*)| - Opt = k = n / 5.
"""

import argparse

from mist import (block_decompose, family_block_cactus, family_bp,
                  family_bp_ordering, label_blocks, oracle_max_pathcover_edges,
                  solve_block_cactus, solve_bp)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmax", type=int, default=6)
    args = ap.parse_args()

    print("block/cactus family")
    print(f"{'k':>3} {'n':>5} {'m':>5} {'bad':>4} {'opt':>5} {'gap':>4}")
    for k in range(1, args.kmax + 1):
        g = family_block_cactus(k)
        bd = block_decompose(g)
        bad = label_blocks(g, bd).bad_count
        opt = solve_block_cactus(g, bd).internal_count
        gap = 4 * k - opt
        print(f"{k:>3} {g.n:>5} {g.m:>5} {bad:>4} {opt:>5} {gap:>4}")

    print("\nbipartite permutation family")
    print(f"{'k':>3} {'n':>5} {'m':>5} {'opt':>5} {'|E(P*)|':>8} {'gap':>4}")
    for k in range(1, args.kmax + 1):
        g = family_bp(k)
        opt = solve_bp(g, family_bp_ordering(g)).internal_count
        if g.n <= 20:
            cover = oracle_max_pathcover_edges(g)
        else:
            cover = 4 * k
        print(f"{k:>3} {g.n:>5} {g.m:>5} {opt:>5} {cover:>8} {cover - opt:>4}")


if __name__ == "__main__":
    main()
