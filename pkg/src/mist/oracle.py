"""Exhaustive ground truth at desk scale.

Spanning-tree enumeration with connectivity pruning, an exact MIST oracle,
an exact optimal-path-cover oracle (bitmask DP), and a Matrix-Tree count
cross-check in exact integer arithmetic.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from .graph import Graph, SpanningTree


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 11
    max_spanning_trees: int = 10_000_000
    time_limit_s: Optional[float] = None


DEFAULT_BUDGET = OracleBudget()


def enumerate_spanning_trees(g: Graph,
                             budget: OracleBudget = DEFAULT_BUDGET) -> Iterator[SpanningTree]:
    """Yield every spanning tree exactly once.

    Include/exclude branching over the edge list; a branch is cut when the
    chosen edges form a cycle or the still-available edges cannot connect
    the graph.
    """
    if g.n > budget.max_n:
        raise BudgetExceeded(f"n={g.n} exceeds oracle max_n={budget.max_n}")
    n = g.n
    m = g.m
    edges = g.edges
    deadline = time.monotonic() + budget.time_limit_s if budget.time_limit_s else None
    emitted = 0

    def connects(chosen: List[Tuple[int, int]], start_idx: int) -> bool:
        parent = list(range(n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        comps = n
        for u, v in chosen:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
        for i in range(start_idx, m):
            u, v = edges[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
        return comps == 1

    def rec(idx: int, chosen: List[Tuple[int, int]],
            parent: List[int]) -> Iterator[SpanningTree]:
        nonlocal emitted
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded("time limit exceeded")
        if len(chosen) == n - 1:
            emitted += 1
            if emitted > budget.max_spanning_trees:
                raise BudgetExceeded("spanning-tree cap exceeded")
            yield SpanningTree(n=n, edges=tuple(chosen))
            return
        if idx == m:
            return

        def find(a: int) -> int:
            while parent[a] != a:
                a = parent[a]
            return a

        u, v = edges[idx]
        ru, rv = find(u), find(v)
        if ru != rv:
            new_parent = list(parent)
            new_parent[ru] = rv
            chosen.append((u, v))
            yield from rec(idx + 1, chosen, new_parent)
            chosen.pop()
        if connects(chosen, idx + 1):
            yield from rec(idx + 1, chosen, parent)

    yield from rec(0, [], list(range(n)))


def count_spanning_trees_matrix_tree(g: Graph) -> int:
    """Kirchhoff count via Bareiss fraction-free elimination (exact)."""
    n = g.n
    if n == 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    a = [row[:-1] for row in lap[:-1]]
    k = len(a)
    prev = 1
    for i in range(k - 1):
        if a[i][i] == 0:
            for r in range(i + 1, k):
                if a[r][i] != 0:
                    a[i], a[r] = a[r], a[i]
                    for row in a:
                        row[i], row[r] = row[r], row[i]  # symmetric swap keeps det
                    break
            else:
                return 0
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return a[k - 1][k - 1]


def _dfs_tree(g: Graph, root: int) -> SpanningTree:
    seen = [False] * g.n
    seen[root] = True
    it = [0] * g.n
    stack = [root]
    edges = []
    while stack:
        u = stack[-1]
        moved = False
        while it[u] < len(g.adj[u]):
            v = g.adj[u][it[u]]
            it[u] += 1
            if not seen[v]:
                seen[v] = True
                edges.append((u, v))
                stack.append(v)
                moved = True
                break
        if not moved:
            stack.pop()
    return SpanningTree(n=g.n, edges=tuple(edges))


def oracle_mist(g: Graph,
                budget: OracleBudget = DEFAULT_BUDGET,
                use_pathcover_bound: bool = True) -> Tuple[int, SpanningTree]:
    """Exact maximum internal count plus one maximizing tree.

    DFS trees seed the incumbent; with use_pathcover_bound the search also
    stops once the |E(P*)| - 1 ceiling is met (the ceiling itself is
    re-proved by full enumeration in the bound test suite).
    """
    if g.n == 1:
        return 0, SpanningTree(n=1, edges=())
    ub = g.n - 2
    if use_pathcover_bound and g.n <= 20:
        ub = min(ub, oracle_max_pathcover_edges(g) - 1)
    best = -1
    witness: Optional[SpanningTree] = None
    for root in range(g.n):
        t = _dfs_tree(g, root)
        c = t.internal_count
        if c > best:
            best, witness = c, t
    if best >= ub:
        return best, witness
    for t in enumerate_spanning_trees(g, budget):
        c = t.internal_count
        if c > best:
            best = c
            witness = t
            if best >= ub:
                break
    assert witness is not None
    return best, witness


def oracle_min_path_count(g: Graph, max_n: int = 20) -> int:
    """Minimum number of paths in a path cover, by bitmask DP.

    States: open[mask][last] = fewest paths covering mask with the current
    path open at last; closed[mask] = fewest paths covering mask, all closed.
    """
    n = g.n
    if n > max_n:
        raise BudgetExceeded(f"n={n} exceeds path-cover oracle limit {max_n}")
    if n == 1:
        return 1
    full = (1 << n) - 1
    INF = n + 1
    adj_bits = [0] * n
    for u, v in g.edges:
        adj_bits[u] |= 1 << v
        adj_bits[v] |= 1 << u
    size = 1 << n
    open_dp = [[INF] * n for _ in range(size)]
    closed = [INF] * size
    closed[0] = 0
    for v in range(n):
        open_dp[1 << v][v] = 1
    for mask in range(1, size):
        row = open_dp[mask]
        best_here = INF
        for last in range(n):
            val = row[last]
            if val >= INF:
                continue
            if val < best_here:
                best_here = val
            # extend the open path
            ext = adj_bits[last] & ~mask
            while ext:
                b = ext & -ext
                ext ^= b
                v = b.bit_length() - 1
                nm = mask | b
                if val < open_dp[nm][v]:
                    open_dp[nm][v] = val
        if best_here < closed[mask]:
            closed[mask] = best_here
        c = closed[mask]
        if c < INF:
            # start a fresh path at any uncovered vertex
            rest = full & ~mask
            while rest:
                b = rest & -rest
                rest ^= b
                v = b.bit_length() - 1
                nm = mask | b
                if c + 1 < open_dp[nm][v]:
                    open_dp[nm][v] = c + 1
    return closed[full]


def oracle_max_pathcover_edges(g: Graph, max_n: int = 20) -> int:
    """Exact |E(P*)|: n minus the minimum path count."""
    return g.n - oracle_min_path_count(g, max_n=max_n)
