"""Seeded instance generators per class plus the explicit tightness families."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .graph import Graph, make_graph
from .recognition import (Ordering, _make_ordering, bipartition,
                          compute_chain_ordering, verify_strong_ordering)


@dataclass(frozen=True)
class GenSpec:
    cls: str          # block | cactus | cograph | chain | bp
    n: int
    seed: int


# ---------------------------------------------------------------------------
# Tightness families


def family_block_cactus(k: int) -> Graph:
    """Chain of k double-triangle gadgets joined by bridges: n=5k, m=7k-1,
    2k bad triangle blocks, optimum 3k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    edges: List[Tuple[int, int]] = []

    def vid(i: int, j: int) -> int:     # group i (0-based), local j in 1..5
        return 5 * i + (j - 1)

    for i in range(k):
        for a, b in ((1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)):
            edges.append((vid(i, a), vid(i, b)))
        if i + 1 < k:
            edges.append((vid(i, 3), vid(i + 1, 3)))
    return make_graph(5 * k, edges)


def family_bp(k: int) -> Graph:
    """Complete-bipartite gadgets (3+2 / 2+3 alternating) linked in a chain:
    n=5k, m=7k-1; optimum 3k while the optimal path cover has 4k edges.

    Vertex ids ascend with the natural strong ordering on each side, so
    family_bp_ordering just sorts the bipartition.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    edges: List[Tuple[int, int]] = []
    xs_of: List[List[int]] = []
    ys_of: List[List[int]] = []
    nxt = 0
    for i in range(1, k + 1):
        nx, ny = (3, 2) if i % 2 == 1 else (2, 3)
        xs = list(range(nxt, nxt + nx))
        ys = list(range(nxt + nx, nxt + nx + ny))
        nxt += nx + ny
        xs_of.append(xs)
        ys_of.append(ys)
        edges.extend((x, y) for x in xs for y in ys)
    for i in range(1, k):
        if i % 2 == 1:   # odd group i: y2^i -- x1^{i+1}
            edges.append((ys_of[i - 1][1], xs_of[i][0]))
        else:            # even group i: x2^i -- y1^{i+1}
            edges.append((xs_of[i - 1][1], ys_of[i][0]))
    return make_graph(5 * k, edges)


def family_bp_ordering(g: Graph) -> Ordering:
    xs, ys = bipartition(g)
    return _make_ordering(g, sorted(xs), sorted(ys))


# ---------------------------------------------------------------------------
# Random instances


def _gen_block_like(n: int, rng: random.Random, cactus: bool) -> Graph:
    """Random tree of blocks sharing single cut vertices."""
    edges: List[Tuple[int, int]] = []
    placed = [0]
    nxt = 1
    while nxt < n:
        room = n - nxt
        if cactus:
            size = rng.randint(2, min(5, room + 1))
        else:
            size = rng.randint(2, min(4, room + 1))
        anchor = rng.choice(placed)
        verts = [anchor] + list(range(nxt, nxt + size - 1))
        nxt += size - 1
        placed.extend(verts[1:])
        if cactus and size >= 3:
            cyc = verts
            edges.extend((cyc[i], cyc[(i + 1) % size]) for i in range(size))
        elif cactus or size == 2:
            edges.append((verts[0], verts[1]))
        else:
            edges.extend((verts[i], verts[j])
                         for i in range(size) for j in range(i + 1, size))
    if n == 1:
        return make_graph(1, [])
    return make_graph(n, edges)


def gen_block(n: int, seed: int) -> Graph:
    return _gen_block_like(n, random.Random(("block", n, seed).__repr__()), cactus=False)


def gen_cactus(n: int, seed: int) -> Graph:
    return _gen_block_like(n, random.Random(("cactus", n, seed).__repr__()), cactus=True)


def gen_cograph(n: int, seed: int) -> Graph:
    """Graph of a random binary cotree with alternating labels, root a join."""
    rng = random.Random(("cograph", n, seed).__repr__())
    edges: List[Tuple[int, int]] = []

    def build(verts: List[int], label: int) -> None:
        if len(verts) == 1:
            return
        cut = rng.randint(1, len(verts) - 1)
        shuffled = verts[:]
        rng.shuffle(shuffled)
        left, right = shuffled[:cut], shuffled[cut:]
        if label == 1:
            edges.extend((min(a, b), max(a, b)) for a in left for b in right)
        build(left, 1 - label)
        build(right, 1 - label)

    build(list(range(n)), 1)
    return make_graph(n, edges)


def _staircase_graph(n: int, rng: random.Random, nested: bool) -> Graph:
    """Bipartite graph from monotone neighbor intervals.

    nested=True forces all intervals to start at the first Y vertex (chain
    graph); otherwise the staircase gives a bipartite permutation graph.
    """
    if n == 2:
        return make_graph(2, [(0, 1)])
    n1 = rng.randint(max(1, n // 3), max(1, 2 * n // 3))
    n2 = n - n1
    if n2 == 0:
        n1 -= 1
        n2 = 1
    # X ids 0..n1-1, Y ids n1..n-1
    f = [0] * n1
    l = [0] * n1
    for i in range(n1):
        if nested:
            f[i] = 0
        else:
            lo = f[i - 1] if i else 0
            hi = min(l[i - 1], n2 - 1) if i else 0
            f[i] = rng.randint(lo, max(lo, hi))
        lo_l = max(f[i], l[i - 1] if i else 0)
        l[i] = rng.randint(lo_l, min(n2 - 1, lo_l + rng.randint(0, 3)))
    l[n1 - 1] = n2 - 1
    if nested:
        # re-sort lengths so neighborhoods nest (prefixes of Y)
        lens = sorted(l[i] + 1 for i in range(n1))
        lens[-1] = n2
        f = [0] * n1
        l = [ln - 1 for ln in lens]
    edges = [(i, n1 + j) for i in range(n1) for j in range(f[i], l[i] + 1)]
    return make_graph(n, edges)


def gen_chain(n: int, seed: int) -> Graph:
    g = _staircase_graph(n, random.Random(("chain", n, seed).__repr__()), nested=True)
    compute_chain_ordering(g)   # generated instance must certify
    return g


def gen_bp(n: int, seed: int) -> Graph:
    g, o = gen_bp_with_ordering(n, seed)
    return g


def gen_bp_with_ordering(n: int, seed: int) -> Tuple[Graph, Ordering]:
    g = _staircase_graph(n, random.Random(("bp", n, seed).__repr__()), nested=False)
    xs, ys = bipartition(g)
    o = _make_ordering(g, sorted(xs), sorted(ys))
    ok, violation = verify_strong_ordering(g, o, quadruple_check=False)
    if not ok:
        raise AssertionError(f"generated ordering is not strong: {violation}")
    return g, o


_GENERATORS = {
    "block": gen_block,
    "cactus": gen_cactus,
    "cograph": gen_cograph,
    "chain": gen_chain,
    "bp": gen_bp,
}


def gen_class(spec: GenSpec) -> Graph:
    try:
        fn = _GENERATORS[spec.cls]
    except KeyError:
        raise ValueError(f"unknown class {spec.cls!r}")
    return fn(spec.n, spec.seed)
