"""Optimal path cover over a cotree and the cograph MIST construction.

The join recurrence gives pi = max(1, pi_L - n_R, pi_R - n_L) paths: paths
of one side are stitched through the other side's vertices using cross
edges, splitting glue paths only when connector slots run short.
"""

from __future__ import annotations

from typing import List, Sequence, Set, Tuple

from .graph import Graph, GraphError, PathCover, SpanningTree, make_path_cover, \
    make_spanning_tree
from .recognition import Cotree, CotreeNode


def _join_merge(p_side: List[List[int]], q_side: List[List[int]]) -> List[List[int]]:
    """Merge the covers of the two sides of a join."""
    if len(p_side) < len(q_side):
        p_side, q_side = q_side, p_side
    s = len(p_side) - 1  # connector slots needed to chain all P paths
    if len(q_side) >= s:
        chain: List[int] = []
        for i, a in enumerate(p_side):
            chain += a
            if i < len(q_side):
                chain += q_side[i]
        return [chain]
    n_q = sum(len(q) for q in q_side)
    if n_q >= s:
        pieces = [list(q) for q in q_side]
        while len(pieces) < s:
            for piece in pieces:
                if len(piece) >= 2:
                    pieces.append([piece.pop()])
                    break
        chain = []
        for i, a in enumerate(p_side):
            chain += a
            if i < s:
                chain += pieces[i]
        return [chain]
    singles = [v for q in q_side for v in q]
    chain = []
    for i in range(n_q + 1):
        chain += p_side[i]
        if i < n_q:
            chain.append(singles[i])
    return [chain] + [list(p) for p in p_side[n_q + 1:]]


def _cover_paths(node: CotreeNode) -> List[List[int]]:
    if node.is_leaf:
        return [[node.vertex]]
    left = _cover_paths(node.left)
    right = _cover_paths(node.right)
    if node.label == 0:
        return left + right
    return _join_merge(left, right)


def cotree_path_cover(g: Graph, t: Cotree) -> PathCover:
    """Path cover of the underlying cograph with the maximum number of edges."""
    paths = _cover_paths(t.root)
    return make_path_cover(g, paths)


def solve_cograph(g: Graph, t: Cotree) -> SpanningTree:
    """Attach every non-crossing path of the cover to an internal vertex of
    the crossing path; internal count lands exactly at |E(P*)| - 1."""
    cover = cotree_path_cover(g, t)
    paths = [list(p) for p in cover.paths]
    if len(paths) == 1:
        path = paths[0]
        return make_spanning_tree(g, zip(path, path[1:]))

    left_set: Set[int] = set(t.root.left.leaves())
    right_set: Set[int] = set(t.root.right.leaves())
    crossing = [p for p in paths
                if (set(p) & left_set) and (set(p) & right_set)]
    if len(crossing) != 1:
        raise AssertionError("optimal cover must have exactly one crossing path")
    p1 = crossing[0]
    others = [p for p in paths if p is not p1]
    in_left = all(set(p) <= left_set for p in others)
    in_right = all(set(p) <= right_set for p in others)
    if not (in_left or in_right):
        raise AssertionError("non-crossing paths must lie in a single side")
    # glue side = side opposite the pure paths
    glue = left_set if in_right else right_set
    interior = p1[1:-1]
    candidates = [v for v in interior if v in glue]
    if not candidates:
        raise AssertionError("crossing path has no internal glue-side vertex")
    u = candidates[0]

    edges: List[Tuple[int, int]] = []
    for p in paths:
        edges.extend(zip(p, p[1:]))
    for p in others:
        v = min(p[0], p[-1]) if len(p) > 1 else p[0]
        edges.append((u, v))
    tree = make_spanning_tree(g, edges)
    expected = cover.edge_count - 1
    if tree.internal_count != expected:
        raise AssertionError(
            f"construction bug: internal={tree.internal_count}, expected {expected}")
    return tree
