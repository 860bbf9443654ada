"""MIST for block and cactus graphs: good/bad block labeling and the
one-spanning-path-per-block construction reaching n - |bad blocks|."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Set, Tuple

from .graph import Graph, GraphError, SpanningTree, make_spanning_tree
from .recognition import BlockDecomposition, block_decompose


class NotBlockOrCactus(GraphError):
    pass


@dataclass(frozen=True)
class BlockLabeling:
    good: Tuple[bool, ...]     # parallel to decomposition.blocks

    @property
    def bad_count(self) -> int:
        return sum(1 for g in self.good if not g)


def _cycle_order(verts: Sequence[int], edges: Sequence[Tuple[int, int]],
                 start: int) -> List[int]:
    """Vertices of a cycle block in traversal order, beginning at start."""
    nbr = {v: [] for v in verts}
    for u, v in edges:
        nbr[u].append(v)
        nbr[v].append(u)
    order = [start]
    prev = None
    cur = start
    while len(order) < len(verts):
        nxt = nbr[cur][0] if nbr[cur][0] != prev else nbr[cur][1]
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def label_blocks(g: Graph, bd: BlockDecomposition) -> BlockLabeling:
    """good = block has a spanning path between two of G's cut vertices.

    Evaluated per block kind: edge needs both endpoints cut; a clique needs
    any two cut vertices; a cycle needs two adjacent cut vertices.
    """
    cut = bd.cut_vertices
    good: List[bool] = []
    for verts, edges, kind in zip(bd.blocks, bd.block_edges, bd.kinds):
        cuts_here = [v for v in verts if v in cut]
        if "edge" in kind:
            good.append(len(cuts_here) == 2)
        elif "clique" in kind:
            good.append(len(cuts_here) >= 2)
        elif "cycle" in kind:
            eset = set(edges)
            good.append(any(
                (min(a, b), max(a, b)) in eset
                for i, a in enumerate(cuts_here) for b in cuts_here[i + 1:]))
        else:
            raise NotBlockOrCactus(f"block {verts} is neither clique nor cycle")
    return BlockLabeling(good=tuple(good))


def spanning_path_in_block(verts: Sequence[int], edges: Sequence[Tuple[int, int]],
                           kind, start: int,
                           end: Optional[int] = None) -> List[int]:
    """Spanning path of a clique/cycle/edge block with prescribed endpoints."""
    vs = sorted(verts)
    if len(vs) == 2:
        other = vs[0] if vs[1] == start else vs[1]
        if end is not None and end != other:
            raise GraphError("edge block endpoints fixed")
        return [start, other]
    if "clique" in kind:
        rest = [v for v in vs if v != start and v != end]
        return [start] + rest + ([end] if end is not None else [])
    if "cycle" in kind:
        order = _cycle_order(vs, edges, start)
        if end is None:
            return order
        if order[1] == end:            # walk the other way so end lands last
            order = [start] + order[:0:-1]
        if order[-1] != end:
            raise GraphError("cycle block has no spanning path between "
                             f"non-adjacent vertices {start}, {end}")
        return order
    raise NotBlockOrCactus(f"unsupported block kind {kind}")


def solve_block_cactus(g: Graph,
                       bd: Optional[BlockDecomposition] = None) -> SpanningTree:
    """Union of one spanning path per block; internal count is n - bad_count."""
    if bd is None:
        bd = block_decompose(g)
    if not all("edge" in k or "clique" in k or "cycle" in k for k in bd.kinds):
        raise NotBlockOrCactus("some block is neither an edge, a clique nor a cycle")

    if g.n == 1:
        return SpanningTree(n=1, edges=())
    if len(bd.blocks) == 1:
        # trivial case: the block has a Hamiltonian path
        verts, edges, kind = bd.blocks[0], bd.block_edges[0], bd.kinds[0]
        path = spanning_path_in_block(verts, edges, kind, start=verts[0])
        return make_spanning_tree(g, zip(path, path[1:]))

    labeling = label_blocks(g, bd)
    cut = bd.cut_vertices
    tree_edges: List[Tuple[int, int]] = []
    for verts, edges, kind, is_good in zip(bd.blocks, bd.block_edges,
                                           bd.kinds, labeling.good):
        cuts_here = sorted(v for v in verts if v in cut)
        if is_good:
            if "cycle" in kind and "clique" not in kind:
                eset = set(edges)
                pair = min((a, b) for i, a in enumerate(cuts_here)
                           for b in cuts_here[i + 1:]
                           if (min(a, b), max(a, b)) in eset)
            else:
                pair = (cuts_here[0], cuts_here[1])
            path = spanning_path_in_block(verts, edges, kind,
                                          start=pair[0], end=pair[1])
        else:
            path = spanning_path_in_block(verts, edges, kind, start=cuts_here[0])
        tree_edges.extend(zip(path, path[1:]))

    t = make_spanning_tree(g, tree_edges)
    expected = g.n - labeling.bad_count
    if t.internal_count != expected:
        raise AssertionError(
            f"construction bug: internal={t.internal_count}, expected {expected}")
    return t
