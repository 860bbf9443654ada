"""Chain graphs: the maximal-contiguous optimal path cover, the combining-edge
spanning tree that certifies opt >= |E(P*)| - 2, and the gap report."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

from .graph import Graph, GraphError, PathCover, SpanningTree, make_spanning_tree
from .recognition import Ordering, compute_chain_ordering
from .bp import solve_bp


@dataclass(frozen=True)
class ContiguousPathCover:
    """Paths in production order; x_side identifies the X partition."""

    n: int
    paths: Tuple[Tuple[int, ...], ...]
    x_side: FrozenSet[int]

    @property
    def edge_count(self) -> int:
        return sum(len(p) - 1 for p in self.paths)

    @property
    def component_count(self) -> int:
        return len(self.paths)

    def as_path_cover(self) -> PathCover:
        return PathCover(n=self.n, paths=self.paths)


def _grow(g: Graph, seq: List[int], xs, ys, a: int, b: int, turn: str) -> List[int]:
    while True:
        if turn == "y":
            if b < len(ys) and g.has_edge(seq[-1], ys[b]):
                seq.append(ys[b])
                b += 1
                turn = "x"
            else:
                return seq
        else:
            if a < len(xs) and g.has_edge(seq[-1], xs[a]):
                seq.append(xs[a])
                a += 1
                turn = "y"
            else:
                return seq


def chain_path_cover(g: Graph, o: Ordering) -> ContiguousPathCover:
    """Greedy maximal contiguous paths: repeatedly grow a zig-zag from the
    first unvisited vertex of each side and keep the longer one (X wins ties)."""
    xs, ys = list(o.x_order), list(o.y_order)
    xset = set(xs)
    ix = iy = 0
    paths: List[Tuple[int, ...]] = []
    while ix < len(xs) or iy < len(ys):
        px: Optional[List[int]] = None
        py: Optional[List[int]] = None
        if ix < len(xs):
            px = _grow(g, [xs[ix]], xs, ys, ix + 1, iy, "y")
        if iy < len(ys):
            py = _grow(g, [ys[iy]], xs, ys, ix, iy + 1, "x")
        if py is None or (px is not None and len(px) >= len(py)):
            q = px
        else:
            q = py
        paths.append(tuple(q))
        cnt_x = sum(1 for v in q if v in xset)
        ix += cnt_x
        iy += len(q) - cnt_x
    cover = ContiguousPathCover(n=g.n, paths=tuple(paths),
                                x_side=frozenset(o.x_order))
    cover.as_path_cover().validate(g)
    return cover


class StitchError(GraphError):
    pass


def stitch_path_cover(g: Graph, pc: ContiguousPathCover) -> SpanningTree:
    """Join consecutive nontrivial paths with combining edges.

    An X-to-X junction costs nothing extra; an X-end meeting a Y-start with
    the next path also ending in Y costs one internal vertex and can happen
    at most once. Y-side endings in the middle signal a non-maximal cover.
    """
    xset = pc.x_side
    paths = [list(p) for p in pc.paths]
    nontrivial = [p for p in paths if len(p) >= 2]
    trivial = [p[0] for p in paths if len(p) == 1]
    edges: List[Tuple[int, int]] = []
    case42_hits = 0

    for p in nontrivial:
        edges.extend(zip(p, p[1:]))

    for idx in range(len(nontrivial) - 1):
        p, q = nontrivial[idx], nontrivial[idx + 1]
        p_ends_x = p[-1] in xset
        q_starts_x = q[0] in xset
        if not p_ends_x:
            raise StitchError("cover is not maximal contiguous: "
                              "a middle path ends on the Y side")
        if not q_starts_x:
            if q[-1] in xset:
                # rewrite q to start on the X side (same vertices, X first)
                qx = [v for v in q if v in xset]
                qy = [v for v in q if v not in xset]
                q2: List[int] = []
                for xv, yv in zip(qx, qy):
                    q2 += [xv, yv]
                for a, b in zip(q2, q2[1:]):
                    if not g.has_edge(a, b):
                        raise StitchError(f"rewritten path uses non-edge ({a}, {b})")
                # swap the path edges for the rewritten ones
                old = set(map(lambda e: (min(e), max(e)), zip(q, q[1:])))
                edges = [e for e in edges
                         if (min(e), max(e)) not in old]
                edges.extend(zip(q2, q2[1:]))
                nontrivial[idx + 1] = q2
                q = q2
                q_starts_x = True
            else:
                # both-paths-in-Y junction: splice interior to interior
                case42_hits += 1
                y_prev = p[-2]
                x_next = q[1]
                if not g.has_edge(y_prev, x_next):
                    raise StitchError(f"combining edge ({y_prev}, {x_next}) missing")
                edges.append((y_prev, x_next))
                continue
        y_prev = p[-2]
        if not g.has_edge(y_prev, q[0]):
            raise StitchError(f"combining edge ({y_prev}, {q[0]}) missing")
        edges.append((y_prev, q[0]))

    if case42_hits > 1:
        raise StitchError("interior-to-interior junction fired more than once")

    deg = {}
    for a, b in edges:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    for v in sorted(trivial):
        attached = False
        for p in reversed(nontrivial):
            cands = [w for w in p[1:-1] if g.has_edge(v, w)]
            if cands:
                edges.append((min(cands), v))
                attached = True
                break
        if not attached:
            # fall back to any neighbor already internal in the assembled tree
            cands = [w for w in g.adj[v] if deg.get(w, 0) >= 2]
            target = min(cands) if cands else min(g.adj[v])
            edges.append((target, v))
        deg[v] = deg.get(v, 0) + 1
        other = edges[-1][0]
        deg[other] = deg.get(other, 0) + 1

    t = make_spanning_tree(g, edges)
    if t.internal_count < pc.edge_count - 2:
        raise AssertionError(
            f"stitched tree has {t.internal_count} internal vertices, "
            f"below the guaranteed {pc.edge_count - 2}")
    return t


@dataclass(frozen=True)
class ChainBoundsReport:
    opt: int
    pathcover_edges: int
    gap: int


def chain_bounds_report(g: Graph, o: Optional[Ordering] = None) -> ChainBoundsReport:
    """Exact optimum (via the bipartite-permutation solver; a chain ordering
    is a strong ordering) against the optimal path cover edge count."""
    if o is None:
        o = compute_chain_ordering(g)
    cover = chain_path_cover(g, o)
    tree = solve_bp(g, o)
    gap = cover.edge_count - tree.internal_count
    if gap not in (1, 2):
        raise AssertionError(f"path-cover gap {gap} outside {{1, 2}}")
    return ChainBoundsReport(opt=tree.internal_count,
                             pathcover_edges=cover.edge_count, gap=gap)
