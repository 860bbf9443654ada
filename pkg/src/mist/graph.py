"""Core graph types: immutable simple graphs, spanning trees, path covers.

Vertices are 0-based internally; the text format is 1-based (converted at
parse/serialize time only).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    def __init__(self, message: str, line_no: Optional[int] = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


@dataclass(frozen=True)
class Graph:
    """Simple undirected connected graph."""

    n: int
    edges: Tuple[Tuple[int, int], ...]  # (u, v) with u < v
    adj: Tuple[Tuple[int, ...], ...]    # sorted neighbor lists
    labels: Optional[Tuple[str, ...]] = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def neighbors(self, u: int) -> Tuple[int, ...]:
        return self.adj[u]

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        a, b = self.adj[u], self.adj[v]
        small = a if len(a) <= len(b) else b
        target = v if small is a else u
        if len(small) <= 16:
            return target in small
        lo, hi = 0, len(small)
        while lo < hi:
            mid = (lo + hi) // 2
            if small[mid] < target:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(small) and small[lo] == target

    def vertices(self) -> range:
        return range(self.n)

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u + 1} {v + 1}" for u, v in self.edges)
        return "\n".join(lines) + "\n"


def _is_connected(n: int, adj: Sequence[Sequence[int]]) -> bool:
    if n == 0:
        return False
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == n


def make_graph(n: int, edges: Iterable[Tuple[int, int]],
               labels: Optional[Sequence[str]] = None,
               require_connected: bool = True) -> Graph:
    """Build and validate a Graph from 0-based edge pairs."""
    if n < 1:
        raise GraphError("graph must have at least one vertex")
    norm: List[Tuple[int, int]] = []
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex id out of range in edge ({u}, {v})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphError(f"duplicate edge ({e[0]}, {e[1]})")
        seen.add(e)
        norm.append(e)
    norm.sort()
    adj: List[List[int]] = [[] for _ in range(n)]
    for u, v in norm:
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()
    if require_connected and not _is_connected(n, adj):
        raise GraphError("graph is disconnected")
    return Graph(
        n=n,
        edges=tuple(norm),
        adj=tuple(tuple(a) for a in adj),
        labels=tuple(labels) if labels is not None else None,
    )


def parse_graph(text: str) -> Graph:
    """Parse the edge-list text format.

    Format: '#' comment lines anywhere; first data line "n m"; then m lines
    "u v" with 1-based vertex ids.
    """
    header = None
    edges: List[Tuple[int, int]] = []
    n = m = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError("expected header 'n m'", line_no)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError("header values must be integers", line_no)
            if n < 1 or m < 0:
                raise ParseError("header values out of range", line_no)
            header = (n, m)
            continue
        if len(parts) != 2:
            raise ParseError("expected edge 'u v'", line_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", line_no)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex id out of range: {u} {v}", line_no)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line_no)
        e = (min(u, v) - 1, max(u, v) - 1)
        if e in set(edges):
            raise ParseError(f"duplicate edge {u} {v}", line_no)
        edges.append(e)
    if header is None:
        raise ParseError("empty input")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    return make_graph(n, edges)


@dataclass(frozen=True)
class SpanningTree:
    """Spanning tree of a host graph, stored as an edge list."""

    n: int
    edges: Tuple[Tuple[int, int], ...]

    def degrees(self) -> List[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    @property
    def internal_count(self) -> int:
        return sum(1 for d in self.degrees() if d >= 2)

    def leaves(self) -> List[int]:
        return [u for u, d in enumerate(self.degrees()) if d == 1]

    def validate(self, g: Graph) -> None:
        if self.n != g.n:
            raise GraphError("tree vertex count differs from host graph")
        if len(self.edges) != self.n - 1:
            raise GraphError(f"tree has {len(self.edges)} edges, expected {self.n - 1}")
        parent = list(range(self.n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        comps = self.n
        for u, v in self.edges:
            if not g.has_edge(u, v):
                raise GraphError(f"tree edge ({u}, {v}) not in host graph")
            ru, rv = find(u), find(v)
            if ru == rv:
                raise GraphError(f"tree edges contain a cycle through ({u}, {v})")
            parent[ru] = rv
            comps -= 1
        if comps != 1:
            raise GraphError("tree edges do not connect all vertices")

    def to_text(self) -> str:
        lines = [f"internal {self.internal_count}"]
        lines.extend(f"{u + 1} {v + 1}"
                     for u, v in ((min(a, b), max(a, b)) for a, b in self.edges))
        return "\n".join(lines) + "\n"


def make_spanning_tree(g: Graph, edges: Iterable[Tuple[int, int]]) -> SpanningTree:
    t = SpanningTree(n=g.n, edges=tuple(edges))
    t.validate(g)
    return t


def tree_from_path(g: Graph, path: Sequence[int]) -> SpanningTree:
    return make_spanning_tree(g, zip(path, path[1:]))


@dataclass(frozen=True)
class PathCover:
    """Vertex-disjoint paths covering every vertex (singletons allowed)."""

    n: int
    paths: Tuple[Tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        return sum(len(p) - 1 for p in self.paths)

    @property
    def component_count(self) -> int:
        return len(self.paths)

    def validate(self, g: Graph) -> None:
        covered: List[int] = []
        for p in self.paths:
            covered.extend(p)
            for a, b in zip(p, p[1:]):
                if not g.has_edge(a, b):
                    raise GraphError(f"path step ({a}, {b}) not an edge")
        if sorted(covered) != list(range(g.n)):
            raise GraphError("paths do not partition the vertex set")


def make_path_cover(g: Graph, paths: Iterable[Sequence[int]]) -> PathCover:
    pc = PathCover(n=g.n, paths=tuple(tuple(p) for p in paths))
    pc.validate(g)
    return pc


@dataclass(frozen=True)
class PendantLedger:
    """Pendants trimmed so every support keeps exactly one; maps old ids."""

    # support vertex (original id) -> removed pendant vertices (original ids)
    removed: Tuple[Tuple[int, Tuple[int, ...]], ...] = ()
    # old id -> new id for surviving vertices
    old_to_new: Tuple[int, ...] = ()

    @property
    def removed_count(self) -> int:
        return sum(len(ps) for _, ps in self.removed)

    def is_empty(self) -> bool:
        return self.removed_count == 0


def reduce_pendants(g: Graph) -> Tuple[Graph, PendantLedger]:
    """For every support with k >= 2 pendant neighbors, drop k-1 of them.

    The optimum internal count is unchanged: extra pendants are leaves of
    every spanning tree and their support stays internal via the kept one.
    """
    removed: Dict[int, List[int]] = {}
    drop = set()
    for u in g.vertices():
        pendants = [v for v in g.adj[u] if g.degree(v) == 1]
        if len(pendants) >= 2:
            removed[u] = pendants[1:]
            drop.update(pendants[1:])
    if not drop:
        ledger = PendantLedger(removed=(), old_to_new=tuple(range(g.n)))
        return g, ledger
    old_to_new = [-1] * g.n
    idx = 0
    for v in g.vertices():
        if v not in drop:
            old_to_new[v] = idx
            idx += 1
    new_edges = [(old_to_new[u], old_to_new[v]) for u, v in g.edges
                 if u not in drop and v not in drop]
    reduced = make_graph(idx, new_edges)
    ledger = PendantLedger(
        removed=tuple((u, tuple(ps)) for u, ps in sorted(removed.items())),
        old_to_new=tuple(old_to_new),
    )
    return reduced, ledger


def restore_pendants(t: SpanningTree, ledger: PendantLedger) -> SpanningTree:
    """Reattach trimmed pendants as leaves of their original supports."""
    if ledger.is_empty():
        return t
    n_orig = len(ledger.old_to_new)
    new_to_old = [-1] * t.n
    for old, new in enumerate(ledger.old_to_new):
        if new >= 0:
            new_to_old[new] = old
    edges = [(new_to_old[u], new_to_old[v]) for u, v in t.edges]
    for support, pendants in ledger.removed:
        if ledger.old_to_new[support] < 0:
            raise GraphError(f"ledger support {support} missing from tree")
        edges.extend((support, p) for p in pendants)
    return SpanningTree(n=n_orig, edges=tuple(edges))


def internal_count(t: SpanningTree) -> int:
    return t.internal_count


def pendant_lower_bound(g: Graph, side_a: Iterable[int], side_b: Iterable[int]) -> int:
    """Lower bound on spanning-tree leaves inside A when N(A) = B.

    Returns max(0, |A| - |B| + 1). Requires A independent with N(A) = B.
    """
    a = set(side_a)
    b = set(side_b)
    nbrs = set()
    for u in a:
        nbrs.update(g.adj[u])
    if nbrs != b:
        raise GraphError("N(A) != B")
    if nbrs & a:
        raise GraphError("A is not independent")
    return max(0, len(a) - len(b) + 1)
