"""Class recognizers: block decomposition, cotrees, strong and chain orderings."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .graph import Graph, GraphError


class NotCograph(GraphError):
    def __init__(self, witness: Tuple[int, int, int, int]):
        super().__init__(f"graph contains an induced P4: {witness}")
        self.witness = witness


class NotBipartite(GraphError):
    pass


class NotBipartitePermutation(GraphError):
    pass


class NotChain(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"neighborhoods of {u} and {v} are incomparable")
        self.witness = (u, v)


# ---------------------------------------------------------------------------
# Block decomposition


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: Tuple[Tuple[int, ...], ...]           # sorted vertex tuples
    block_edges: Tuple[Tuple[Tuple[int, int], ...], ...]
    cut_vertices: FrozenSet[int]
    kinds: Tuple[FrozenSet[str], ...]             # subsets of {edge,cycle,clique,other}

    def is_block_graph(self) -> bool:
        return all("edge" in k or "clique" in k for k in self.kinds)

    def is_cactus(self) -> bool:
        return all("edge" in k or "cycle" in k for k in self.kinds)


def _block_kind(g: Graph, verts: Sequence[int], edges: Sequence[Tuple[int, int]]) -> FrozenSet[str]:
    k = len(verts)
    m = len(edges)
    if k == 2:
        return frozenset({"edge"})
    tags = set()
    if m == k * (k - 1) // 2:
        tags.add("clique")
    if m == k:
        deg: Dict[int, int] = {v: 0 for v in verts}
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if all(d == 2 for d in deg.values()):
            tags.add("cycle")
    if not tags:
        tags.add("other")
    return frozenset(tags)


def block_decompose(g: Graph) -> BlockDecomposition:
    """Iterative Hopcroft-Tarjan biconnected components."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cut: Set[int] = set()
    edge_stack: List[Tuple[int, int]] = []
    blocks_edges: List[List[Tuple[int, int]]] = []
    timer = 0

    if n == 1:
        return BlockDecomposition(
            blocks=((0,),), block_edges=((),), cut_vertices=frozenset(),
            kinds=(frozenset({"edge"}),))

    for root in range(n):
        if disc[root] != -1:
            continue
        stack: List[Tuple[int, int]] = [(root, 0)]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            u, i = stack[-1]
            if i < len(g.adj[u]):
                stack[-1] = (u, i + 1)
                v = g.adj[u][i]
                if disc[v] == -1:
                    parent[v] = u
                    if u == root:
                        root_children += 1
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, 0))
                elif v != parent[u] and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], disc[v])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] >= disc[p]:
                        if p != root or root_children > 0:
                            comp: List[Tuple[int, int]] = []
                            while edge_stack:
                                e = edge_stack.pop()
                                comp.append(e)
                                if e == (p, u):
                                    break
                            blocks_edges.append(comp)
                        if p != root:
                            cut.add(p)
        if root_children > 1:
            cut.add(root)

    blocks: List[Tuple[int, ...]] = []
    kinds: List[FrozenSet[str]] = []
    norm_edges: List[Tuple[Tuple[int, int], ...]] = []
    for comp in blocks_edges:
        verts = sorted({x for e in comp for x in e})
        es = tuple(sorted((min(a, b), max(a, b)) for a, b in comp))
        blocks.append(tuple(verts))
        norm_edges.append(es)
        kinds.append(_block_kind(g, verts, es))
    order = sorted(range(len(blocks)), key=lambda i: blocks[i])
    return BlockDecomposition(
        blocks=tuple(blocks[i] for i in order),
        block_edges=tuple(norm_edges[i] for i in order),
        cut_vertices=frozenset(cut),
        kinds=tuple(kinds[i] for i in order),
    )


# ---------------------------------------------------------------------------
# Cotree


@dataclass
class CotreeNode:
    label: Optional[int] = None       # 0/1 for internal nodes, None for leaf
    vertex: Optional[int] = None      # set for leaves
    left: Optional["CotreeNode"] = None
    right: Optional["CotreeNode"] = None

    @property
    def is_leaf(self) -> bool:
        return self.vertex is not None

    def leaves(self) -> List[int]:
        if self.is_leaf:
            return [self.vertex]
        out: List[int] = []
        stack = [self]
        res: List[int] = []
        while stack:
            node = stack.pop()
            if node.is_leaf:
                res.append(node.vertex)
            else:
                stack.append(node.right)
                stack.append(node.left)
        return res


@dataclass(frozen=True)
class Cotree:
    root: CotreeNode
    n: int

    def adjacency_matches(self, g: Graph) -> bool:
        """LCA-label check: u,v adjacent iff their LCA is a 1-node."""
        parent: Dict[int, Tuple[Optional[CotreeNode], CotreeNode]] = {}
        node_parent: Dict[id, Optional[CotreeNode]] = {}
        depth: Dict[int, int] = {}
        # map vertex -> path of nodes from root
        paths: Dict[int, List[CotreeNode]] = {}
        stack = [(self.root, [self.root])]
        while stack:
            node, path = stack.pop()
            if node.is_leaf:
                paths[node.vertex] = path
            else:
                stack.append((node.left, path + [node.left]))
                stack.append((node.right, path + [node.right]))
        for u in range(g.n):
            for v in range(u + 1, g.n):
                pu, pv = paths[u], paths[v]
                lca = None
                for a, b in zip(pu, pv):
                    if a is b:
                        lca = a
                    else:
                        break
                if (lca.label == 1) != g.has_edge(u, v):
                    return False
        return True


def _find_p4(g: Graph, verts: Sequence[int]) -> Tuple[int, int, int, int]:
    vs = list(verts)
    vset = set(vs)
    for b in vs:
        for c in g.adj[b]:
            if c not in vset or c <= b:
                continue
            for a in g.adj[b]:
                if a not in vset or a == c or g.has_edge(a, c):
                    continue
                for d in g.adj[c]:
                    if d in vset and d != a and d != b \
                            and not g.has_edge(d, b) and not g.has_edge(d, a):
                        return (a, b, c, d)
    raise AssertionError("no P4 found where one was expected")


def _components(adj: Dict[int, Set[int]], verts: Sequence[int]) -> List[List[int]]:
    seen: Set[int] = set()
    comps: List[List[int]] = []
    for s in verts:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def _binarize(children: List[CotreeNode], label: int) -> CotreeNode:
    # left-deep; repeated labels along the spine are a binarization artifact
    node = children[0]
    for child in children[1:]:
        node = CotreeNode(label=label, left=node, right=child)
    return node


def _build_cotree_rec(g: Graph, verts: List[int]) -> CotreeNode:
    if len(verts) == 1:
        return CotreeNode(vertex=verts[0])
    vset = set(verts)
    adj: Dict[int, Set[int]] = {u: set(g.adj[u]) & vset for u in verts}
    comps = _components(adj, verts)
    if len(comps) > 1:
        children = [_build_cotree_rec(g, c) for c in comps]
        return _binarize(children, 0)
    co_adj: Dict[int, Set[int]] = {u: (vset - adj[u]) - {u} for u in verts}
    co_comps = _components(co_adj, verts)
    if len(co_comps) > 1:
        children = [_build_cotree_rec(g, c) for c in co_comps]
        return _binarize(children, 1)
    raise NotCograph(_find_p4(g, verts))


def build_cotree(g: Graph) -> Cotree:
    """Cotree via the recursive connectivity/co-connectivity split.

    Raises NotCograph with an induced-P4 witness when the split gets stuck.
    Connected input means the root is a 1-node.
    """
    root = _build_cotree_rec(g, list(range(g.n)))
    return Cotree(root=root, n=g.n)


# ---------------------------------------------------------------------------
# Bipartition helper


def bipartition(g: Graph) -> Tuple[List[int], List[int]]:
    """Two-color g; X is the side containing vertex 0. Raises NotBipartite."""
    color = [-1] * g.n
    color[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if color[v] == -1:
                color[v] = 1 - color[u]
                stack.append(v)
            elif color[v] == color[u]:
                raise NotBipartite(f"odd cycle through edge ({u}, {v})")
    return ([v for v in range(g.n) if color[v] == 0],
            [v for v in range(g.n) if color[v] == 1])


# ---------------------------------------------------------------------------
# Strong / chain orderings


@dataclass(frozen=True)
class Ordering:
    """Paired orderings of the two sides of a bipartite graph.

    f/l map a vertex to the first/last index (0-based position) of its
    neighborhood in the opposite side's order.
    """

    x_order: Tuple[int, ...]
    y_order: Tuple[int, ...]
    f: Tuple[int, ...]   # by vertex id
    l: Tuple[int, ...]   # by vertex id

    @property
    def n1(self) -> int:
        return len(self.x_order)

    @property
    def n2(self) -> int:
        return len(self.y_order)


StrongOrdering = Ordering
ChainOrdering = Ordering


def _make_ordering(g: Graph, x_order: Sequence[int], y_order: Sequence[int]) -> Ordering:
    pos = [0] * g.n
    for i, v in enumerate(x_order):
        pos[v] = i
    for i, v in enumerate(y_order):
        pos[v] = i
    f = [0] * g.n
    l = [0] * g.n
    for v in list(x_order) + list(y_order):
        ps = [pos[w] for w in g.adj[v]]
        f[v] = min(ps)
        l[v] = max(ps)
    return Ordering(x_order=tuple(x_order), y_order=tuple(y_order),
                    f=tuple(f), l=tuple(l))


def verify_strong_ordering(g: Graph, o: Ordering,
                           quadruple_check: bool = True):
    """Check adjacency consecutiveness, f/l monotonicity and (optionally)
    the crossing-edge condition directly.

    Consecutive neighborhoods plus monotone f/l already imply the crossing
    condition; the direct quadruple scan is kept for small graphs as an
    independent check. Returns (True, None) or (False, violation).
    """
    pos = [0] * g.n
    for i, v in enumerate(o.x_order):
        pos[v] = i
    for i, v in enumerate(o.y_order):
        pos[v] = i
    for side, opposite in ((o.x_order, o.y_order), (o.y_order, o.x_order)):
        for v in side:
            ps = sorted(pos[w] for w in g.adj[v])
            if ps != list(range(ps[0], ps[0] + len(ps))):
                return False, ("non-consecutive neighborhood", v)
        prev_f = prev_l = -1
        for v in side:
            fv = min(pos[w] for w in g.adj[v])
            lv = max(pos[w] for w in g.adj[v])
            if fv < prev_f or lv < prev_l:
                return False, ("non-monotone f/l", v)
            prev_f, prev_l = fv, lv
    if quadruple_check and g.m <= 400:
        for (a, b) in g.edges:
            for (c, d) in g.edges:
                # orient as x-side, y-side
                ax, ay = (a, b) if pos_side(o, a) == "x" else (b, a)
                cx, cy = (c, d) if pos_side(o, c) == "x" else (d, c)
                if pos[ax] < pos[cx] and pos[cy] < pos[ay]:
                    if not (g.has_edge(ax, cy) and g.has_edge(cx, ay)):
                        return False, ("crossing condition", (ax, ay, cx, cy))
    return True, None


def pos_side(o: Ordering, v: int) -> str:
    return "x" if v in o.x_order else "y"


def compute_strong_ordering(g: Graph) -> Ordering:
    """Strong ordering by iterative (f, l) refinement, verified afterwards.

    Falls back to exhaustive search over orderings when both sides have at
    most 8 vertices; otherwise a refinement failure raises.
    """
    xs, ys = bipartition(g)
    x_order = sorted(xs)
    y_order = sorted(ys)
    for _ in range(2 * g.n):
        pos = [0] * g.n
        for i, v in enumerate(x_order):
            pos[v] = i
        for i, v in enumerate(y_order):
            pos[v] = i
        new_x = sorted(x_order, key=lambda v: (min(pos[w] for w in g.adj[v]),
                                               max(pos[w] for w in g.adj[v]), v))
        new_y = sorted(y_order, key=lambda v: (min(pos[w] for w in g.adj[v]),
                                               max(pos[w] for w in g.adj[v]), v))
        if new_x == x_order and new_y == y_order:
            break
        x_order, y_order = new_x, new_y
    o = _make_ordering(g, x_order, y_order)
    ok, _ = verify_strong_ordering(g, o)
    if ok:
        return o
    if len(xs) <= 8 and len(ys) <= 8:
        for px in itertools.permutations(sorted(xs)):
            for py in itertools.permutations(sorted(ys)):
                cand = _make_ordering(g, px, py)
                ok, _ = verify_strong_ordering(g, cand)
                if ok:
                    return cand
    _, violation = verify_strong_ordering(g, o)
    raise NotBipartitePermutation(f"no strong ordering found; refinement stuck at {violation}")


def compute_chain_ordering(g: Graph) -> Ordering:
    """Order one side by ascending neighborhood, the other descending, and
    verify the nesting. Ties broken by vertex id."""
    xs, ys = bipartition(g)
    x_order = sorted(xs, key=lambda v: (g.degree(v), v))
    y_order = sorted(ys, key=lambda v: (-g.degree(v), v))
    nbhs = {v: set(g.adj[v]) for v in xs}
    for u, v in zip(x_order, x_order[1:]):
        if not nbhs[u] <= nbhs[v]:
            raise NotChain(u, v)
    return _make_ordering(g, x_order, y_order)


def verify_chain_ordering(g: Graph, o: Ordering) -> bool:
    for u, v in zip(o.x_order, o.x_order[1:]):
        if not set(g.adj[u]) <= set(g.adj[v]):
            return False
    for u, v in zip(o.y_order, o.y_order[1:]):
        if not set(g.adj[u]) >= set(g.adj[v]):
            return False
    return True


# ---------------------------------------------------------------------------
# Classification


def classify_graph(g: Graph) -> Set[str]:
    if g.n == 1:
        return {"block", "cactus", "cograph"}
    labels: Set[str] = set()
    bd = block_decompose(g)
    if bd.is_block_graph():
        labels.add("block")
    if bd.is_cactus():
        labels.add("cactus")
    try:
        build_cotree(g)
        labels.add("cograph")
    except NotCograph:
        pass
    try:
        compute_chain_ordering(g)
        labels.add("chain")
    except (NotBipartite, NotChain):
        pass
    try:
        compute_strong_ordering(g)
        labels.add("bipartite-permutation")
    except (NotBipartite, NotBipartitePermutation):
        pass
    if "chain" in labels:
        # chain orderings are strong orderings
        labels.add("bipartite-permutation")
    return labels
