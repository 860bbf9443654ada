"""MIST for bipartite permutation graphs.

Alternating scan over a strong ordering: vertices that fail the type test
are peeled off as guaranteed tree leaves (attached to their last remaining
neighbor), and the residual graph is finished with a zig-zag Hamiltonian
path. One scan restart (type-1 search to type-2 search) can occur.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .graph import Graph, GraphError, SpanningTree, make_spanning_tree
from .recognition import Ordering, verify_strong_ordering


@dataclass(frozen=True)
class VertexType:
    is_type1: bool
    is_type2: bool


def vertex_type(g: Graph, o: Ordering, v: int) -> VertexType:
    """Type flags of v under the (full) ordering o."""
    if v in o.x_order:
        i = o.x_order.index(v) + 1
        j = o.l[v] + 1
        return VertexType(is_type1=j >= i, is_type2=j >= i + 1)
    i = o.y_order.index(v) + 1
    j = o.l[v] + 1
    return VertexType(is_type1=j >= i + 1, is_type2=j >= i)


class _Fenwick:
    __slots__ = ("n", "t")

    def __init__(self, n: int):
        self.n = n
        self.t = [0] * (n + 1)
        for i in range(1, n + 1):
            self.t[i] += 1
            j = i + (i & -i)
            if j <= n:
                self.t[j] += self.t[i]

    def add(self, i: int, delta: int) -> None:
        i += 1
        while i <= self.n:
            self.t[i] += delta
            i += i & -i

    def prefix(self, i: int) -> int:
        # alive count among positions 0..i
        i += 1
        s = 0
        while i > 0:
            s += self.t[i]
            i -= i & -i
        return s


class _Side:
    """One side of the bipartition: order, alive flags, rank queries."""

    def __init__(self, order: Tuple[int, ...]):
        self.order = list(order)
        self.pos = {v: i for i, v in enumerate(order)}
        self.alive = [True] * len(order)
        self.bit = _Fenwick(len(order))
        self.count = len(order)
        self.nxt = list(range(1, len(order))) + [-1]
        self.prv = [-1] + list(range(len(order) - 1))
        self.head = 0 if order else -1

    def rank(self, v: int) -> int:
        return self.bit.prefix(self.pos[v])   # 1-based among alive

    def delete(self, v: int) -> None:
        i = self.pos[v]
        self.alive[i] = False
        self.bit.add(i, -1)
        self.count -= 1
        p, n = self.prv[i], self.nxt[i]
        if p >= 0:
            self.nxt[p] = n
        else:
            self.head = n
        if n >= 0:
            self.prv[n] = p

    def next_alive(self, i: Optional[int]) -> int:
        # linked-list successor index, or head when i is None
        return self.head if i is None else self.nxt[i]

    def alive_list(self) -> List[int]:
        out = []
        i = self.head
        while i >= 0:
            out.append(self.order[i])
            i = self.nxt[i]
        return out


class _Scan:
    def __init__(self, g: Graph, o: Ordering):
        self.g = g
        self.x = _Side(o.x_order)
        self.y = _Side(o.y_order)
        self.side_of = {}
        for v in o.x_order:
            self.side_of[v] = "x"
        for v in o.y_order:
            self.side_of[v] = "y"
        # neighbors sorted by opposite-side position, with a lazy last pointer
        self.nbrs: List[Tuple[int, ...]] = [()] * g.n
        self.lastp = [0] * g.n
        for v in range(g.n):
            opp = self.y if self.side_of[v] == "x" else self.x
            ns = sorted(g.adj[v], key=lambda w: opp.pos[w])
            self.nbrs[v] = tuple(ns)
            self.lastp[v] = len(ns) - 1
        self.tree_edges: List[Tuple[int, int]] = []
        self.check_connectivity = g.n <= 100

    def last_neighbor(self, v: int) -> int:
        opp = self.y if self.side_of[v] == "x" else self.x
        ns = self.nbrs[v]
        p = self.lastp[v]
        while not opp.alive[opp.pos[ns[p]]]:
            p -= 1
            if p < 0:
                raise AssertionError(f"vertex {v} lost all neighbors")
        self.lastp[v] = p
        return ns[p]

    def peel(self, u: int) -> None:
        w = self.last_neighbor(u)
        self.tree_edges.append((w, u))
        side = self.x if self.side_of[u] == "x" else self.y
        side.delete(u)
        if self.check_connectivity:
            self._assert_connected()

    def _assert_connected(self) -> None:
        alive = set(self.x.alive_list()) | set(self.y.alive_list())
        if not alive:
            raise AssertionError("residual graph empty")
        start = next(iter(alive))
        seen = {start}
        stack = [start]
        while stack:
            a = stack.pop()
            for b in self.g.adj[a]:
                if b in alive and b not in seen:
                    seen.add(b)
                    stack.append(b)
        if seen != alive:
            raise AssertionError("deletion disconnected the residual graph")

    def emit_zigzag(self, first_side: str) -> None:
        xs = self.x.alive_list()
        ys = self.y.alive_list()
        a, b = (xs, ys) if first_side == "x" else (ys, xs)
        path: List[int] = []
        for i in range(max(len(a), len(b))):
            if i < len(a):
                path.append(a[i])
            if i < len(b):
                path.append(b[i])
        if self.check_connectivity:
            # redundant with final tree validation, but gives a sharper error
            for p, q in zip(path, path[1:]):
                if not self.g.has_edge(p, q):
                    raise AssertionError(
                        f"terminal zig-zag uses non-edge ({p}, {q}); construction bug")
        self.tree_edges.extend(zip(path, path[1:]))


def solve_bp(g: Graph, o: Ordering, verify: bool = True) -> SpanningTree:
    """Run the typed alternating scan; returns a MIST of g."""
    if g.n == 1:
        return SpanningTree(n=1, edges=())
    if verify:
        ok, violation = verify_strong_ordering(g, o, quadruple_check=False)
        if not ok:
            raise GraphError(f"ordering is not strong: {violation}")

    st = _Scan(g, o)
    x, y = st.x, st.y

    # --- search for vertices failing the type-1 test, in order x1,y1,x2,...
    ix = iy = 0                 # ranks confirmed type 1 on each side
    cx = x.next_alive(None)     # linked-list index of x-rank ix+1
    cy = y.next_alive(None)
    flag = 1
    # incrementally verified prefix of the scan-restart test
    tcheck = 0
    tnode = -1                  # linked-list index of x-rank tcheck

    while flag == 1:
        take_x = (ix == iy and cx >= 0) or cy < 0
        if cx < 0 and cy < 0:
            raise AssertionError("type-1 scan exhausted without an encounter")
        if take_x:
            v = x.order[cx]
            lrank = y.rank(st.last_neighbor(v))
            if lrank >= ix + 1:
                ix += 1
                cx = x.next_alive(cx)
                continue
            # encountered: u = x_{k+1}, k = ix, attachment y_k = l(u)
            if ix + 1 == x.count:
                if y.count != ix:
                    raise AssertionError("terminal x-case with mismatched sides")
                st.emit_zigzag("x")
                flag = 0
            else:
                st.peel(v)
                cx = x.next_alive(x.prv[cx]) if x.prv[cx] >= 0 else x.head
        else:
            v = y.order[cy]
            lrank = x.rank(st.last_neighbor(v))
            if lrank >= iy + 2:
                iy += 1
                cy = y.next_alive(cy)
                continue
            # encountered: u = y_k, k = iy + 1
            k = iy + 1
            # test x_i y_{i+1} in E for all i < k, via l(x_i) rank >= i + 1
            while tcheck < k - 1:
                nxt = x.next_alive(tnode if tcheck else None)
                xv = x.order[nxt]
                if x.rank(xv) != tcheck + 1:
                    raise AssertionError("test pointer out of sync")
                if y.rank(st.last_neighbor(xv)) >= tcheck + 2:
                    tcheck += 1
                    tnode = nxt
                else:
                    break
            if tcheck >= k - 1:
                flag = 2
                break
            if k == y.count:
                if x.count != k:
                    raise AssertionError("terminal y-case with mismatched sides")
                st.emit_zigzag("x")
                flag = 0
            else:
                st.peel(v)
                cy = y.next_alive(y.prv[cy]) if y.prv[cy] >= 0 else y.head

    # --- restart: search for vertices failing the type-2 test, order y1,x1,...
    while flag == 2:
        ix = iy = 0
        cx = x.next_alive(None)
        cy = y.next_alive(None)
        while True:
            take_y = (iy == ix and cy >= 0) or cx < 0
            if cx < 0 and cy < 0:
                raise AssertionError("type-2 scan exhausted without an encounter")
            if take_y:
                v = y.order[cy]
                lrank = x.rank(st.last_neighbor(v))
                if lrank >= iy + 1:
                    iy += 1
                    cy = y.next_alive(cy)
                    continue
                if iy + 1 == y.count:
                    if x.count != iy:
                        raise AssertionError("terminal y-case with mismatched sides")
                    st.emit_zigzag("y")
                else:
                    st.peel(v)
                    cy = y.next_alive(y.prv[cy]) if y.prv[cy] >= 0 else y.head
                    continue
            else:
                v = x.order[cx]
                lrank = y.rank(st.last_neighbor(v))
                if lrank >= ix + 2:
                    ix += 1
                    cx = x.next_alive(cx)
                    continue
                if ix + 1 == x.count:
                    if y.count != ix + 1:
                        raise AssertionError("terminal x-case with mismatched sides")
                    st.emit_zigzag("y")
                else:
                    st.peel(v)
                    cx = x.next_alive(x.prv[cx]) if x.prv[cx] >= 0 else x.head
                    continue
            flag = 0
            break

    t = make_spanning_tree(g, st.tree_edges)
    return t
