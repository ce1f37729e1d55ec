"""Edge-connectivity and odd-bipartiteness of k-graphs.

Edge-disjoint path counts come from max flow on the vertex/edge incidence
network, where each hyperedge is a node of capacity one. Odd-bipartitions are
solutions of the GF(2) system ``sum_{v in e} s_v = 1`` for every edge ``e``.
Each has an exhaustive counterpart for small inputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .hypergraph import Hypergraph, HyperPath, HypergraphError, is_connected

__all__ = [
    "ConnectivityResult",
    "OddBipartition",
    "edge_disjoint_path_count",
    "edge_disjoint_path_count_brute",
    "simple_paths",
    "edge_connectivity",
    "odd_bipartition",
    "odd_bipartition_brute",
    "is_odd_bipartition",
]


@dataclass(frozen=True)
class ConnectivityResult:
    f: int
    min_pair: tuple[int, int]
    witness: tuple[HyperPath, ...]


@dataclass(frozen=True)
class OddBipartition:
    v1: frozenset[int] | None

    @property
    def exists(self) -> bool:
        return self.v1 is not None


# --------------------------------------------------------------------------
# edge-disjoint paths


class _FlowNetwork:
    """Residual network with paired arcs; arc ``a ^ 1`` is the reverse of ``a``."""

    def __init__(self, n_nodes: int):
        self.adj: list[list[int]] = [[] for _ in range(n_nodes)]
        self.head: list[int] = []
        self.cap: list[int] = []

    def add_arc(self, a: int, b: int, cap: int) -> None:
        self.adj[a].append(len(self.head))
        self.head.append(b)
        self.cap.append(cap)
        self.adj[b].append(len(self.head))
        self.head.append(a)
        self.cap.append(0)

    def max_flow(self, s: int, t: int) -> int:
        """Edmonds-Karp: augment along shortest residual paths."""
        flow = 0
        while True:
            pred = [-1] * len(self.adj)
            pred[s] = -2
            queue = deque([s])
            while queue and pred[t] == -1:
                a = queue.popleft()
                for arc in self.adj[a]:
                    b = self.head[arc]
                    if self.cap[arc] > 0 and pred[b] == -1:
                        pred[b] = arc
                        queue.append(b)
            if pred[t] == -1:
                return flow
            # unit bottleneck: every s-t path crosses a capacity-one edge node
            b = t
            while b != s:
                arc = pred[b]
                self.cap[arc] -= 1
                self.cap[arc ^ 1] += 1
                b = self.head[arc ^ 1]
            flow += 1


def _build_network(H: Hypergraph) -> _FlowNetwork:
    # nodes: vertex v -> v-1; edge i -> n+2i (in), n+2i+1 (out)
    net = _FlowNetwork(H.n + 2 * H.m)
    big = H.m + 1
    for i, e in enumerate(H.edges):
        e_in, e_out = H.n + 2 * i, H.n + 2 * i + 1
        for v in e:
            net.add_arc(v - 1, e_in, big)
        net.add_arc(e_in, e_out, 1)
        for v in e:
            net.add_arc(e_out, v - 1, big)
    return net


def _strip_loops(verts: list[int], edges: list[tuple[int, ...]]) -> HyperPath:
    out_v: list[int] = []
    out_e: list[tuple[int, ...]] = []
    pos: dict[int, int] = {}
    for i, v in enumerate(verts):
        if v in pos:
            cut = pos[v]
            for w in out_v[cut + 1:]:
                del pos[w]
            del out_v[cut + 1:]
            del out_e[cut:]
        else:
            pos[v] = len(out_v)
            out_v.append(v)
        if i < len(edges):
            out_e.append(edges[i])
    return HyperPath(tuple(out_v), tuple(out_e[: len(out_v) - 1]))


def _decompose(H: Hypergraph, net: _FlowNetwork, u: int, v: int, count: int) -> list[HyperPath]:
    # flow on a forward arc = capacity of its reverse twin
    used = {arc: net.cap[arc ^ 1] for arc in range(0, len(net.head), 2) if net.cap[arc ^ 1] > 0}
    paths = []
    for _ in range(count):
        node = u - 1
        verts, edges = [u], []
        while node != v - 1:
            arc = next(a for a in net.adj[node] if a % 2 == 0 and used.get(a, 0) > 0)
            used[arc] -= 1
            nxt = net.head[arc]
            if nxt >= H.n:
                ei = (nxt - H.n) // 2
                if nxt == H.n + 2 * ei:
                    edges.append(H.edges[ei])
            else:
                verts.append(nxt + 1)
            node = nxt
        paths.append(_strip_loops(verts, edges))
    return paths


def edge_disjoint_path_count(H: Hypergraph, u: int, v: int) -> tuple[int, list[HyperPath]]:
    """Maximum number of pairwise edge-disjoint u-v paths, with witnesses."""
    if u == v:
        raise HypergraphError("endpoints must differ")
    if not is_connected(H):
        raise HypergraphError("edge-disjoint path count needs a connected hypergraph")
    net = _build_network(H)
    count = net.max_flow(u - 1, v - 1)
    return count, _decompose(H, net, u, v, count)


def simple_paths(H: Hypergraph, u: int, v: int) -> list[HyperPath]:
    """All u-v paths (distinct vertices, distinct edges) by depth-first search."""
    out = []

    def extend(verts: list[int], edges: list[tuple[int, ...]]):
        w = verts[-1]
        if w == v:
            out.append(HyperPath(tuple(verts), tuple(edges)))
            return
        for ei in H.incidence[w - 1]:
            e = H.edges[ei]
            if e in edges:
                continue
            for z in e:
                if z not in verts:
                    verts.append(z)
                    edges.append(e)
                    extend(verts, edges)
                    verts.pop()
                    edges.pop()

    extend([u], [])
    return out


def edge_disjoint_path_count_brute(H: Hypergraph, u: int, v: int) -> int:
    """Largest packing of pairwise edge-disjoint u-v paths by exhaustive search."""
    if u == v:
        raise HypergraphError("endpoints must differ")
    index = {e: i for i, e in enumerate(H.edges)}
    masks = sorted({sum(1 << index[e] for e in p.edges) for p in simple_paths(H, u, v)})
    # only inclusion-minimal edge sets matter for a packing
    minimal = [a for a in masks if not any(b != a and b & a == b for b in masks)]

    best = 0

    def search(start: int, taken: int, count: int):
        nonlocal best
        best = max(best, count)
        for i in range(start, len(minimal)):
            if minimal[i] & taken == 0:
                search(i + 1, taken | minimal[i], count + 1)

    search(0, 0, 0)
    return best


def edge_connectivity(H: Hypergraph) -> ConnectivityResult:
    """Global edge-connectivity f as min over v of the (1, v) path count."""
    if H.n < 2:
        raise HypergraphError("edge connectivity needs at least two vertices")
    if not is_connected(H):
        raise HypergraphError("edge connectivity needs a connected hypergraph")
    best = None
    for v in range(2, H.n + 1):
        net = _build_network(H)
        c = net.max_flow(0, v - 1)
        if best is None or c < best[0]:
            best = (c, v, net)
    c, v, net = best
    return ConnectivityResult(c, (1, v), tuple(_decompose(H, net, 1, v, c)))


# --------------------------------------------------------------------------
# odd-bipartiteness


def is_odd_bipartition(H: Hypergraph, v1) -> bool:
    v1 = frozenset(v1)
    if not v1 or len(v1) >= H.n or not v1 <= set(range(1, H.n + 1)):
        return False
    return all(len(v1.intersection(e)) % 2 == 1 for e in H.edges)


def odd_bipartition(H: Hypergraph) -> OddBipartition:
    """Solve ``sum_{v in e} s_v = 1 (mod 2)`` over all edges by elimination.

    Rows are int bitsets: bit ``v-1`` for vertex v, bit n for the right-hand
    side. Free variables default to 0.
    """
    if H.m == 0:
        raise HypergraphError("odd-bipartiteness needs at least one edge")
    n = H.n
    rhs = 1 << n
    rows = [sum(1 << (v - 1) for v in e) | rhs for e in H.edges]
    pivots: list[tuple[int, int]] = []  # (column, row)
    r = 0
    for col in range(n):
        bit = 1 << col
        p = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivots.append((col, r))
        r += 1
    if any(row == rhs for row in rows[r:]):
        return OddBipartition(None)
    sol = 0
    for col, row in pivots:
        if rows[row] & rhs:
            sol |= 1 << col
    full = (1 << n) - 1
    if sol == full:
        # only possible for odd k; any nonzero kernel vector gives a proper solution
        pivot_cols = {c for c, _ in pivots}
        free = next((c for c in range(n) if c not in pivot_cols), None)
        if free is None:
            return OddBipartition(None)
        kernel = 1 << free
        for col, row in pivots:
            if rows[row] & (1 << free):
                kernel |= 1 << col
        sol ^= kernel
    return OddBipartition(frozenset(v + 1 for v in range(n) if sol >> v & 1))


def odd_bipartition_brute(H: Hypergraph, max_n: int = 20) -> OddBipartition:
    """Scan every proper nonempty subset; returns the one with smallest bitmask."""
    if H.n > max_n:
        raise HypergraphError(f"brute force limited to n <= {max_n}, got {H.n}")
    if H.n < 2:
        return OddBipartition(None)
    subsets = np.arange(1, (1 << H.n) - 1, dtype=np.int64)
    ok = np.ones(subsets.shape, dtype=bool)
    for e in H.edges:
        mask = sum(1 << (v - 1) for v in e)
        ok &= (np.bitwise_count(subsets & mask) & 1).astype(bool)
    hits = np.flatnonzero(ok)
    if hits.size == 0:
        return OddBipartition(None)
    s = int(subsets[hits[0]])
    return OddBipartition(frozenset(v + 1 for v in range(H.n) if s >> v & 1))
