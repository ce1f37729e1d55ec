"""k-uniform hypergraphs: construction, ``.khg`` I/O, generation and metric queries.

Vertices are the dense integers ``1..n``. Edges are stored as strictly
increasing tuples and the edge list is kept in lexicographic order, so two
hypergraphs with the same edge set compare (and hash) equal.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

__all__ = [
    "HypergraphError",
    "KhgParseError",
    "Hypergraph",
    "DegreeProfile",
    "HyperPath",
    "parse_khg",
    "read_khg",
    "to_khg",
    "degree_profile",
    "is_regular",
    "components",
    "is_connected",
    "distance",
    "diameter",
    "shortest_path",
    "delete_edge",
    "complete_hypergraph",
    "gen_random",
    "gen_random_connected",
    "gen_planted_odd_bipartite",
    "enumerate_connected",
]


class HypergraphError(ValueError):
    """Invalid hypergraph data or a query that does not apply to the input."""


class KhgParseError(HypergraphError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Hypergraph:
    """A k-uniform hypergraph on vertices ``1..n``.

    ``edges`` may be given in any order and with unsorted vertices; it is
    canonicalized on construction. Duplicate edges are rejected.
    """

    k: int
    n: int
    edges: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        k, n = int(self.k), int(self.n)
        if k < 2:
            raise HypergraphError(f"uniformity k must be >= 2, got {k}")
        if n < 0:
            raise HypergraphError(f"vertex count must be >= 0, got {n}")
        canon = []
        for edge in self.edges:
            e = tuple(sorted(int(v) for v in edge))
            _check_edge(e, k, n)
            canon.append(e)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise HypergraphError(f"duplicate edge {a}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_array(self) -> np.ndarray:
        """Zero-based ``(m, k)`` integer array of edge members."""
        if not self.edges:
            return np.zeros((0, self.k), dtype=np.intp)
        return np.asarray(self.edges, dtype=np.intp) - 1

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """``incidence[v-1]`` lists the indices of edges containing ``v``."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for idx, e in enumerate(self.edges):
            for v in e:
                inc[v - 1].append(idx)
        return tuple(tuple(row) for row in inc)

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.bincount(self.edge_array.ravel(), minlength=self.n).astype(np.int64)

    def __contains__(self, edge) -> bool:
        e = tuple(sorted(edge))
        return e in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def __repr__(self) -> str:
        return f"Hypergraph(k={self.k}, n={self.n}, m={self.m})"


def _check_edge(e: tuple[int, ...], k: int, n: int, lineno: int | None = None) -> None:
    err = KhgParseError if lineno is not None else HypergraphError
    args = (lineno,) if lineno is not None else ()
    if len(e) != k:
        raise err(f"edge {e} has {len(e)} vertices, expected {k}", *args)
    for v in e:
        if not 1 <= v <= n:
            raise err(f"vertex {v} out of range 1..{n}", *args)
    for a, b in zip(e, e[1:]):
        if a == b:
            raise err(f"repeated vertex {a} in edge {e}", *args)


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    delta_max: int
    delta_min: int
    handshake: int


@dataclass(frozen=True)
class HyperPath:
    """Alternating vertex/edge sequence ``u_0, e_1, u_1, ..., e_r, u_r``."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, ...], ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def is_valid(self, H: Hypergraph | None = None) -> bool:
        if len(self.vertices) != len(self.edges) + 1:
            return False
        if len(set(self.vertices)) != len(self.vertices):
            return False
        if len(set(self.edges)) != len(self.edges):
            return False
        for i, e in enumerate(self.edges):
            if self.vertices[i] not in e or self.vertices[i + 1] not in e:
                return False
            if H is not None and e not in H:
                return False
        return True


# --------------------------------------------------------------------------
# .khg I/O


def parse_khg(text: str) -> Hypergraph:
    """Parse ``.khg`` text: ``#`` comments, a ``k n m`` header, then m edge lines."""
    header = None
    edges: list[tuple[int, ...]] = []
    seen: dict[tuple[int, ...], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            fields = [int(tok) for tok in line.split()]
        except ValueError:
            raise KhgParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(fields) != 3:
                raise KhgParseError("header must be 'k n m'", lineno)
            k, n, m = fields
            if k < 2 or n < 0 or m < 0:
                raise KhgParseError(f"invalid header values k={k} n={n} m={m}", lineno)
            header = (k, n, m)
            continue
        k, n, m = header
        if len(edges) == m:
            raise KhgParseError(f"more than the declared {m} edges", lineno)
        e = tuple(sorted(fields))
        _check_edge(e, k, n, lineno)
        if e in seen:
            raise KhgParseError(f"duplicate edge {e} (first on line {seen[e]})", lineno)
        seen[e] = lineno
        edges.append(e)
    if header is None:
        raise KhgParseError("missing header line", None)
    if len(edges) != header[2]:
        raise KhgParseError(f"expected {header[2]} edges, found {len(edges)}", None)
    return Hypergraph(header[0], header[1], tuple(edges))


def read_khg(path) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_khg(fh.read())


def to_khg(H: Hypergraph) -> str:
    lines = [f"{H.k} {H.n} {H.m}"]
    lines.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# degrees, connectivity, distances


def degree_profile(H: Hypergraph) -> DegreeProfile:
    d = H.degrees
    if H.n == 0:
        return DegreeProfile((), 0, 0, 0)
    return DegreeProfile(tuple(int(v) for v in d), int(d.max()), int(d.min()), int(d.sum()))


def is_regular(H: Hypergraph) -> bool:
    p = degree_profile(H)
    return p.delta_min == p.delta_max


def _bfs(H: Hypergraph, source: int) -> tuple[list[int], list[int | None]]:
    """Distances (-1 when unreachable) and parent edge index from ``source``."""
    dist = [-1] * (H.n + 1)
    parent: list[int | None] = [None] * (H.n + 1)
    dist[source] = 0
    queue = deque([source])
    while queue:
        w = queue.popleft()
        for ei in H.incidence[w - 1]:
            for z in H.edges[ei]:
                if dist[z] < 0:
                    dist[z] = dist[w] + 1
                    parent[z] = ei
                    queue.append(z)
    return dist, parent


def components(H: Hypergraph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    seen = [False] * (H.n + 1)
    out = []
    for s in range(1, H.n + 1):
        if seen[s]:
            continue
        dist, _ = _bfs(H, s)
        comp = frozenset(v for v in range(1, H.n + 1) if dist[v] >= 0)
        for v in comp:
            seen[v] = True
        out.append(comp)
    return out


def is_connected(H: Hypergraph) -> bool:
    return len(components(H)) == 1


def _check_vertex(H: Hypergraph, v: int) -> None:
    if not 1 <= v <= H.n:
        raise HypergraphError(f"vertex {v} out of range 1..{H.n}")


def distance(H: Hypergraph, u: int, v: int) -> int:
    """Number of edges on a shortest u-v path."""
    _check_vertex(H, u)
    _check_vertex(H, v)
    d = _bfs(H, u)[0][v]
    if d < 0:
        raise HypergraphError(f"vertices {u} and {v} are not connected")
    return d


def diameter(H: Hypergraph) -> int:
    if H.n == 0:
        raise HypergraphError("diameter of the empty hypergraph is undefined")
    best = 0
    for s in range(1, H.n + 1):
        dist = _bfs(H, s)[0][1:]
        if min(dist) < 0:
            raise HypergraphError("diameter requires a connected hypergraph")
        best = max(best, max(dist))
    return best


def shortest_path(H: Hypergraph, u: int, v: int) -> HyperPath:
    """A shortest path from u to v, found by breadth-first search."""
    _check_vertex(H, u)
    _check_vertex(H, v)
    dist, parent = _bfs(H, u)
    if dist[v] < 0:
        raise HypergraphError(f"vertices {u} and {v} are not connected")
    verts, edges = [v], []
    w = v
    while w != u:
        e = H.edges[parent[w]]
        # BFS tree: the previous vertex is the member of e one layer closer.
        prev = next(z for z in e if dist[z] == dist[w] - 1)
        edges.append(e)
        verts.append(prev)
        w = prev
    return HyperPath(tuple(reversed(verts)), tuple(reversed(edges)))


def delete_edge(H: Hypergraph, edge: Iterable[int]) -> Hypergraph:
    e = tuple(sorted(edge))
    if e not in H:
        raise HypergraphError(f"edge {e} not in hypergraph")
    return Hypergraph(H.k, H.n, tuple(x for x in H.edges if x != e))


# --------------------------------------------------------------------------
# generators


def complete_hypergraph(n: int, k: int) -> Hypergraph:
    return Hypergraph(k, n, tuple(itertools.combinations(range(1, n + 1), k)))


def _unrank_combination(rank: int, n: int, k: int) -> tuple[int, ...]:
    """The ``rank``-th k-subset of 1..n in lexicographic order."""
    out = []
    x = 1
    for remaining in range(k, 0, -1):
        while True:
            c = math.comb(n - x, remaining - 1)
            if rank < c:
                break
            rank -= c
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def _check_gen_args(n: int, k: int) -> None:
    if k < 2:
        raise HypergraphError(f"k must be >= 2, got {k}")
    if k > n:
        raise HypergraphError(f"k={k} exceeds n={n}")


def gen_random(n: int, k: int, m: int, seed) -> Hypergraph:
    """m distinct k-subsets of 1..n drawn uniformly without replacement."""
    _check_gen_args(n, k)
    total = math.comb(n, k)
    if not 0 <= m <= total:
        raise HypergraphError(f"m={m} outside 0..C({n},{k})={total}")
    rng = random.Random(seed)
    ranks = rng.sample(range(total), m)
    return Hypergraph(k, n, tuple(_unrank_combination(r, n, k) for r in ranks))


def gen_random_connected(n: int, k: int, seed, max_tries: int = 10_000) -> Hypergraph:
    """Rejection-sample a connected instance; the edge count is drawn uniformly
    between the connectivity minimum ``ceil((n-1)/(k-1))`` and ``C(n, k)``."""
    _check_gen_args(n, k)
    rng = random.Random(seed)
    lo, hi = max(1, -(-(n - 1) // (k - 1))), math.comb(n, k)
    for _ in range(max_tries):
        H = gen_random(n, k, rng.randint(lo, hi), rng.getrandbits(64))
        if is_connected(H):
            return H
    raise HypergraphError(f"no connected instance after {max_tries} draws")


def gen_planted_odd_bipartite(n: int, k: int, seed, max_tries: int = 10_000) -> tuple[Hypergraph, frozenset[int]]:
    """Connected k-graph whose every edge meets a planted class V1 oddly.

    Returns the hypergraph and the planted V1.
    """
    _check_gen_args(n, k)
    if n < 2:
        raise HypergraphError("need at least two vertices")
    rng = random.Random(seed)
    for _ in range(max_tries):
        v1 = frozenset(rng.sample(range(1, n + 1), rng.randint(1, n - 1)))
        pool = [e for e in itertools.combinations(range(1, n + 1), k) if len(v1.intersection(e)) % 2]
        if not pool:
            continue
        lo = max(1, -(-(n - 1) // (k - 1)))
        if lo > len(pool):
            continue
        H = Hypergraph(k, n, tuple(rng.sample(pool, rng.randint(lo, len(pool)))))
        if is_connected(H):
            return H, v1
    raise HypergraphError(f"no connected planted instance after {max_tries} draws")


def _mask_connected(masks: tuple[int, ...], full: int) -> bool:
    reach = masks[0]
    pending = list(masks[1:])
    grew = True
    while grew and pending:
        grew = False
        rest = []
        for mk in pending:
            if mk & reach:
                reach |= mk
                grew = True
            else:
                rest.append(mk)
        pending = rest
    return reach == full


def enumerate_connected(n: int, k: int, max_edges: int | None = None) -> Iterator[Hypergraph]:
    """Every connected labeled k-graph on vertices 1..n, by edge count then
    lexicographically. ``max_edges`` truncates the sweep.

    The number of candidates is ``2**C(n, k)``; keep n <= 6.
    """
    _check_gen_args(n, k)
    all_edges = list(itertools.combinations(range(1, n + 1), k))
    masks = [sum(1 << (v - 1) for v in e) for e in all_edges]
    full = (1 << n) - 1
    top = len(all_edges) if max_edges is None else min(max_edges, len(all_edges))
    lo = max(1, -(-(n - 1) // (k - 1)))
    for m in range(lo, top + 1):
        for idx in itertools.combinations(range(len(all_edges)), m):
            if _mask_connected(tuple(masks[i] for i in idx), full):
                yield Hypergraph(k, n, tuple(all_edges[i] for i in idx))
