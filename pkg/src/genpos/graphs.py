"""Immutable simple graphs with bitset adjacency, distances and basic derived graphs.

Vertices are dense integer labels 0..n-1.  Every vertex set in this package is
either a frozenset of labels (public API) or an int bitmask (internals); the
helpers ``to_mask`` / ``from_mask`` convert between the two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError

INF = math.inf


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.  adj[i] is the neighbor bitmask of vertex i."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph order must be at least 1")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {i} references vertices >= n")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
        for i in range(self.n):
            for j in iter_bits(self.adj[i]):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i},{j})")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def vertices_mask(self) -> int:
        return (1 << self.n) - 1


class DistanceMatrix:
    """All-pairs hop distances with the derived strict-betweenness predicate.

    ``dist[u][v]`` is an int hop count or ``INF`` across components.  The
    blocker mask of an unordered pair (u,v) is the bitmask of vertices w with
    w != u, w != v and d(u,w) + d(w,v) = d(u,v), i.e. the strict interiors of
    the u,v-geodesics.
    """

    def __init__(self, dist: list[list[float]]):
        self.dist = dist
        self.n = len(dist)
        self._blockers: list[list[int]] | None = None
        self._rowunion: list[int] | None = None

    def __getitem__(self, pair: tuple[int, int]) -> float:
        u, v = pair
        return self.dist[u][v]

    def between(self, u: int, w: int, v: int) -> bool:
        """True when w lies strictly inside some shortest u,v-path."""
        if w == u or w == v:
            return False
        duv = self.dist[u][v]
        if duv == INF:
            return False
        return self.dist[u][w] + self.dist[w][v] == duv

    @property
    def blockers(self) -> list[list[int]]:
        if self._blockers is None:
            n = self.n
            dist = self.dist
            table = [[0] * n for _ in range(n)]
            for u in range(n):
                du = dist[u]
                for v in range(u + 1, n):
                    duv = du[v]
                    if duv == INF or duv <= 1:
                        continue
                    dv = dist[v]
                    m = 0
                    for w in range(n):
                        if w != u and w != v and du[w] + dv[w] == duv:
                            m |= 1 << w
                    table[u][v] = m
                    table[v][u] = m
            self._blockers = table
        return self._blockers

    @property
    def rowunion(self) -> list[int]:
        """rowunion[u] = union of blocker masks over all pairs (u, v)."""
        if self._rowunion is None:
            blockers = self.blockers
            self._rowunion = [0] * self.n
            for u in range(self.n):
                acc = 0
                for v in range(self.n):
                    acc |= blockers[u][v]
                self._rowunion[u] = acc
        return self._rowunion

    def all_blockers_union(self) -> int:
        acc = 0
        for m in self.rowunion:
            acc |= m
        return acc

    def is_connected_matrix(self) -> bool:
        return all(d != INF for row in self.dist for d in row)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; INF across components."""
    n = g.n
    adj = g.adj
    dist: list[list[float]] = []
    for s in range(n):
        row: list[float] = [INF] * n
        seen = 1 << s
        frontier = 1 << s
        d = 0
        while frontier:
            for v in iter_bits(frontier):
                row[v] = d
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            d += 1
        dist.append(row)
    return DistanceMatrix(dist)


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.vertices_mask()


def require_connected(g: Graph, op: str) -> None:
    if not is_connected(g):
        raise DomainError(f"{op} requires a connected graph")


def diameter(g: Graph) -> int:
    require_connected(g, "diameter")
    dm = all_pairs_distances(g)
    return int(max(max(row) for row in dm.dist))


def complement(g: Graph) -> Graph:
    full = g.vertices_mask()
    rows = tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n))
    return Graph(g.n, rows)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all cross edges; g keeps labels, h is shifted by g.n."""
    n = g.n + h.n
    gmask = g.vertices_mask()
    hmask = ((1 << h.n) - 1) << g.n
    rows = [g.adj[v] | hmask for v in range(g.n)]
    rows += [(h.adj[v] << g.n) | gmask for v in range(h.n)]
    return Graph(n, tuple(rows))


def disjoint_union(parts: list[Graph]) -> Graph:
    if not parts:
        raise ValueError("disjoint union of zero graphs")
    rows: list[int] = []
    shift = 0
    for p in parts:
        rows.extend(p.adj[v] << shift for v in range(p.n))
        shift += p.n
    return Graph(shift, tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``vertices`` plus the label map new index -> old label."""
    labels = tuple(sorted(set(vertices)))
    index = {old: new for new, old in enumerate(labels)}
    rows = [0] * len(labels)
    for new, old in enumerate(labels):
        for w in iter_bits(g.adj[old]):
            if w in index:
                rows[new] |= 1 << index[w]
    return Graph(len(labels), tuple(rows)), labels


def true_twin_pairs(g: Graph) -> frozenset[tuple[int, int]]:
    """Pairs u < v with equal closed neighborhoods (necessarily adjacent)."""
    closed = [g.closed_neighborhood(v) for v in range(g.n)]
    return frozenset(
        (u, v)
        for u in range(g.n)
        for v in iter_bits(g.adj[u])
        if u < v and closed[u] == closed[v]
    )


def remove_true_twin_edges(g: Graph) -> Graph:
    """Delete the edge of every true-twin pair, all pairs taken on the input graph."""
    rows = list(g.adj)
    for u, v in true_twin_pairs(g):
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def is_clique_mask(g: Graph, mask: int) -> bool:
    for v in iter_bits(mask):
        if mask & ~g.closed_neighborhood(v):
            return False
    return True


def simplicial_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if is_clique_mask(g, g.adj[v]))


def basic_counts(g: Graph) -> tuple[int, int, int]:
    """(order, number of leaves, maximum degree)."""
    degs = [g.degree(v) for v in range(g.n)]
    return g.n, sum(1 for d in degs if d == 1), max(degs)


def is_complete(g: Graph) -> bool:
    return all(g.degree(v) == g.n - 1 for v in range(g.n))


def universal_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) == g.n - 1)


def is_block_graph(g: Graph) -> bool:
    """Connected and every biconnected block induces a clique."""
    if not is_connected(g):
        return False
    for block in _biconnected_blocks(g):
        if not is_clique_mask(g, to_mask(block)):
            return False
    return True


def _biconnected_blocks(g: Graph) -> list[set[int]]:
    """Vertex sets of the biconnected components (iterative Hopcroft-Tarjan)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    blocks: list[set[int]] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack = [(root, iter(list(iter_bits(g.adj[root]))))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    parent[w] = v
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, iter(list(iter_bits(g.adj[w])))))
                    advanced = True
                    break
                if w != parent[v] and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block: set[int] = set()
                    while True:
                        a, b = edge_stack.pop()
                        block.update((a, b))
                        if (a, b) == (u, v):
                            break
                    blocks.append(block)
    return blocks
