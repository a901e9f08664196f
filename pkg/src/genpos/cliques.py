"""Exact maximum clique / independence solvers on bitset graphs.

Branch and bound in degeneracy order with a greedy-coloring upper bound;
deterministic (ties broken by lowest label), so witnesses are reproducible.
Works on disconnected inputs, which strong resolving graphs often are.
"""

from __future__ import annotations

from .errors import DomainError
from .graphs import (
    Graph,
    all_pairs_distances,
    complement,
    from_mask,
    is_connected,
    iter_bits,
)


def _degeneracy_order(g: Graph) -> list[int]:
    remaining = g.vertices_mask()
    order = []
    while remaining:
        best_v, best_d = -1, g.n + 1
        for v in iter_bits(remaining):
            d = (g.adj[v] & remaining).bit_count()
            if d < best_d:
                best_v, best_d = v, d
        order.append(best_v)
        remaining &= ~(1 << best_v)
    return order


def max_clique(g: Graph) -> tuple[int, frozenset[int]]:
    """Exact clique number with a witness clique."""
    adj = g.adj

    # Greedy clique along reverse degeneracy order seeds the lower bound.
    seed = 0
    cand = g.vertices_mask()
    for v in reversed(_degeneracy_order(g)):
        if cand >> v & 1:
            seed |= 1 << v
            cand &= adj[v]
    best_size = seed.bit_count()
    best_mask = seed

    def coloring(cand: int) -> list[tuple[int, int]]:
        # Greedy coloring of the candidate set; (vertex, color) pairs with
        # colors nondecreasing.  Reversed, this is the branching order.
        out: list[tuple[int, int]] = []
        color = 0
        left = cand
        while left:
            color += 1
            avail = left
            while avail:
                v = (avail & -avail).bit_length() - 1
                out.append((v, color))
                left &= ~(1 << v)
                avail &= ~adj[v] & ~(1 << v)
        return out

    def expand(clique: int, size: int, cand: int) -> None:
        nonlocal best_size, best_mask
        for v, color in reversed(coloring(cand)):
            if size + color <= best_size:
                return
            new_clique = clique | 1 << v
            new_cand = cand & adj[v]
            if size + 1 > best_size:
                best_size = size + 1
                best_mask = new_clique
            if new_cand:
                expand(new_clique, size + 1, new_cand)
            cand &= ~(1 << v)

    expand(0, 0, g.vertices_mask())
    return best_size, from_mask(best_mask)


def independence_number(g: Graph) -> tuple[int, frozenset[int]]:
    """Exact independence number via a clique search on the complement."""
    return max_clique(complement(g))


def alpha_k(g: Graph, k: int) -> tuple[int, frozenset[int]]:
    """Largest set with pairwise distance > k; alpha_1 is the independence number."""
    if k < 1:
        raise DomainError("alpha_k requires k >= 1")
    if not is_connected(g):
        raise DomainError("alpha_k requires a connected graph")
    dm = all_pairs_distances(g)
    rows = [0] * g.n
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if dm.dist[u][v] > k:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return max_clique(Graph(g.n, tuple(rows)))
