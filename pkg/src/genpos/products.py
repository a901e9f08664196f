"""Strong and lexicographic products with layer/projection bookkeeping.

The vertex codec is fixed once and everywhere: (g, h) <-> g * n_H + h.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError
from .graphs import Graph, iter_bits

DEFAULT_VERTEX_CAP = 4096


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    n_g: int
    n_h: int
    kind: str  # "strong" | "lex"

    def encode(self, g: int, h: int) -> int:
        return g * self.n_h + h

    def decode(self, x: int) -> tuple[int, int]:
        return divmod(x, self.n_h)


def _check_cap(g: Graph, h: Graph, cap: int) -> None:
    if g.n * h.n > cap:
        raise CapacityError(
            f"product order {g.n * h.n} exceeds the vertex cap {cap}"
        )


def strong_product(g: Graph, h: Graph, cap: int = DEFAULT_VERTEX_CAP) -> ProductGraph:
    """(a,b) ~ (a',b') iff a=a' & bb' edge, or aa' edge & b=b', or both edges."""
    _check_cap(g, h, cap)
    ng, nh = g.n, h.n
    rows = [0] * (ng * nh)
    for a in range(ng):
        for b in range(nh):
            x = a * nh + b
            # same G-coordinate, move in H
            row = h.adj[b] << (a * nh)
            for a2 in iter_bits(g.adj[a]):
                # move in G, same or adjacent H-coordinate
                row |= (h.adj[b] | 1 << b) << (a2 * nh)
            rows[x] = row
    return ProductGraph(Graph(ng * nh, tuple(rows)), ng, nh, "strong")


def lexicographic_product(g: Graph, h: Graph, cap: int = DEFAULT_VERTEX_CAP) -> ProductGraph:
    """(a,b) ~ (a',b') iff a=a' & bb' edge, or aa' edge."""
    _check_cap(g, h, cap)
    ng, nh = g.n, h.n
    full_h = (1 << nh) - 1
    rows = [0] * (ng * nh)
    for a in range(ng):
        cross = 0
        for a2 in iter_bits(g.adj[a]):
            cross |= full_h << (a2 * nh)
        for b in range(nh):
            rows[a * nh + b] = cross | (h.adj[b] << (a * nh))
    return ProductGraph(Graph(ng * nh, tuple(rows)), ng, nh, "lex")


def project(p: ProductGraph, vertices, factor: str) -> frozenset[int]:
    """Image of a product vertex set on one factor; factor is 'G' or 'H'."""
    if factor == "G":
        return frozenset(p.decode(x)[0] for x in vertices)
    if factor == "H":
        return frozenset(p.decode(x)[1] for x in vertices)
    raise ValueError(f"factor must be 'G' or 'H', got {factor!r}")


def layer(p: ProductGraph, anchor: int, factor: str) -> frozenset[int]:
    """G-layer at h=anchor (factor='G') or H-layer at g=anchor (factor='H')."""
    if factor == "G":
        if not 0 <= anchor < p.n_h:
            raise ValueError(f"anchor {anchor} outside factor H")
        return frozenset(p.encode(a, anchor) for a in range(p.n_g))
    if factor == "H":
        if not 0 <= anchor < p.n_g:
            raise ValueError(f"anchor {anchor} outside factor G")
        return frozenset(p.encode(anchor, b) for b in range(p.n_h))
    raise ValueError(f"factor must be 'G' or 'H', got {factor!r}")


def strong_power(g: Graph, k: int, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Strong product of k copies of g."""
    if k < 1:
        raise ValueError("strong power needs k >= 1")
    acc = g
    for _ in range(k - 1):
        acc = strong_product(acc, g, cap=cap).graph
    return acc
