"""Core graph structure: construction, distances, blockers, recognizers."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from genpos.errors import DomainError
from genpos.graphs import (
    Graph,
    all_pairs_distances,
    basic_counts,
    complement,
    diameter,
    disjoint_union,
    from_mask,
    induced_subgraph,
    is_block_graph,
    is_complete,
    is_connected,
    join,
    remove_true_twin_edges,
    simplicial_vertices,
    to_mask,
    true_twin_pairs,
    universal_vertices,
)


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def random_graph(n, edge_bits):
    pairs = [(u, v) for v in range(n) for u in range(v)]
    edges = [p for i, p in enumerate(pairs) if edge_bits >> i & 1]
    return Graph.from_edges(n, edges)


def test_construction_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (0b10,))  # wrong row count
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0b00))  # self loop
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        Graph(0, ())


def test_mask_round_trip():
    assert to_mask([0, 2, 5]) == 0b100101
    assert sorted(from_mask(0b100101)) == [0, 2, 5]


def floyd_warshall(g):
    inf = math.inf
    d = [[0 if i == j else (1 if g.has_edge(i, j) else inf) for j in range(g.n)]
         for i in range(g.n)]
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


@given(n=st.integers(2, 8), bits=st.integers(0))
@settings(max_examples=120, deadline=None)
def test_bfs_matches_floyd_warshall(n, bits):
    g = random_graph(n, bits % (1 << (n * (n - 1) // 2)))
    dm = all_pairs_distances(g)
    assert dm.dist == floyd_warshall(g)


def test_blockers_are_strict_geodesic_interiors():
    p4 = path(4)
    dm = all_pairs_distances(p4)
    assert dm.blockers[0][3] == to_mask([1, 2])
    assert dm.blockers[0][1] == 0
    c5 = all_pairs_distances(cycle(5))
    # two geodesics between antipodal-ish vertices on C5 never exist; d=2 has
    # exactly one midpoint
    assert c5.blockers[0][2] == to_mask([1])


def test_blockers_unions():
    dm = all_pairs_distances(path(3))
    assert dm.rowunion[0] == to_mask([1])
    assert dm.all_blockers_union() == to_mask([1])


@given(n=st.integers(2, 7), bits=st.integers(0))
@settings(max_examples=80, deadline=None)
def test_blockers_against_definition(n, bits):
    g = random_graph(n, bits % (1 << (n * (n - 1) // 2)))
    dm = all_pairs_distances(g)
    for u in range(n):
        for v in range(n):
            if u == v or dm.dist[u][v] == math.inf:
                continue
            expected = to_mask(
                w for w in range(n)
                if w not in (u, v)
                and dm.dist[u][w] + dm.dist[w][v] == dm.dist[u][v]
            )
            assert dm.blockers[u][v] == expected


def test_connectivity_and_diameter():
    assert is_connected(path(5))
    assert not is_connected(disjoint_union([path(2), path(2)]))
    assert diameter(path(5)) == 4
    assert diameter(cycle(6)) == 3
    assert diameter(complete(4)) == 1


def test_simplicial_vertices():
    assert sorted(simplicial_vertices(path(4))) == [0, 3]
    assert sorted(simplicial_vertices(complete(5))) == [0, 1, 2, 3, 4]
    assert simplicial_vertices(cycle(5)) == frozenset()


def test_true_twins_and_removal():
    k4 = complete(4)
    assert len(true_twin_pairs(k4)) == 6
    assert remove_true_twin_edges(k4).num_edges() == 0
    p4 = path(4)
    assert true_twin_pairs(p4) == frozenset()
    assert remove_true_twin_edges(p4) == p4


def test_join_and_union():
    k1 = Graph(1, (0,))
    wheelish = join(k1, cycle(4))
    assert wheelish.n == 5
    assert sorted(universal_vertices(wheelish)) == [0]
    two = disjoint_union([path(2), path(3)])
    assert two.n == 5
    assert two.has_edge(0, 1) and two.has_edge(2, 3) and not two.has_edge(1, 2)


def test_induced_subgraph_labels():
    sub, labels = induced_subgraph(path(5), [1, 2, 4])
    assert labels == (1, 2, 4)
    assert sub.has_edge(0, 1) and not sub.has_edge(1, 2)


def test_complement():
    assert complement(complete(4)).num_edges() == 0
    assert complement(path(3)).num_edges() == 1
    assert complement(path(4)).num_edges() == 3


def test_block_graph_recognition():
    assert is_block_graph(path(6))
    assert is_block_graph(complete(5))
    # two triangles sharing a vertex
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert is_block_graph(bowtie)
    assert not is_block_graph(cycle(4))
    assert not is_block_graph(cycle(5))


def test_basic_counts():
    n, leaves, delta = basic_counts(path(4))
    assert (n, leaves, delta) == (4, 2, 2)
    assert is_complete(complete(3)) and not is_complete(path(3))


def test_require_connected_error():
    from genpos.graphs import require_connected

    with pytest.raises(DomainError):
        require_connected(disjoint_union([path(2), path(2)]), "test")
