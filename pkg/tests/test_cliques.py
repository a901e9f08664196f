"""Exact clique/independence solvers against exhaustive subset search."""

from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from genpos.cliques import alpha_k, independence_number, max_clique
from genpos.errors import DomainError
from genpos.graphs import Graph, is_connected


def random_graph(n, bits):
    pairs = [(u, v) for v in range(n) for u in range(v)]
    bits %= 1 << len(pairs)
    edges = [p for i, p in enumerate(pairs) if bits >> i & 1]
    return Graph.from_edges(n, edges)


def brute_clique(g):
    best = 0
    for r in range(g.n, 0, -1):
        for c in combinations(range(g.n), r):
            if all(g.has_edge(u, v) for u, v in combinations(c, 2)):
                return r
    return best


@given(n=st.integers(1, 9), bits=st.integers(0))
@settings(max_examples=120, deadline=None)
def test_max_clique_matches_brute_force(n, bits):
    g = random_graph(n, bits)
    size, witness = max_clique(g)
    assert size == brute_clique(g)
    assert len(witness) == size
    assert all(g.has_edge(u, v) for u, v in combinations(sorted(witness), 2))


@given(n=st.integers(1, 9), bits=st.integers(0))
@settings(max_examples=60, deadline=None)
def test_independence_is_clique_of_complement(n, bits):
    g = random_graph(n, bits)
    size, witness = independence_number(g)
    assert all(not g.has_edge(u, v) for u, v in combinations(sorted(witness), 2))
    assert size + 0 == brute_clique(
        Graph.from_edges(g.n, [(u, v) for u in range(g.n)
                               for v in range(u + 1, g.n)
                               if not g.has_edge(u, v)])
    )


def test_max_clique_deterministic_witness():
    g = random_graph(8, 0b101101110011101011)
    assert max_clique(g) == max_clique(g)


@given(bits=st.integers(0))
@settings(max_examples=40, deadline=None)
def test_alpha_k_chain_is_nonincreasing(bits):
    g = random_graph(7, bits)
    if not is_connected(g):
        return
    values = [alpha_k(g, k)[0] for k in range(1, 7)]
    assert values == sorted(values, reverse=True)
    assert values[0] == independence_number(g)[0]


def test_alpha_k_on_paths():
    p6 = Graph.from_edges(6, [(i, i + 1) for i in range(5)])
    assert alpha_k(p6, 1)[0] == 3
    assert alpha_k(p6, 2)[0] == 2
    assert alpha_k(p6, 5)[0] == 1


def test_alpha_k_domain_errors():
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(DomainError):
        alpha_k(p3, 0)
    disconnected = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(DomainError):
        alpha_k(disconnected, 1)
