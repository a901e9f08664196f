"""Position predicates, both solver engines, and their agreement."""

import pytest
from hypothesis import given, settings, strategies as st

from genpos.errors import DomainError
from genpos.graphs import Graph, all_pairs_distances, is_connected
from genpos.positions import (
    compute_bundle,
    gp_dual,
    gp_number,
    gp_outer,
    gp_total,
    is_convex,
    is_dual_gp,
    is_general_position,
    is_outer_gp,
    is_positionable,
    is_total_gp,
    max_dual_oracle,
    max_gp_oracle,
    max_outer_oracle,
    max_total_oracle,
    restrict_to_isometric_subgraph,
    structure_bundle,
)


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def random_connected(n, bits):
    pairs = [(u, v) for v in range(n) for u in range(v)]
    bits %= 1 << len(pairs)
    edges = [p for i, p in enumerate(pairs) if bits >> i & 1]
    g = Graph.from_edges(n, edges)
    if is_connected(g):
        return g
    # graft a spanning path so every sampled graph is usable
    return Graph.from_edges(n, edges + [(i, i + 1) for i in range(n - 1)])


def subsets(n):
    for m in range(1 << n):
        yield [v for v in range(n) if m >> v & 1]


# --------------------------------------------------------------------------
# predicates on hand-checked examples


def test_positionable_on_a_path():
    dm = all_pairs_distances(path(4))
    assert is_positionable(dm, [0, 3], 0, 3)  # endpoints themselves never block
    assert not is_positionable(dm, [1], 0, 3)
    assert is_positionable(dm, [0, 1], 0, 1)  # adjacent pairs always pass
    with pytest.raises(ValueError):
        is_positionable(dm, [], 2, 2)


def test_predicates_on_c4():
    dm = all_pairs_distances(cycle(4))
    assert is_general_position(dm, [0, 1])
    assert not is_general_position(dm, [0, 1, 2])  # 1 is between 0 and 2
    assert is_outer_gp(dm, [0, 2])  # a diagonal never blocks anything
    assert not is_outer_gp(dm, [0, 1])  # 1 lies between 0 and 2
    assert is_dual_gp(dm, [0, 1])  # complement is an edge, convex
    assert not is_dual_gp(dm, [0, 2])  # complement pair 1,3 is blocked
    assert not is_dual_gp(dm, [0, 1, 2, 3])  # the whole vertex set is not gp
    assert not is_total_gp(dm, [0])
    assert is_convex(dm, [0, 1])
    assert not is_convex(dm, [0, 2])


def test_total_on_paths():
    dm = all_pairs_distances(path(4))
    assert is_total_gp(dm, [0, 3])
    assert not is_total_gp(dm, [0, 1])
    assert max_total_oracle(dm) == (2, frozenset({0, 3}))


# --------------------------------------------------------------------------
# oracles versus exhaustive subset enumeration


@given(n=st.integers(2, 6), bits=st.integers(0))
@settings(max_examples=60, deadline=None)
def test_oracles_match_subset_enumeration(n, bits):
    g = random_connected(n, bits)
    dm = all_pairs_distances(g)
    table = {
        is_general_position: max_gp_oracle,
        is_outer_gp: max_outer_oracle,
        is_dual_gp: max_dual_oracle,
        is_total_gp: max_total_oracle,
    }
    for predicate, solver in table.items():
        brute = max(len(s) for s in subsets(n) if predicate(dm, s))
        size, witness = solver(dm)
        assert size == brute
        assert predicate(dm, witness)


# --------------------------------------------------------------------------
# engine agreement (characterization vs definition)


@given(n=st.integers(2, 8), bits=st.integers(0))
@settings(max_examples=80, deadline=None)
def test_engines_agree(n, bits):
    g = random_connected(n, bits)
    dm = all_pairs_distances(g)
    for solver in (gp_total, gp_outer, gp_dual):
        a, wa = solver(g, dm, engine="characterization")
        b, wb = solver(g, dm, engine="oracle")
        assert a == b


@given(n=st.integers(2, 7), bits=st.integers(0))
@settings(max_examples=50, deadline=None)
def test_invariant_chain(n, bits):
    g = random_connected(n, bits)
    dm = all_pairs_distances(g)
    gp = gp_number(g, dm)[0]
    t = gp_total(g, dm)[0]
    o = gp_outer(g, dm)[0]
    d = gp_dual(g, dm)[0]
    # a total set is both an outer and a dual set; all are gp sets
    assert t <= o <= gp
    assert t <= d <= gp


@given(n=st.integers(2, 7), bits=st.integers(0))
@settings(max_examples=40, deadline=None)
def test_gp_and_outer_are_hereditary(n, bits):
    g = random_connected(n, bits)
    dm = all_pairs_distances(g)
    _, w = max_gp_oracle(dm)
    w = sorted(w)
    assert all(is_general_position(dm, w[:k]) for k in range(len(w) + 1))
    _, w = max_outer_oracle(dm)
    w = sorted(w)
    assert all(is_outer_gp(dm, w[:k]) for k in range(len(w) + 1))


# --------------------------------------------------------------------------
# known values


def test_known_values():
    assert gp_number(complete(5))[0] == 5
    assert gp_number(path(6))[0] == 2
    assert gp_number(cycle(4))[0] == 2
    assert gp_number(cycle(5))[0] == 3
    assert gp_total(path(4))[0] == 2
    assert gp_outer(cycle(5))[0] == 2
    assert gp_dual(complete(4))[0] == 4


def test_connected_required():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    for fn in (gp_number, gp_total, gp_outer, gp_dual):
        with pytest.raises(DomainError):
            fn(g)


# --------------------------------------------------------------------------
# isometric restriction


def test_restrict_to_isometric_subgraph():
    p5 = path(5)
    out = restrict_to_isometric_subgraph(p5, [1, 2, 3], [0, 1, 3])
    assert out == frozenset({0, 2})  # relabeled: 1 -> 0, 3 -> 2


def test_restrict_rejects_non_isometric_subgraph():
    c6 = cycle(6)
    with pytest.raises(DomainError):
        restrict_to_isometric_subgraph(c6, [0, 1, 2, 3, 4], [0, 4])


# --------------------------------------------------------------------------
# bundles


def test_bundle_for_c5():
    b = compute_bundle(cycle(5), witnesses=True)
    assert b["n"] == 5 and b["diam"] == 2
    assert b["s"] == 0 and b["b"] == 5
    assert b["gp"] == 3 and b["gp_o"] == 2 and b["gp_t"] == 0
    assert b["alpha_km1"] == 2
    assert sorted(b["witnesses"]) == ["alpha", "gp", "gp_d", "gp_o", "gp_t", "omega"]
    assert len(b["witnesses"]["gp"]) == 3


def test_bundle_for_complete_graph():
    b = compute_bundle(complete(4))
    assert b["s"] == 4 and b["gp_t"] == 4 and b["gp_o"] == 4 and b["gp_d"] == 4
    assert b["alpha_km1"] is None  # diameter 1


def test_structure_bundle_for_disconnected():
    g = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
    b = structure_bundle(g)
    assert b["connected"] is False and b["n"] == 5
    with pytest.raises(DomainError):
        compute_bundle(g)
