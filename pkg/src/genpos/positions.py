"""General position predicates and exact maximum-set solvers.

A pair u, v is treated as positionable w.r.t. X when no vertex of X lies
strictly inside a u,v-geodesic (interior avoidance).  Note that the literal
set-equality phrasing of positionability cannot hold when an endpoint is
outside X, while the outer/dual notions quantify over exactly such pairs;
the interior reading makes all four notions coherent and is used throughout.

Two engines are provided for the maxima: definition-level branch-and-bound
oracles working directly on geodesic blocker masks, and characterization
engines (simplicial count, clique number of the strong resolving graph,
convex-complement search).  They must agree; the test suite asserts it.
"""

from __future__ import annotations

from typing import Iterable

from . import cliques, resolving
from .errors import DomainError, GenposError
from .graphs import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    basic_counts,
    from_mask,
    induced_subgraph,
    is_connected,
    iter_bits,
    require_connected,
    simplicial_vertices,
    to_mask,
)

VertexSet = Iterable[int]


# ---------------------------------------------------------------------------
# definition-level predicates


def is_positionable(dm: DistanceMatrix, X: VertexSet, u: int, v: int) -> bool:
    """No vertex of X (other than u, v) lies strictly between u and v."""
    if u == v:
        raise ValueError("positionability is defined for distinct vertices")
    xmask = to_mask(X)
    return not dm.blockers[u][v] & xmask


def is_general_position(dm: DistanceMatrix, X: VertexSet) -> bool:
    return _is_gp_mask(dm, to_mask(X))


def is_outer_gp(dm: DistanceMatrix, X: VertexSet) -> bool:
    return _is_outer_mask(dm, to_mask(X))


def is_dual_gp(dm: DistanceMatrix, X: VertexSet) -> bool:
    return _is_dual_mask(dm, to_mask(X))


def is_total_gp(dm: DistanceMatrix, X: VertexSet) -> bool:
    return not dm.all_blockers_union() & to_mask(X)


def is_convex(dm: DistanceMatrix, X: VertexSet) -> bool:
    """Every geodesic between members of X stays inside X."""
    xmask = to_mask(X)
    blockers = dm.blockers
    for u in iter_bits(xmask):
        bu = blockers[u]
        for v in iter_bits(xmask >> (u + 1) << (u + 1)):
            if bu[v] & ~xmask:
                return False
    return True


def _is_gp_mask(dm: DistanceMatrix, xmask: int) -> bool:
    blockers = dm.blockers
    for u in iter_bits(xmask):
        bu = blockers[u]
        for v in iter_bits(xmask >> (u + 1) << (u + 1)):
            if bu[v] & xmask:
                return False
    return True


def _is_outer_mask(dm: DistanceMatrix, xmask: int) -> bool:
    # Pairs with at least one endpoint in X must avoid X in their interiors;
    # rowunion[u] collects the interiors of every pair through u.
    rowunion = dm.rowunion
    for u in iter_bits(xmask):
        if rowunion[u] & xmask:
            return False
    return True


def _is_dual_mask(dm: DistanceMatrix, xmask: int) -> bool:
    if not _is_gp_mask(dm, xmask):
        return False
    blockers = dm.blockers
    comp = ~xmask & ((1 << dm.n) - 1)
    for u in iter_bits(comp):
        bu = blockers[u]
        for v in iter_bits(comp >> (u + 1) << (u + 1)):
            if bu[v] & xmask:
                return False
    return True


# ---------------------------------------------------------------------------
# definition-level maximum solvers (oracle engine)


def max_gp_oracle(dm: DistanceMatrix) -> tuple[int, frozenset[int]]:
    """Largest general position set via blocked-triple branch-and-bound."""
    n = dm.n
    blockers = dm.blockers
    best = 0
    best_mask = 0

    def extend(xmask: int, size: int, start: int, blocked: int) -> None:
        nonlocal best, best_mask
        if size > best:
            best, best_mask = size, xmask
        for v in range(start, n):
            if size + (n - v) <= best:
                return
            if blocked >> v & 1:
                continue
            ok = True
            nb = blocked
            for u in iter_bits(xmask):
                b = blockers[u][v]
                if b & xmask:
                    ok = False
                    break
                nb |= b
            if ok:
                extend(xmask | 1 << v, size + 1, v + 1, nb)

    extend(0, 0, 0, 0)
    return best, from_mask(best_mask)


def max_outer_oracle(dm: DistanceMatrix) -> tuple[int, frozenset[int]]:
    """Largest outer set: independent-set search on the pairwise conflicts
    induced by the blocker masks (heredity makes subset pruning sound)."""
    n = dm.n
    rowunion = dm.rowunion
    conf = list(rowunion)
    for u in range(n):
        for v in iter_bits(rowunion[u]):
            conf[v] |= 1 << u
    best = 0
    best_mask = 0

    def extend(xmask: int, size: int, cand: int) -> None:
        nonlocal best, best_mask
        if size > best:
            best, best_mask = size, xmask
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            extend(xmask | 1 << v, size + 1, cand & ~conf[v])

    extend(0, 0, (1 << n) - 1)
    return best, from_mask(best_mask)


def max_total_oracle(dm: DistanceMatrix) -> tuple[int, frozenset[int]]:
    """Vertices that never lie strictly inside any geodesic."""
    mask = ~dm.all_blockers_union() & ((1 << dm.n) - 1)
    return mask.bit_count(), from_mask(mask)


def max_dual_oracle(dm: DistanceMatrix) -> tuple[int, frozenset[int]]:
    """Largest dual set by include/exclude branch-and-bound on the definition.

    Dual sets are not subset-closed, so every vertex is committed either way;
    a branch dies as soon as a within-X pair or a committed-excluded pair has
    an X vertex strictly between.
    """
    n = dm.n
    blockers = dm.blockers
    best = 0
    best_mask = 0

    def rec(i: int, xmask: int, emask: int, blocked: int, forbidden: int, size: int) -> None:
        nonlocal best, best_mask
        if size + (n - i) <= best:
            return
        if i == n:
            best, best_mask = size, xmask
            return
        v = i
        # include v in X
        if not (blocked >> v & 1) and not (forbidden >> v & 1):
            ok = True
            nb = blocked
            for u in iter_bits(xmask):
                b = blockers[u][v]
                if b & xmask:
                    ok = False
                    break
                nb |= b
            if ok:
                rec(i + 1, xmask | 1 << v, emask, nb, forbidden, size + 1)
        # exclude v: every pair of excluded vertices must stay X-free inside
        acc = 0
        bv = blockers[v]
        for e in iter_bits(emask):
            acc |= bv[e]
        if not acc & xmask:
            rec(i + 1, xmask, emask | 1 << v, blocked, forbidden | acc, size)

    rec(0, 0, 0, 0, 0, 0)
    return best, from_mask(best_mask)


# ---------------------------------------------------------------------------
# characterization engines


def _max_dual_characterization(dm: DistanceMatrix) -> tuple[int, frozenset[int]]:
    """Maximize |X| over general position sets whose complement is convex."""
    n = dm.n
    blockers = dm.blockers
    full = (1 << n) - 1
    best = -1
    best_mask = 0

    def convex_complement(xmask: int) -> bool:
        comp = ~xmask & full
        for u in iter_bits(comp):
            bu = blockers[u]
            for v in iter_bits(comp >> (u + 1) << (u + 1)):
                if bu[v] & xmask:
                    return False
        return True

    def extend(xmask: int, size: int, start: int, blocked: int) -> None:
        nonlocal best, best_mask
        if size > best and convex_complement(xmask):
            best, best_mask = size, xmask
        for v in range(start, n):
            if size + (n - v) <= best:
                return
            if blocked >> v & 1:
                continue
            ok = True
            nb = blocked
            for u in iter_bits(xmask):
                b = blockers[u][v]
                if b & xmask:
                    ok = False
                    break
                nb |= b
            if ok:
                extend(xmask | 1 << v, size + 1, v + 1, nb)

    extend(0, 0, 0, 0)
    return best, from_mask(best_mask)


def gp_number(g: Graph, dm: DistanceMatrix | None = None) -> tuple[int, frozenset[int]]:
    require_connected(g, "gp_number")
    return max_gp_oracle(dm or all_pairs_distances(g))


def gp_total(
    g: Graph, dm: DistanceMatrix | None = None, engine: str = "characterization"
) -> tuple[int, frozenset[int]]:
    require_connected(g, "gp_total")
    if engine == "oracle":
        return max_total_oracle(dm or all_pairs_distances(g))
    s = simplicial_vertices(g)
    return len(s), s


def gp_outer(
    g: Graph, dm: DistanceMatrix | None = None, engine: str = "characterization"
) -> tuple[int, frozenset[int]]:
    require_connected(g, "gp_outer")
    if dm is None:
        dm = all_pairs_distances(g)
    if engine == "oracle":
        return max_outer_oracle(dm)
    sr = resolving.strong_resolving_graph(g, dm)
    return cliques.max_clique(sr.full)


def gp_dual(
    g: Graph, dm: DistanceMatrix | None = None, engine: str = "characterization"
) -> tuple[int, frozenset[int]]:
    require_connected(g, "gp_dual")
    if dm is None:
        dm = all_pairs_distances(g)
    if engine == "oracle":
        return max_dual_oracle(dm)
    return _max_dual_characterization(dm)


# ---------------------------------------------------------------------------
# isometric restriction


def restrict_to_isometric_subgraph(
    g: Graph, sub: VertexSet, X: VertexSet
) -> frozenset[int]:
    """X restricted to an isometric induced subgraph, in subgraph labels."""
    subgraph, labels = induced_subgraph(g, sub)
    dm_g = all_pairs_distances(g)
    dm_s = all_pairs_distances(subgraph)
    for i, u in enumerate(labels):
        for j, v in enumerate(labels):
            if dm_s.dist[i][j] != dm_g.dist[u][v]:
                raise DomainError(
                    f"subgraph is not isometric: d({u},{v}) differs"
                )
    index = {old: new for new, old in enumerate(labels)}
    return frozenset(index[v] for v in X if v in index)


# ---------------------------------------------------------------------------
# invariant bundles

CROSS_CHECK_MAX_ORDER = 8


def compute_bundle(
    g: Graph,
    witnesses: bool = False,
    engine: str = "characterization",
    cross_check: bool = True,
) -> dict:
    """All invariants of one connected graph as a JSON-ready dict."""
    require_connected(g, "invariants")
    dm = all_pairs_distances(g)
    n, n1, _ = basic_counts(g)
    diam = int(max(max(row) for row in dm.dist))
    rep = resolving.boundary(g, dm)
    omega, omega_w = cliques.max_clique(g)
    alpha, alpha_w = cliques.independence_number(g)
    gp, gp_w = max_gp_oracle(dm)
    vals = {
        "gp_t": gp_total(g, dm, engine=engine),
        "gp_o": gp_outer(g, dm, engine=engine),
        "gp_d": gp_dual(g, dm, engine=engine),
    }
    if cross_check and n <= CROSS_CHECK_MAX_ORDER:
        other = "oracle" if engine != "oracle" else "characterization"
        for key, (size, _) in vals.items():
            check, _ = {
                "gp_t": gp_total,
                "gp_o": gp_outer,
                "gp_d": gp_dual,
            }[key](g, dm, engine=other)
            if check != size:
                raise GenposError(
                    f"engine disagreement on {key}: {engine}={size}, {other}={check}"
                )
    bundle = {
        "n": n,
        "n1": n1,
        "diam": diam,
        "s": len(simplicial_vertices(g)),
        "b": rep.b,
        "omega": omega,
        "alpha": alpha,
        "gp": gp,
        "gp_t": vals["gp_t"][0],
        "gp_o": vals["gp_o"][0],
        "gp_d": vals["gp_d"][0],
    }
    if diam >= 2:
        bundle["alpha_km1"] = cliques.alpha_k(g, diam - 1)[0]
    else:
        bundle["alpha_km1"] = None
    if witnesses:
        bundle["witnesses"] = {
            "omega": sorted(omega_w),
            "alpha": sorted(alpha_w),
            "gp": sorted(gp_w),
            "gp_t": sorted(vals["gp_t"][1]),
            "gp_o": sorted(vals["gp_o"][1]),
            "gp_d": sorted(vals["gp_d"][1]),
        }
    return bundle


def structure_bundle(g: Graph) -> dict:
    """Structure-level fields only, defined for disconnected graphs too."""
    n, n1, delta = basic_counts(g)
    omega, _ = cliques.max_clique(g)
    alpha, _ = cliques.independence_number(g)
    return {
        "n": n,
        "n1": n1,
        "max_degree": delta,
        "omega": omega,
        "alpha": alpha,
        "connected": is_connected(g),
    }
