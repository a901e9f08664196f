"""Executable catalog of the numbered statements, corpus handling, verdicts.

Every statement id S1..S27 maps to a checker that mechanically tests its
hypotheses (connectivity, order, twin-freeness, diameter, completeness,
block-graph structure, size caps) and returns a verdict: holds, fails, or
precondition-not-met.  The suite's central property is zero fails: the
statements are proved facts, so a failing verdict flags an implementation
bug.  Values feeding a verdict are cross-checked against the definition-level
oracles whenever the instance is small enough.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from . import cliques, families, positions, resolving
from .errors import CapacityError, GenposError, SpecError
from .graph6 import parse_graph6, write_graph6
from .graphs import (
    Graph,
    all_pairs_distances,
    basic_counts,
    from_mask,
    is_block_graph,
    is_complete,
    is_connected,
    disjoint_union,
    induced_subgraph,
    join,
    remove_true_twin_edges,
    simplicial_vertices,
    true_twin_pairs,
    universal_vertices,
)
from .products import lexicographic_product, strong_product, layer as product_layer

ENUMERATION_MAX_ORDER = 6
ISO_MAX_ORDER = 12

# Instance caps: per-statement product-order limits keeping exact searches
# tractable inside corpus sweeps.  Oversized instances report
# precondition-not-met rather than stalling the suite.
CAP_S5 = 16
CAP_S11 = 256
CAP_S12 = 256
CAP_S16 = 16
CAP_S18 = 24
CAP_S22 = 36
CAP_LEX_OUTER = 36
CAP_S27_ZERO = 25
CAP_S27_COMPLETE = 24
CAP_S15 = 36

_OUTER_REVERIFY_CAP = 40
_DUAL_REVERIFY_CAP = 16


# ---------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class Verdict:
    statement: str
    instance: str
    outcome: str  # "holds" | "fails" | "precondition-not-met"
    lhs: object = None
    rhs: object = None
    witness: object = None
    counterexample: object = None
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "type": "verdict",
            "statement": self.statement,
            "instance": self.instance,
            "outcome": self.outcome,
        }
        if self.lhs is not None:
            out["lhs"] = self.lhs
        if self.rhs is not None:
            out["rhs"] = self.rhs
        if self.witness is not None:
            out["witness"] = self.witness
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.note:
            out["note"] = self.note
        return out


def _skip(sid: str, instance: str, note: str) -> Verdict:
    return Verdict(sid, instance, "precondition-not-met", note=note)


def _equalities(sid: str, instance: str, checks: dict[str, tuple], note: str = "") -> Verdict:
    """Verdict from named lhs==rhs checks; any mismatch is a fail."""
    bad = {k: [l, r] for k, (l, r) in checks.items() if l != r}
    lhs = {k: v[0] for k, v in checks.items()}
    rhs = {k: v[1] for k, v in checks.items()}
    if len(checks) == 1:
        (lhs,) = lhs.values()
        (rhs,) = rhs.values()
    if bad:
        return Verdict(sid, instance, "fails", lhs, rhs, counterexample=bad, note=note)
    return Verdict(sid, instance, "holds", lhs, rhs, note=note)


# ---------------------------------------------------------------------------
# cross-checked invariant helpers


def _gp_outer_value(g: Graph, dm=None) -> int:
    dm = dm if dm is not None else all_pairs_distances(g)
    size, _ = positions.gp_outer(g, dm)
    if g.n <= _OUTER_REVERIFY_CAP:
        oracle, _ = positions.gp_outer(g, dm, engine="oracle")
        if oracle != size:
            raise GenposError(
                f"gp_o engine disagreement on {write_graph6(g)}: "
                f"characterization={size}, oracle={oracle}"
            )
    return size


def _gp_dual_value(g: Graph, dm=None) -> int:
    dm = dm if dm is not None else all_pairs_distances(g)
    size, _ = positions.gp_dual(g, dm)
    if g.n <= _DUAL_REVERIFY_CAP:
        oracle, _ = positions.gp_dual(g, dm, engine="oracle")
        if oracle != size:
            raise GenposError(
                f"gp_d engine disagreement on {write_graph6(g)}: "
                f"characterization={size}, oracle={oracle}"
            )
    return size


def _gp_total_value(g: Graph, dm=None) -> int:
    dm = dm if dm is not None else all_pairs_distances(g)
    size, _ = positions.gp_total(g, dm)
    oracle, _ = positions.gp_total(g, dm, engine="oracle")
    if oracle != size:
        raise GenposError(
            f"gp_t engine disagreement on {write_graph6(g)}: "
            f"characterization={size}, oracle={oracle}"
        )
    return size


def _diam(dm) -> int:
    return int(max(max(row) for row in dm.dist))


def _twin_free(g: Graph) -> bool:
    return not true_twin_pairs(g)


def _no_universal(g: Graph) -> bool:
    return not universal_vertices(g)


def _g6(g: Graph) -> str:
    return write_graph6(g)


def _pair_desc(g: Graph, h: Graph) -> str:
    return f"{_g6(g)},{_g6(h)}"


# ---------------------------------------------------------------------------
# isomorphism (brute force, small graphs only)


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    """Label-bijection search with degree-sequence pruning; n <= 12 only."""
    if g.n != h.n:
        return False
    if g.n > ISO_MAX_ORDER:
        raise CapacityError(f"isomorphism search supports n <= {ISO_MAX_ORDER}")
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    n = g.n
    hdeg = [h.degree(v) for v in range(n)]
    gdeg = [g.degree(v) for v in range(n)]
    mapping = [-1] * n
    used = [False] * n

    def rec(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or gdeg[v] != hdeg[w]:
                continue
            ok = True
            for u in range(v):
                if g.has_edge(u, v) != h.has_edge(mapping[u], w):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if rec(v + 1):
                    return True
                used[w] = False
        return False

    return rec(0)


# ---------------------------------------------------------------------------
# statement checkers (single graph)


def check_s1(g: Graph) -> Verdict:
    dm = all_pairs_distances(g)
    lhs, _ = positions.max_total_oracle(dm)
    rhs = len(simplicial_vertices(g))
    return _equalities("S1", _g6(g), {"gp_t": (lhs, rhs)})


def check_s2(g: Graph) -> Verdict:
    dm = all_pairs_distances(g)
    lhs, _ = positions.max_outer_oracle(dm)
    sr = resolving.strong_resolving_graph(g, dm)
    rhs, _ = cliques.max_clique(sr.full)
    return _equalities("S2", _g6(g), {"gp_o": (lhs, rhs)})


def check_s3(g: Graph) -> Verdict:
    if g.n > ENUMERATION_MAX_ORDER:
        return _skip("S3", _g6(g), f"subset sweep capped at n <= {ENUMERATION_MAX_ORDER}")
    dm = all_pairs_distances(g)
    full = (1 << g.n) - 1
    for xmask in range(full + 1):
        dual = positions._is_dual_mask(dm, xmask)
        char = positions._is_gp_mask(dm, xmask) and positions.is_convex(
            dm, from_mask(~xmask & full)
        )
        if dual != char:
            return Verdict(
                "S3", _g6(g), "fails",
                lhs=dual, rhs=char, counterexample=sorted(from_mask(xmask)),
            )
    return Verdict("S3", _g6(g), "holds", lhs=full + 1, rhs=full + 1,
                   note="subsets checked")


def check_s4(g: Graph) -> Verdict:
    dm = all_pairs_distances(g)
    sr = resolving.strong_resolving_graph(g, dm)
    if sr.pruned is None:
        return _skip("S4", _g6(g), "empty boundary (K1): pruned SR graph is empty")
    lhs = _gp_outer_value(g, dm)
    rhs, _ = cliques.max_clique(sr.pruned)
    return _equalities("S4", _g6(g), {"gp_o": (lhs, rhs)})


def check_s6(g: Graph) -> Verdict:
    dm = all_pairs_distances(g)
    if _diam(dm) != 2:
        return _skip("S6", _g6(g), "requires diameter 2")
    lhs = _gp_outer_value(g, dm)
    gtt = remove_true_twin_edges(g)
    checks = {"alpha_form": (lhs, cliques.independence_number(gtt)[0])}
    if _twin_free(g):
        checks["twin_free_alpha"] = (lhs, cliques.independence_number(g)[0])
    omega_form = cliques.max_clique(gtt)[0]
    note = f"omega_form_agrees={omega_form == lhs}"
    return _equalities("S6", _g6(g), checks, note=note)


def check_s7(g: Graph) -> Verdict:
    dm = all_pairs_distances(g)
    k = _diam(dm)
    if k < 2:
        return _skip("S7", _g6(g), "requires diameter >= 2")
    lhs = _gp_outer_value(g, dm)
    rhs = cliques.alpha_k(g, k - 1)[0]
    if lhs >= rhs:
        return Verdict("S7", _g6(g), "holds", lhs=lhs, rhs=rhs)
    return Verdict("S7", _g6(g), "fails", lhs=lhs, rhs=rhs)


def check_s8() -> list[Verdict]:
    out = []
    for s, r in [(2, 1), (3, 1), (3, 2)]:
        spec = f"subdivided_star:{s},{r}"
        g = families.generate(families.parse_family(spec))
        dm = all_pairs_distances(g)
        n1 = basic_counts(g)[1]
        akm1 = cliques.alpha_k(g, _diam(dm) - 1)[0]
        out.append(_equalities("S8", spec, {
            "gp_o_vs_leaves": (_gp_outer_value(g, dm), n1),
            "alpha_km1_vs_leaves": (akm1, n1),
        }))
    for n, t in [(2, 1), (3, 1), (3, 2)]:
        spec = f"clique_paths:{n},{t}"
        g = families.generate(families.parse_family(spec))
        dm = all_pairs_distances(g)
        n1 = basic_counts(g)[1]
        akm1 = cliques.alpha_k(g, _diam(dm) - 1)[0]
        out.append(_equalities("S8", spec, {
            "gp_o_vs_leaves": (_gp_outer_value(g, dm), n1),
            "alpha_km1_vs_leaves": (akm1, n1),
        }))
    return out


def check_s15(g: Graph) -> Verdict:
    if not _twin_free(g):
        return _skip("S15", _g6(g), "requires a twin-free graph")
    dm = all_pairs_distances(g)
    if _diam(dm) != 2:
        return _skip("S15", _g6(g), "requires diameter 2")
    if g.n * g.n > CAP_S15:
        return _skip("S15", _g6(g), f"square order above cap {CAP_S15}")
    sq = strong_product(g, g).graph
    lhs = _gp_outer_value(sq)
    rhs = cliques.independence_number(sq)[0]
    return _equalities("S15", _g6(g), {"gp_o_square_vs_alpha": (lhs, rhs)})


def check_s17() -> list[Verdict]:
    out = []
    for n in (5, 7):
        spec = f"cycle_plus:{n}"
        g = families.generate(families.parse_family(spec))
        out.append(_equalities("S17", spec, {"gp_d": (_gp_dual_value(g), 3)}))
    return out


def check_s21(g: Graph) -> Verdict:
    if g.n < 2:
        return _skip("S21", _g6(g), "requires order >= 2")
    dm = all_pairs_distances(g)
    g2 = resolving.g2bar(g, dm)
    omega_g2 = cliques.max_clique(g2)[0]
    checks: dict[str, tuple] = {}
    notes = []
    if _no_universal(g):
        joined = join(families.generate(families.parse_family("path:1")), g)
        sr = resolving.strong_resolving_graph(joined)
        assert sr.pruned is not None
        checks["i"] = (omega_g2, cliques.max_clique(sr.pruned)[0])
    if _diam(dm) <= 2:
        pruned_g2, _ = resolving.prune_isolated(g2)
        sr = resolving.strong_resolving_graph(g, dm)
        if pruned_g2 is None or sr.pruned is None:
            notes.append("ii: pruned graph empty")
        else:
            checks["ii"] = (
                cliques.max_clique(pruned_g2)[0],
                cliques.max_clique(sr.pruned)[0],
            )
    if _twin_free(g):
        checks["iii"] = (omega_g2, cliques.independence_number(g)[0])
    if not checks:
        return _skip("S21", _g6(g), "no clause applicable")
    return _equalities("S21", _g6(g), checks, note="; ".join(notes))


# ---------------------------------------------------------------------------
# statement checkers (graph pairs, strong product)


def _strong(g: Graph, h: Graph, cap: int):
    if g.n * h.n > cap:
        return None
    return strong_product(g, h)


def check_s5(g: Graph, h: Graph) -> Verdict:
    inst = _pair_desc(g, h)
    pg = _strong(g, h, CAP_S5)
    if pg is None:
        return _skip("S5", inst, f"product order above cap {CAP_S5}")
    prod = pg.graph
    dm = all_pairs_distances(prod)
    sets = {
        "gp": positions.max_gp_oracle(dm)[1],
        "outer": positions.max_outer_oracle(dm)[1],
        "dual": positions.max_dual_oracle(dm)[1],
        "total": positions.max_total_oracle(dm)[1],
    }
    predicates = {
        "gp": positions.is_general_position,
        "outer": positions.is_outer_gp,
        "dual": positions.is_dual_gp,
        "total": positions.is_total_gp,
    }
    layers = [product_layer(pg, b, "G") for b in range(h.n)]
    layers += [product_layer(pg, a, "H") for a in range(g.n)]
    checked = 0
    for sub in layers:
        subgraph, _ = induced_subgraph(prod, sub)
        dm_sub = all_pairs_distances(subgraph)
        for name, X in sets.items():
            restricted = positions.restrict_to_isometric_subgraph(prod, sub, X)
            if not predicates[name](dm_sub, restricted):
                return Verdict(
                    "S5", inst, "fails", lhs=name,
                    counterexample=sorted(restricted),
                    note="restriction lost the property on a layer",
                )
            checked += 1
    return Verdict("S5", inst, "holds", lhs=checked, rhs=checked,
                   note="property-layer checks")


def check_s9(g: Graph, h: Graph) -> Verdict:
    inst = _pair_desc(g, h)
    pg = _strong(g, h, CAP_S11)
    if pg is None:
        return _skip("S9", inst, f"product order above cap {CAP_S11}")
    lhs = sorted(simplicial_vertices(pg.graph))
    rhs = sorted(
        pg.encode(a, b)
        for a in simplicial_vertices(g)
        for b in simplicial_vertices(h)
    )
    return _equalities("S9", inst, {"simplicial_set": (lhs, rhs)})


def check_s10(g: Graph, h: Graph) -> Verdict:
    inst = _pair_desc(g, h)
    pg = _strong(g, h, CAP_S11)
    if pg is None:
        return _skip("S10", inst, f"product order above cap {CAP_S11}")
    lhs = _gp_total_value(pg.graph)
    rhs = len(simplicial_vertices(g)) * len(simplicial_vertices(h))
    return _equalities("S10", inst, {"gp_t": (lhs, rhs)})


def check_s11(g: Graph, h: Graph) -> Verdict:
    inst = _pair_desc(g, h)
    pg = _strong(g, h, CAP_S11)
    if pg is None:
        return _skip("S11", inst, f"product order above cap {CAP_S11}")
    prod = pg.graph
    dm_p = all_pairs_distances(prod)
    dm_g = all_pairs_distances(g)
    dm_h = all_pairs_distances(h)
    direct = {
        (u, v) for (u, v) in resolving.boundary(prod, dm_p).mmd_pairs
    }
    for x in range(prod.n):
        for y in range(x + 1, prod.n):
            a, b = pg.decode(x)
            c, d = pg.decode(y)
            by_cases, _ = resolving.check_mmd_product_cases(
                g, h, (a, c), (b, d), dm_g, dm_h
            )
            if by_cases != ((x, y) in direct):
                return Verdict(
                    "S11", inst, "fails",
                    lhs=(x, y) in direct, rhs=by_cases,
                    counterexample=[[a, b], [c, d]],
                )
    return Verdict("S11", inst, "holds",
                   lhs=prod.n * (prod.n - 1) // 2, rhs=prod.n * (prod.n - 1) // 2,
                   note="product vertex pairs checked")


def check_s12(g: Graph, h: Graph) -> Verdict:
    inst = _pair_desc(g, h)
    if g.n < 2 or h.n < 2:
        return _skip("S12", inst, "requires both factors of order >= 2")
    pg = _strong(g, h, CAP_S12)
    if pg is None:
        return _skip("S12", inst, f"product order above cap {CAP_S12}")
    lower = _gp_outer_value(g) * _gp_outer_value(h)
    mid = _gp_outer_value(pg.graph)
    upper = resolving.boundary(g).b * resolving.boundary(h).b
    if lower <= mid <= upper:
        return Verdict("S12", inst, "holds", lhs=[lower, mid], rhs=[mid, upper])
    return Verdict("S12", inst, "fails", lhs=[lower, mid], rhs=[mid, upper])


def check_s13(g: Graph, h: Graph) -> Verdict:
    inst = _pair_desc(g, h)
    if g.n < 2 or h.n < 2:
        return _skip("S13", inst, "requires both factors of order >= 2")
    if not (is_block_graph(g) and is_block_graph(h)):
        return _skip("S13", inst, "requires two block graphs")
    pg = _strong(g, h, CAP_S12)
    if pg is None:
        return _skip("S13", inst, f"product order above cap {CAP_S12}")
    lower = _gp_outer_value(g) * _gp_outer_value(h)
    mid = _gp_outer_value(pg.graph)
    upper = resolving.boundary(g).b * resolving.boundary(h).b
    return _equalities("S13", inst, {"lower_vs_mid": (lower, mid),
                                     "mid_vs_upper": (mid, upper)})


def check_s14() -> list[Verdict]:
    c5 = families.generate(families.parse_family("cycle:5"))
    prod = strong_product(c5, c5).graph
    dm = all_pairs_distances(prod)
    char, _ = positions.gp_outer(prod, dm)
    oracle, _ = positions.gp_outer(prod, dm, engine="oracle")
    return [_equalities("S14", "strong(cycle:5,cycle:5)", {
        "characterization": (char, 5),
        "oracle": (oracle, 5),
    })]


def check_s16(g: Graph, h: Graph) -> Verdict:
    inst = _pair_desc(g, h)
    pg = _strong(g, h, CAP_S16)
    if pg is None:
        return _skip("S16", inst, f"product order above cap {CAP_S16}")
    dm = all_pairs_distances(pg.graph)
    mid = positions.max_dual_oracle(dm)[0]
    char = positions.gp_dual(pg.graph, dm)[0]
    if mid != char:
        raise GenposError(f"gp_d engine disagreement on {inst}")
    sg = len(simplicial_vertices(g))
    sh = len(simplicial_vertices(h))
    terms = [
        sg * h.n + sh * g.n - sg * sh,
        g.n * _gp_dual_value(h),
        h.n * _gp_dual_value(g),
    ]
    lower = sg * sh
    upper = min(terms)
    if lower <= mid <= upper:
        return Verdict("S16", inst, "holds", lhs=[lower, mid], rhs=[mid, upper],
                       note=f"upper_terms={terms}")
    return Verdict("S16", inst, "fails", lhs=[lower, mid], rhs=[mid, upper],
                   note=f"upper_terms={terms}")


def check_s18(g: Graph, h: Graph) -> Verdict:
    inst = _pair_desc(g, h)
    if not is_complete(g):
        return _skip("S18", inst, "first factor must be complete")
    pg = _strong(g, h, CAP_S18)
    if pg is None:
        return _skip("S18", inst, f"product order above cap {CAP_S18}")
    lhs = _gp_dual_value(pg.graph)
    rhs = g.n * _gp_dual_value(h)
    return _equalities("S18", inst, {"gp_d": (lhs, rhs)})


# ---------------------------------------------------------------------------
# statement checkers (graph pairs, lexicographic product)


def _lex(g: Graph, h: Graph, cap: int):
    if g.n * h.n > cap:
        return None
    return lexicographic_product(g, h)


def check_s19(g: Graph, h: Graph) -> Verdict:
    inst = _pair_desc(g, h)
    if g.n < 2 or h.n < 2:
        return _skip("S19", inst, "requires both factors of order >= 2")
    pg = _lex(g, h, CAP_S11)
    if pg is None:
        return _skip("S19", inst, f"product order above cap {CAP_S11}")
    lhs = sorted(simplicial_vertices(pg.graph))
    if is_complete(h):
        rhs = sorted(pg.encode(a, b) for a in simplicial_vertices(g) for b in range(h.n))
    else:
        rhs = []
    return _equalities("S19", inst, {"simplicial_set": (lhs, rhs)})


def check_s20(g: Graph, h: Graph) -> Verdict:
    inst = _pair_desc(g, h)
    if g.n < 2 or h.n < 2:
        return _skip("S20", inst, "requires both factors of order >= 2")
    pg = _lex(g, h, CAP_S11)
    if pg is None:
        return _skip("S20", inst, f"product order above cap {CAP_S11}")
    lhs = _gp_total_value(pg.graph)
    rhs = len(simplicial_vertices(g)) * h.n if is_complete(h) else 0
    return _equalities("S20", inst, {"gp_t": (lhs, rhs)})


def _omega(g: Graph | None) -> int | None:
    return None if g is None else cliques.max_clique(g)[0]


def check_s22(g: Graph, h: Graph) -> Verdict:
    inst = _pair_desc(g, h)
    if g.n < 2 or h.n < 2:
        return _skip("S22", inst, "requires both factors of order >= 2")
    pg = _lex(g, h, CAP_S22)
    if pg is None:
        return _skip("S22", inst, f"product order above cap {CAP_S22}")
    lhs_sr = resolving.strong_resolving_graph(pg.graph)
    assert lhs_sr.pruned is not None
    lhs_graph = lhs_sr.pruned
    omega_lhs = cliques.max_clique(lhs_graph)[0]

    g_sr = resolving.strong_resolving_graph(g)
    assert g_sr.pruned is not None
    b_g = resolving.boundary(g).b

    def rhs_for_item(item: str) -> Graph | None:
        if item == "i":
            h2 = resolving.g2bar(h)
            h2p, _ = resolving.prune_isolated(h2)
            if h2p is None:
                return None
            parts = [lexicographic_product(g_sr.pruned, h2).graph]
            parts += [h2p] * (g.n - b_g)
            return disjoint_union(parts)
        if item == "ii":
            parts = [lexicographic_product(g_sr.pruned, h).graph]
            parts += [h] * (g.n - b_g)
            return disjoint_union(parts)
        if item == "iii":
            return disjoint_union([resolving.g2bar(h)] * g.n)
        tfb, srs, _ = resolving.tf_boundary_and_srs(g)
        h2 = resolving.g2bar(h)
        parts = [lexicographic_product(srs, h2).graph]
        parts += [h2] * (g.n - len(tfb))
        return disjoint_union(parts)

    applicable = []
    if _twin_free(g) and not is_complete(h):
        applicable.append("i")
    if is_complete(h):
        applicable.append("ii")
    if is_complete(g) and _no_universal(h):
        applicable.append("iii")
    if not is_complete(g) and _no_universal(h):
        applicable.append("iv")
    if not applicable:
        return _skip("S22", inst, "no clause applicable")

    checks = {}
    notes = []
    for item in applicable:
        rhs_graph = rhs_for_item(item)
        if rhs_graph is None:
            notes.append(f"{item}: empty right-hand side")
            continue
        checks[f"omega_{item}"] = (omega_lhs, cliques.max_clique(rhs_graph)[0])
        if lhs_graph.n <= ISO_MAX_ORDER and rhs_graph.n <= ISO_MAX_ORDER:
            checks[f"iso_{item}"] = (True, brute_force_isomorphic(lhs_graph, rhs_graph))
        else:
            notes.append(f"{item}: isomorphism skipped above {ISO_MAX_ORDER} vertices")
    if not checks:
        return _skip("S22", inst, "; ".join(notes))
    return _equalities("S22", inst, checks, note="; ".join(notes))


def check_s23(g: Graph, h: Graph) -> Verdict:
    inst = _pair_desc(g, h)
    if g.n < 2 or h.n < 2:
        return _skip("S23", inst, "requires both factors of order >= 2")
    if not _twin_free(g):
        return _skip("S23", inst, "first factor must be twin-free")
    if is_complete(h):
        return _skip("S23", inst, "second factor must be non-complete")
    pg = _lex(g, h, CAP_LEX_OUTER)
    if pg is None:
        return _skip("S23", inst, f"product order above cap {CAP_LEX_OUTER}")
    dm_h = all_pairs_distances(h)
    lhs = _gp_outer_value(pg.graph)
    gpo_g = _gp_outer_value(g)
    checks = {}
    if _no_universal(h):
        k1h = join(families.generate(families.parse_family("path:1")), h)
        checks["i"] = (lhs, gpo_g * _gp_outer_value(k1h))
    if _diam(dm_h) == 2:
        checks["ii"] = (lhs, gpo_g * _gp_outer_value(h, dm_h))
    if _twin_free(h):
        checks["iii"] = (lhs, gpo_g * cliques.independence_number(h)[0])
    if not checks:
        return _skip("S23", inst, "no clause applicable")
    return _equalities("S23", inst, checks)


def check_s24(g: Graph, h: Graph) -> Verdict:
    inst = _pair_desc(g, h)
    if g.n < 2:
        return _skip("S24", inst, "first factor must have order >= 2")
    if h.n < 2 or not is_complete(h):
        return _skip("S24", inst, "second factor must be complete of order >= 2")
    pg = _lex(g, h, CAP_LEX_OUTER)
    if pg is None:
        return _skip("S24", inst, f"product order above cap {CAP_LEX_OUTER}")
    lhs = _gp_outer_value(pg.graph)
    rhs = h.n * _gp_outer_value(g)
    return _equalities("S24", inst, {"gp_o": (lhs, rhs)})


def check_s25(g: Graph, h: Graph) -> Verdict:
    inst = _pair_desc(g, h)
    if g.n < 2 or not is_complete(g):
        return _skip("S25", inst, "first factor must be complete of order >= 2")
    if h.n < 2 or not _no_universal(h):
        return _skip("S25", inst, "second factor must have no universal vertex")
    pg = _lex(g, h, CAP_LEX_OUTER)
    if pg is None:
        return _skip("S25", inst, f"product order above cap {CAP_LEX_OUTER}")
    dm_h = all_pairs_distances(h)
    lhs = _gp_outer_value(pg.graph)
    if _diam(dm_h) == 2:
        rhs = _gp_outer_value(h, dm_h)
        tag = "diam2"
    else:
        k1h = join(families.generate(families.parse_family("path:1")), h)
        rhs = _gp_outer_value(k1h)
        tag = "diam_gt_2"
    return _equalities("S25", inst, {tag: (lhs, rhs)})


def check_s26(g: Graph, h: Graph) -> Verdict:
    inst = _pair_desc(g, h)
    if is_complete(g):
        return _skip("S26", inst, "first factor must be non-complete")
    if h.n < 2 or not _no_universal(h):
        return _skip("S26", inst, "second factor must have no universal vertex")
    pg = _lex(g, h, CAP_LEX_OUTER)
    if pg is None:
        return _skip("S26", inst, f"product order above cap {CAP_LEX_OUTER}")
    dm_h = all_pairs_distances(h)
    _, srs, _ = resolving.tf_boundary_and_srs(g)
    omega_srs = cliques.max_clique(srs)[0]
    lhs = _gp_outer_value(pg.graph)
    if _diam(dm_h) == 2:
        rhs = omega_srs * _gp_outer_value(h, dm_h)
        tag = "diam2"
    else:
        k1h = join(families.generate(families.parse_family("path:1")), h)
        rhs = omega_srs * _gp_outer_value(k1h)
        tag = "diam_gt_2"
    return _equalities("S26", inst, {tag: (lhs, rhs)})


def check_s27(g: Graph, h: Graph) -> Verdict:
    inst = _pair_desc(g, h)
    checks = {}
    notes = []
    if not simplicial_vertices(g) and not simplicial_vertices(h):
        if g.n * h.n <= CAP_S27_ZERO:
            pg = lexicographic_product(g, h)
            checks["no_simplicial_zero"] = (_gp_dual_value(pg.graph), 0)
        else:
            notes.append(f"i: product order above cap {CAP_S27_ZERO}")
    if is_complete(h):
        if g.n * h.n <= CAP_S27_COMPLETE:
            pg = lexicographic_product(g, h)
            checks["complete_layer_product"] = (
                _gp_dual_value(pg.graph), h.n * _gp_dual_value(g)
            )
        else:
            notes.append(f"ii: product order above cap {CAP_S27_COMPLETE}")
    if not checks:
        return _skip("S27", inst, "; ".join(notes) or "no clause applicable")
    return _equalities("S27", inst, checks, note="; ".join(notes))


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Statement:
    sid: str
    arity: str  # "graph" | "pair" | "fixed"
    description: str
    checker: Callable


STATEMENTS: dict[str, Statement] = {
    s.sid: s
    for s in [
        Statement("S1", "graph", "total general position number equals the simplicial count", check_s1),
        Statement("S2", "graph", "outer general position number equals the clique number of the strong resolving graph", check_s2),
        Statement("S3", "graph", "dual sets are exactly general position sets with convex complement (all subsets, n<=6)", check_s3),
        Statement("S4", "graph", "clique numbers of the full and pruned strong resolving graphs agree with gp_o", check_s4),
        Statement("S5", "pair", "restriction to an isometric layer preserves all four properties", check_s5),
        Statement("S6", "graph", "diameter-2 graphs: gp_o equals the independence number after removing twin edges", check_s6),
        Statement("S7", "graph", "gp_o is at least the (diam-1)-independence number", check_s7),
        Statement("S8", "fixed", "sharpness families: subdivided stars and clique-with-paths graphs", check_s8),
        Statement("S9", "pair", "simplicial vertices of a strong product are the simplicial pairs", check_s9),
        Statement("S10", "pair", "gp_t of a strong product is the product of simplicial counts", check_s10),
        Statement("S11", "pair", "five-case factor test for mutual maximal distance in strong products", check_s11),
        Statement("S12", "pair", "outer bounds for strong products: gp_o(G)gp_o(H) <= gp_o <= b(G)b(H)", check_s12),
        Statement("S13", "pair", "block-graph factors collapse the outer bounds to equality", check_s13),
        Statement("S14", "fixed", "gp_o of the strong square of the 5-cycle is 5", check_s14),
        Statement("S15", "graph", "twin-free diameter-2 graphs: gp_o of the strong square equals its independence number", check_s15),
        Statement("S16", "pair", "dual bounds for strong products (three-term upper bound)", check_s16),
        Statement("S17", "fixed", "gp_d of odd cycles with a pendant vertex is 3", check_s17),
        Statement("S18", "pair", "gp_d of a complete-by-H strong product is n times gp_d(H)", check_s18),
        Statement("S19", "pair", "simplicial vertices of a lexicographic product (complete vs non-complete H)", check_s19),
        Statement("S20", "pair", "gp_t of a lexicographic product (complete vs non-complete H)", check_s20),
        Statement("S21", "graph", "clique identities for the distance>=2-or-twins graph", check_s21),
        Statement("S22", "pair", "structure of the pruned strong resolving graph of a lexicographic product", check_s22),
        Statement("S23", "pair", "gp_o of lexicographic products with a twin-free first factor", check_s23),
        Statement("S24", "pair", "gp_o of a lexicographic product with a complete second factor", check_s24),
        Statement("S25", "pair", "gp_o of a lexicographic product with a complete first factor", check_s25),
        Statement("S26", "pair", "gp_o via the SRS graph when the first factor has twins", check_s26),
        Statement("S27", "pair", "dual number of lexicographic products (zero case and complete layers)", check_s27),
    ]
}


def check_statement(sid: str, instance=None) -> list[Verdict]:
    """Run one statement on one instance (a Graph, a pair, or None for fixed)."""
    if sid not in STATEMENTS:
        raise SpecError(f"unknown statement id {sid!r}")
    st = STATEMENTS[sid]
    if st.arity == "fixed":
        if instance is not None:
            raise SpecError(f"{sid} takes no instance")
        return st.checker()
    if st.arity == "graph":
        if not isinstance(instance, Graph):
            raise SpecError(f"{sid} expects a single graph instance")
        return [st.checker(instance)]
    if not (isinstance(instance, tuple) and len(instance) == 2):
        raise SpecError(f"{sid} expects a pair of graphs")
    return [st.checker(*instance)]


# ---------------------------------------------------------------------------
# corpora


def enumerate_connected(n: int):
    """All labeled connected graphs of order exactly n, deterministic order."""
    if not 1 <= n <= ENUMERATION_MAX_ORDER:
        raise CapacityError(
            f"exhaustive enumeration supports 1 <= n <= {ENUMERATION_MAX_ORDER}"
        )
    pairs = [(u, v) for v in range(n) for u in range(v)]
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for bit, (u, v) in enumerate(pairs):
            if code >> bit & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        g = Graph(n, tuple(rows))
        if is_connected(g):
            yield g


@dataclass(frozen=True)
class Corpus:
    graphs: tuple[Graph, ...] = ()
    pairs: tuple[tuple[Graph, Graph], ...] = ()

    def derived_pairs(self) -> tuple[tuple[Graph, Graph], ...]:
        """Pairs for pair-arity statements: explicit pairs, else the graph
        stream zipped with its rotation by one."""
        if self.pairs:
            return self.pairs
        gs = self.graphs
        if not gs:
            return ()
        if len(gs) == 1:
            return ((gs[0], gs[0]),)
        return tuple((gs[i], gs[(i + 1) % len(gs)]) for i in range(len(gs)))

    def derived_graphs(self) -> tuple[Graph, ...]:
        if self.graphs:
            return self.graphs
        seen = set()
        out = []
        for a, b in self.pairs:
            for g in (a, b):
                key = write_graph6(g)
                if key not in seen:
                    seen.add(key)
                    out.append(g)
        return tuple(out)


def parse_corpus(spec: str) -> Corpus:
    spec = spec.strip()
    if spec.startswith("exhaustive:"):
        try:
            n = int(spec.split(":", 1)[1])
        except ValueError:
            raise SpecError(f"bad exhaustive corpus spec {spec!r}") from None
        return Corpus(graphs=tuple(enumerate_connected(n)))
    if spec.startswith("file:"):
        path = spec[len("file:"):]
        with open(path, "r", encoding="utf-8") as fh:
            graphs = tuple(parse_graph6(line) for line in fh if line.strip())
        return Corpus(graphs=graphs)
    if spec.startswith("family:"):
        body = spec[len("family:"):]
        out = []
        current = ""
        for token in body.split(","):
            if ":" in token and current:
                out.append(current)
                current = token
            else:
                current = f"{current},{token}" if current else token
        if current:
            out.append(current)
        return Corpus(
            graphs=tuple(families.generate(families.parse_family(t)) for t in out)
        )
    if spec.startswith("pairs:"):
        body = spec[len("pairs:"):]
        for i, ch in enumerate(body):
            if ch != "x":
                continue
            try:
                left = parse_corpus(body[:i])
                right = parse_corpus(body[i + 1:])
            except (SpecError, CapacityError, OSError):
                continue
            return Corpus(
                pairs=tuple(itertools.product(left.derived_graphs(),
                                              right.derived_graphs()))
            )
        raise SpecError(f"could not split pair corpus spec {spec!r}")
    raise SpecError(f"unknown corpus spec {spec!r}")


# ---------------------------------------------------------------------------
# suite runner


def _run_instance(args):
    sid, payload = args
    return check_statement(sid, payload)


def run_suite(
    corpus: Corpus,
    statement_ids: list[str] | None = None,
    jobs: int = 1,
) -> tuple[list[Verdict], dict]:
    """Run statements over a corpus; verdicts sorted by (statement, instance)."""
    ids = statement_ids or sorted(STATEMENTS, key=lambda s: int(s[1:]))
    for sid in ids:
        if sid not in STATEMENTS:
            raise SpecError(f"unknown statement id {sid!r}")
    tasks: list[tuple[str, object]] = []
    for sid in ids:
        st = STATEMENTS[sid]
        if st.arity == "fixed":
            tasks.append((sid, None))
        elif st.arity == "graph":
            tasks.extend((sid, g) for g in corpus.derived_graphs())
        else:
            tasks.extend((sid, pair) for pair in corpus.derived_pairs())
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_instance, tasks, chunksize=16))
    else:
        chunks = [_run_instance(t) for t in tasks]
    verdicts = sorted(
        (v for chunk in chunks for v in chunk),
        key=lambda v: (int(v.statement[1:]), v.instance),
    )
    counts: dict[str, dict[str, int]] = {}
    for v in verdicts:
        slot = counts.setdefault(
            v.statement, {"holds": 0, "fails": 0, "precondition-not-met": 0}
        )
        slot[v.outcome] += 1
    summary = {
        "type": "summary",
        "statements": counts,
        "total": len(verdicts),
        "fails": sum(c["fails"] for c in counts.values()),
    }
    return verdicts, summary
