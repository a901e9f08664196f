"""Named graph family generators and their textual specs.

A family spec is ``tag:params`` with integer parameters, e.g. ``cycle:5``,
``subdivided_star:3,1`` (star with every edge subdivided that many times),
``clique_paths:3,2`` (a path of that many vertices hung off every clique
vertex), ``cycle_plus:5`` (a cycle with one pendant vertex), ``random:8,300,7``
(n, edge probability in thousandths, seed; resampled until connected) and
``join:a:1+b:2`` (join of two non-join specs).  Generation is deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import SpecError
from .graphs import Graph, is_connected, join

_RANDOM_ATTEMPTS = 10_000


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: tuple[int, ...] = ()
    joined: tuple["FamilySpec", "FamilySpec"] | None = None

    def __str__(self) -> str:
        if self.tag == "join":
            assert self.joined is not None
            return f"join:{self.joined[0]}+{self.joined[1]}"
        return f"{self.tag}:{','.join(str(p) for p in self.params)}"


def parse_family(text: str) -> FamilySpec:
    text = text.strip()
    if text.startswith("join:"):
        body = text[len("join:"):]
        if "+" not in body:
            raise SpecError(f"join spec needs two '+'-separated parts: {text!r}")
        left, right = body.split("+", 1)
        return FamilySpec("join", joined=(parse_family(left), parse_family(right)))
    if ":" not in text:
        raise SpecError(f"family spec needs 'tag:params': {text!r}")
    tag, _, rest = text.partition(":")
    try:
        params = tuple(int(p) for p in rest.split(","))
    except ValueError:
        raise SpecError(f"non-integer parameter in family spec {text!r}") from None
    spec = FamilySpec(tag, params)
    _validate(spec)
    return spec


_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "star": 1,
    "subdivided_star": 2,
    "clique_paths": 2,
    "cycle_plus": 1,
    "random": 3,
}


def _validate(spec: FamilySpec) -> None:
    tag, p = spec.tag, spec.params
    if tag not in _ARITY:
        raise SpecError(f"unknown family tag {tag!r}")
    if len(p) != _ARITY[tag]:
        raise SpecError(f"family {tag!r} expects {_ARITY[tag]} parameter(s), got {len(p)}")
    ok = {
        "path": lambda: p[0] >= 1,
        "cycle": lambda: p[0] >= 3,
        "complete": lambda: p[0] >= 1,
        "star": lambda: p[0] >= 1,
        "subdivided_star": lambda: p[0] >= 2 and p[1] >= 0,
        "clique_paths": lambda: p[0] >= 2 and p[1] >= 1,
        "cycle_plus": lambda: p[0] >= 3,
        "random": lambda: p[0] >= 1 and 0 < p[1] < 1000,
    }[tag]
    if not ok():
        raise SpecError(f"parameters out of range for family spec {spec}")


def generate(spec: FamilySpec) -> Graph:
    if spec.tag == "join":
        assert spec.joined is not None
        return join(generate(spec.joined[0]), generate(spec.joined[1]))
    _validate(spec)
    p = spec.params
    if spec.tag == "path":
        return _path(p[0])
    if spec.tag == "cycle":
        return _cycle(p[0])
    if spec.tag == "complete":
        return _complete(p[0])
    if spec.tag == "star":
        return _star(p[0])
    if spec.tag == "subdivided_star":
        return _subdivided_star(p[0], p[1])
    if spec.tag == "clique_paths":
        return _clique_paths(p[0], p[1])
    if spec.tag == "cycle_plus":
        return _cycle_plus(p[0])
    return _random_connected(p[0], p[1], p[2])


def _path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _star(s: int) -> Graph:
    return Graph.from_edges(s + 1, [(0, i) for i in range(1, s + 1)])


def _subdivided_star(s: int, r: int) -> Graph:
    # Center 0; each of the s rays is a path of r inner vertices ending in a leaf.
    edges = []
    nxt = 1
    for _ in range(s):
        prev = 0
        for _ in range(r + 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def _clique_paths(n: int, t: int) -> Graph:
    # Vertices 0..n-1 form the clique; each clique vertex gets a pendant path P_t.
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    nxt = n
    for v in range(n):
        prev = v
        for _ in range(t):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def _cycle_plus(n: int) -> Graph:
    edges = [(i, (i + 1) % n) for i in range(n)] + [(0, n)]
    return Graph.from_edges(n + 1, edges)


def _random_connected(n: int, p_milli: int, seed: int) -> Graph:
    rng = random.Random(seed)
    p = p_milli / 1000.0
    for _ in range(_RANDOM_ATTEMPTS):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g
    raise SpecError(
        f"random:{n},{p_milli},{seed} produced no connected graph "
        f"in {_RANDOM_ATTEMPTS} attempts"
    )
