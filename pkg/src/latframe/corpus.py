"""Seeded random framed graphs and the fixed test corpus."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .coherence import enumerate_bricks, enumerate_routes
from .graph import FramedGraph, caracol, make_graph, oruga, reflect_ud


@dataclass(frozen=True)
class RandomGraphConfig:
    max_vertices: int = 6
    max_edges: int = 10
    max_multiplicity: int = 2
    max_routes: int = 512


def _layered_edges(rng: random.Random, max_vertices: int, max_edges: int, max_multiplicity: int):
    n = rng.randint(4, max_vertices)
    # nondecreasing layer labels over vertices 1..n, starting at layer 0
    layers = [0]
    for _ in range(n - 1):
        layers.append(layers[-1] + (rng.random() < 0.8))
    pairs = [
        (t, h)
        for t in range(1, n + 1)
        for h in range(t + 1, n + 1)
        if layers[h - 1] - layers[t - 1] in (1, 2)
    ]
    mult: dict[tuple[int, int], int] = {}
    for v in range(1, n + 1):
        near = [p for p in pairs if v in p]
        if not near:
            return None
        if not any(v in p for p in mult):
            p = rng.choice(near)
            mult[p] = mult.get(p, 0) + 1
    target = rng.randint(min(n + 2, max_edges), max_edges)
    while sum(mult.values()) < target:
        free = [p for p in pairs if mult.get(p, 0) < max_multiplicity]
        if not free:
            break
        p = rng.choice(free)
        mult[p] = mult.get(p, 0) + 1
    if sum(mult.values()) > max_edges:
        return None
    edges = []
    for (t, h), k in sorted(mult.items()):
        for _ in range(k):
            edges.append((f"e{len(edges)}", t, h))
    return n, edges


def random_framed_graph(seed: int, max_vertices: int = 6, max_edges: int = 10, max_multiplicity: int = 2) -> FramedGraph:
    """Layered DAG: vertices split into consecutive layers, edges jump one or two layers.

    Every vertex first gets one edge, then random edges (at most ``max_multiplicity``
    parallel copies) are added up to a random target count; framings are uniform.
    """
    rng = random.Random(seed)
    drawn = None
    while drawn is None:
        drawn = _layered_edges(rng, max_vertices, max_edges, max_multiplicity)
    n, edges = drawn
    inc: dict[int, list[str]] = {}
    out: dict[int, list[str]] = {}
    for eid, t, h in edges:
        out.setdefault(t, []).append(eid)
        inc.setdefault(h, []).append(eid)
    internal = [v for v in range(1, n + 1) if v in inc and v in out]
    ins = {v: rng.sample(inc[v], len(inc[v])) for v in internal}
    outs = {v: rng.sample(out[v], len(out[v])) for v in internal}
    return make_graph(n, edges, ins, outs, base=1)


def random_corpus(count: int = 50, config: RandomGraphConfig = RandomGraphConfig(), start_seed: int = 0):
    """``count`` random graphs with at least one brick and within the route budget,
    as ``(name, graph)`` pairs."""
    out = []
    seed = start_seed
    while len(out) < count:
        G = random_framed_graph(seed, config.max_vertices, config.max_edges, config.max_multiplicity)
        if len(enumerate_routes(G)) <= config.max_routes and enumerate_bricks(G):
            out.append((f"random:{seed},{config.max_vertices},{config.max_edges}", G))
        seed += 1
    return out


def standard_corpus(random_count: int = 50) -> list[tuple[str, FramedGraph]]:
    """oruga(2..4), caracol(2..3) with both framings, and seeded random graphs."""
    named = [(f"oruga:{n}", oruga(n)) for n in (2, 3, 4)]
    named += [(f"caracol:{n}", caracol(n)) for n in (2, 3)]
    named += [(f"caracol-reversed:{n}", reflect_ud(caracol(n))) for n in (2, 3)]
    return named + random_corpus(random_count)
