from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from latframe.classical import perm_to_clique, weak_leq
from latframe.coherence import enumerate_routes, groute, route
from latframe.corpus import random_framed_graph
from latframe.errors import RouteLimitError
from latframe.graph import LeftCorner, RightCorner, make_graph, oruga
from latframe.lattice import (
    FramingLattice,
    adjacent,
    bron_kerbosch,
    build_lattice,
    canonical_join_representation,
    check_semidistributive,
    check_semidistributive_triples,
    coherence_graph,
    cover_label,
    flip_graph_cliques,
    join_irreducibles,
    maximal_cliques,
    to_dot,
)

seeds = st.integers(min_value=0, max_value=5_000)
G2 = oruga(2)
BOTTOM2 = frozenset(route(G2, *w) for w in [("u1", "u2"), ("u1", "d2"), ("d1", "d2")])
TOP2 = frozenset(route(G2, *w) for w in [("u1", "u2"), ("d1", "u2"), ("d1", "d2")])
BRICK2 = groute(G2, LeftCorner(1, "u1", "d1"), (), RightCorner(1, "u2", "d2"))


def poset_from_covers(n, covers):
    """A FramingLattice shell over an abstract poset, for testing the order-theoretic code."""
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from(covers)
    up = [sum(1 << b for b in nx.descendants(g, a) | {a}) for a in range(n)]
    down = [sum(1 << b for b in nx.ancestors(g, a) | {a}) for a in range(n)]
    lower = [[(a, None) for a, b in covers if b == x] for x in range(n)]
    upper = [[(b, None) for a, b in covers if a == x] for x in range(n)]
    return FramingLattice(None, list(range(n)), [(a, b, None) for a, b in covers], up, down, lower, upper, {})


def test_oruga2_lattice():
    L = build_lattice(G2)
    assert L.elements == [BOTTOM2, TOP2]
    assert L.hasse == [(0, 1, BRICK2)]
    assert cover_label(G2, BOTTOM2, TOP2) == BRICK2
    assert adjacent(G2, BOTTOM2, TOP2) == (route(G2, "u1", "d2"), route(G2, "d1", "u2"), ((), 1, 1))
    assert adjacent(G2, BOTTOM2, BOTTOM2) is None
    assert canonical_join_representation(L, 1) == {1}
    assert canonical_join_representation(L, 0) == frozenset()


def test_oruga3_hexagon():
    L = build_lattice(oruga(3))
    assert len(L) == 6 and len(L.hasse) == 6
    assert len(join_irreducibles(L)) == 4
    assert all(len(D) == 4 for D in L.elements)
    a, b = (b for a, b, _ in L.hasse if a == L.bottom)
    assert L.join(a, b) == L.top


def test_single_edge_graph():
    G = make_graph(2, [("e", 1, 2)])
    L = build_lattice(G)
    assert len(L) == 1 and L.hasse == []
    assert check_semidistributive(L)


def test_adjacent_needs_one_exchange():
    L = build_lattice(oruga(3))
    assert adjacent(L.graph, L.elements[L.bottom], L.elements[L.top]) is None


def test_route_limit():
    with pytest.raises(RouteLimitError):
        maximal_cliques(oruga(5), route_limit=10)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_join_matches_weak_order(n):
    L = build_lattice(oruga(n))
    perms = list(permutations(range(1, n + 1)))
    idx = {p: L.find(perm_to_clique(n, p)) for p in perms}
    for p in perms:
        for q in perms:
            ub = [r for r in perms if weak_leq(p, r) and weak_leq(q, r)]
            least = [r for r in ub if all(weak_leq(r, s) for s in ub)]
            assert [idx[r] for r in least] == [L.join(idx[p], idx[q])]


@given(seeds)
def test_cliques_match_networkx(seed):
    G = random_framed_graph(seed)
    routes = enumerate_routes(G)
    nbrs = coherence_graph(G, routes)
    g = nx.Graph()
    g.add_nodes_from(range(len(routes)))
    g.add_edges_from((i, j) for i in range(len(routes)) for j in nbrs[i])
    assert set(bron_kerbosch(nbrs)) == {frozenset(c) for c in nx.find_cliques(g)}


@given(seeds)
def test_lattice_against_brute_force(seed):
    G = random_framed_graph(seed)
    L = build_lattice(G)
    assert set(flip_graph_cliques(G, L.elements[0])) == set(L.elements)
    g = nx.DiGraph([(a, b) for a, b, _ in L.hasse])
    g.add_nodes_from(range(len(L)))
    assert nx.is_directed_acyclic_graph(g)
    closure = nx.transitive_closure_dag(g)
    red = nx.transitive_reduction(g)
    assert set(red.edges) == set(g.edges)
    for a in range(len(L)):
        for b in range(len(L)):
            assert L.leq(a, b) == (a == b or closure.has_edge(a, b))
            ub = [c for c in range(len(L)) if L.leq(a, c) and L.leq(b, c)]
            assert [c for c in ub if all(L.leq(c, d) for d in ub)] == [L.join(a, b)]
            lb = [c for c in range(len(L)) if L.leq(c, a) and L.leq(c, b)]
            assert [c for c in lb if all(L.leq(d, c) for d in lb)] == [L.meet(a, b)]
    assert check_semidistributive(L) and check_semidistributive_triples(L)


def test_semidistributivity_detects_m3_and_accepts_n5():
    m3 = poset_from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    assert not check_semidistributive(m3)
    assert not check_semidistributive_triples(m3)
    n5 = poset_from_covers(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
    assert check_semidistributive(n5) and check_semidistributive_triples(n5)


def test_dot_is_deterministic():
    L = build_lattice(oruga(3))
    dot = to_dot(L)
    assert dot == to_dot(build_lattice(oruga(3)))
    assert dot.count("->") == 6 and "n5" in dot
