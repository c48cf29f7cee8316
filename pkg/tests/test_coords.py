from hypothesis import given, strategies as st

from latframe.checks import meet_intersection_witness
from latframe.classical import perm_to_clique
from latframe.coherence import enumerate_bricks, enumerate_left_cornered_routes, groute, route
from latframe.coords import (
    ccl,
    ccl_dict,
    ccr,
    cornering_routes,
    leq_by_coordinates,
    left_clockwise_at,
    left_clockwise_bricks,
    not_leq_witness,
)
from latframe.corpus import random_framed_graph, standard_corpus
from latframe.graph import LeftCorner, RightCorner, left_corners, oruga
from latframe.lattice import build_lattice

G2 = oruga(2)
C1 = LeftCorner(1, "u1", "d1")
L2 = build_lattice(G2)
BOTTOM, TOP = L2.elements
B = groute(G2, C1, (), RightCorner(1, "u2", "d2"))

graph_seeds = st.integers(min_value=0, max_value=5_000)


def test_cornering_routes_oruga2():
    assert cornering_routes(G2, BOTTOM, C1) == (route(G2, "u1", "d2"), route(G2, "d1", "d2"))
    assert cornering_routes(G2, TOP, C1) == (route(G2, "u1", "u2"), route(G2, "d1", "u2"))


def test_ccl_oruga():
    assert ccl_dict(G2, BOTTOM) == {C1: 0} and ccl_dict(G2, TOP) == {C1: 1}
    assert ccl(oruga(3), perm_to_clique(3, (3, 2, 1))) == (3, 1)
    assert ccl(oruga(3), perm_to_clique(3, (2, 1, 3))) == (2, 0)


def test_left_clockwise_oruga2():
    assert left_clockwise_bricks(G2, TOP) == {B}
    assert left_clockwise_bricks(G2, BOTTOM) == frozenset()
    assert left_clockwise_at(G2, TOP, C1) == {B}


def test_witness_oruga2():
    assert not_leq_witness(G2, BOTTOM, TOP) is None
    assert not_leq_witness(G2, TOP, BOTTOM) == (route(G2, "d1", "u2"), route(G2, "u1", "d2"), 1)
    assert leq_by_coordinates(G2, TOP, TOP)


def test_meet_is_not_intersection_somewhere():
    witnesses = [name for name, G in standard_corpus() if meet_intersection_witness(G)]
    assert witnesses


def test_ccr_changes_one_coordinate_downward():
    # observed direction: right coordinates decrease along upward covers
    for name, G in standard_corpus(10):
        L = build_lattice(G)
        for a, b, _ in L.hasse:
            x, y = ccr(G, L.elements[a]), ccr(G, L.elements[b])
            diff = [k for k in range(len(x)) if x[k] != y[k]]
            assert len(diff) == 1 and x[diff[0]] > y[diff[0]], name


@given(graph_seeds)
def test_cube_embedding_and_comparison(seed):
    G = random_framed_graph(seed)
    L = build_lattice(G)
    coords = [ccl(G, D) for D in L.elements]
    sizes = {c: sum(1 for s in enumerate_left_cornered_routes(G) if s.left == c) for c in left_corners(G)}
    for v in coords:
        assert all(0 <= x < sizes[c] for x, c in zip(v, left_corners(G)))
    assert not any(coords[L.bottom])
    for a, b, _ in L.hasse:
        diff = [k for k in range(len(coords[a])) if coords[a][k] != coords[b][k]]
        assert len(diff) == 1 and coords[a][diff[0]] < coords[b][diff[0]]
    lcb = [left_clockwise_bricks(G, D) for D in L.elements]
    for a in range(len(L)):
        for b in range(len(L)):
            t = L.leq(a, b)
            assert leq_by_coordinates(G, L.elements[a], L.elements[b]) == t
            assert (lcb[a] <= lcb[b]) == t
            w = not_leq_witness(G, L.elements[a], L.elements[b])
            assert (w is None) == t


@given(graph_seeds)
def test_top_has_all_bricks_left_clockwise(seed):
    G = random_framed_graph(seed)
    L = build_lattice(G)
    assert left_clockwise_bricks(G, L.elements[L.top]) == frozenset(enumerate_bricks(G))
