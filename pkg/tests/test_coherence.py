from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from latframe.coherence import (
    IN,
    OUT,
    cmp_preorder,
    coherence,
    conflict_subroutes,
    enumerate_bricks,
    enumerate_left_cornered_routes,
    enumerate_routes,
    extended_letter_compare,
    groute,
    is_clockwise_at,
    parse_groute,
    reflect_route_lr,
    reflect_route_ud,
    route,
    shared_internal,
    weakly_coherent,
)
from latframe.corpus import random_framed_graph
from latframe.graph import LeftCorner, RightCorner, make_graph, oruga, reflect_lr, reflect_ud

G2 = oruga(2)
C_IN = LeftCorner(1, "u1", "d1")
C_OUT = RightCorner(1, "u2", "d2")
BRICK = groute(G2, C_IN, (), C_OUT)

seeds = st.integers(min_value=0, max_value=5_000)


def test_letter_order_in_and_out():
    assert extended_letter_compare(G2, 1, IN, "u1", C_IN) < 0
    assert extended_letter_compare(G2, 1, IN, C_IN, "d1") < 0
    assert extended_letter_compare(G2, 1, IN, "d1", "d1") == 0
    G3 = oruga(3)
    rc = RightCorner(1, "u2", "d2")
    assert extended_letter_compare(G3, 1, OUT, "u2", rc) < 0 < extended_letter_compare(G3, 1, OUT, "d2", rc)


def test_letter_not_incident():
    with pytest.raises(ValueError):
        extended_letter_compare(G2, 1, IN, "u2", "u1")


def test_preorder_examples():
    assert cmp_preorder(G2, 1, IN, route(G2, "u1", "d2"), route(G2, "d1", "u2")) < 0
    assert cmp_preorder(G2, 1, OUT, BRICK, route(G2, "d1", "u2")) > 0
    r = route(G2, "u1", "u2")
    assert cmp_preorder(G2, 1, IN, r, r) == 0


def test_clockwise_examples():
    assert is_clockwise_at(G2, route(G2, "u1", "d2"), route(G2, "d1", "u2"), 1)
    assert is_clockwise_at(G2, BRICK, route(G2, "d1", "u2"), 1)
    assert not is_clockwise_at(G2, BRICK, BRICK, 1)


def test_verdicts():
    assert coherence(G2, route(G2, "u1", "u2"), route(G2, "d1", "d2")).coherent
    v = coherence(G2, route(G2, "u1", "d2"), route(G2, "d1", "u2"))
    assert (v.kind, v.witness) == ("first_clockwise", 1)
    v = coherence(G2, route(G2, "d1", "u2"), route(G2, "u1", "d2"))
    assert (v.kind, v.witness) == ("second_clockwise", 1)
    G3 = oruga(3)
    b1 = groute(G3, LeftCorner(1, "u1", "d1"), (), RightCorner(1, "u2", "d2"))
    b2 = groute(G3, LeftCorner(1, "u1", "d1"), ("u2",), RightCorner(2, "u3", "d3"))
    v = coherence(G3, b1, b2)
    assert v.kind == "shared_left" and v.weakly_coherent and not v.coherent


def test_conflict_subroutes():
    assert conflict_subroutes(G2, route(G2, "u1", "d2"), route(G2, "d1", "u2")) == [((), 1, 1)]
    assert conflict_subroutes(G2, route(G2, "u1", "u2"), route(G2, "d1", "d2")) == []


def test_enumeration_counts():
    assert len(enumerate_routes(oruga(3))) == 8
    assert len(enumerate_bricks(G2)) == 1 and enumerate_bricks(G2)[0] == BRICK
    assert [len(enumerate_bricks(oruga(n))) for n in (2, 3, 4, 5)] == [1, 4, 11, 26]
    single = make_graph(2, [("e", 1, 2)])
    assert len(enumerate_routes(single)) == 1


def test_route_notation():
    assert str(BRICK) == "[1:u1|d1>·<u2|d2:1]"
    assert parse_groute(G2, "[1:u1|d1>*<u2|d2:1]") == BRICK
    assert parse_groute(G2, "u1-d2") == route(G2, "u1", "d2")
    with pytest.raises(ValueError):
        parse_groute(G2, "u1-u1")


@given(seeds)
def test_notation_round_trip(seed):
    G = random_framed_graph(seed)
    for s in enumerate_routes(G) + enumerate_bricks(G) + enumerate_left_cornered_routes(G):
        assert parse_groute(G, str(s)) == s


@given(seeds)
def test_preorder_is_total_and_antisymmetric(seed):
    G = random_framed_graph(seed)
    routes = enumerate_routes(G)[:30]
    for v in G.internal_vertices:
        through = [r for r in routes if v in r.vset]
        for side in (IN, OUT):
            for p in through:
                for q in through:
                    c = cmp_preorder(G, v, side, p, q)
                    assert c == -cmp_preorder(G, v, side, q, p)
                    if p == q:
                        assert c == 0
            for p, q, r in combinations(through[:8], 3):
                if cmp_preorder(G, v, side, p, q) <= 0 and cmp_preorder(G, v, side, q, r) <= 0:
                    assert cmp_preorder(G, v, side, p, r) <= 0


@given(seeds)
def test_clockwise_is_asymmetric_and_routes_never_share_corners(seed):
    G = random_framed_graph(seed)
    routes = enumerate_routes(G)
    for p, q in combinations(routes[:40], 2):
        for v in shared_internal(G, p, q):
            assert not (is_clockwise_at(G, p, q, v) and is_clockwise_at(G, q, p, v))
        assert coherence(G, p, q).coherent == weakly_coherent(G, p, q)


@given(seeds)
def test_transport_preserves_coherence(seed):
    G = random_framed_graph(seed)
    H, K = reflect_ud(G), reflect_lr(G)
    items = list(enumerate_routes(G)[:20]) + list(enumerate_bricks(G)[:10])
    for s, t in combinations(items, 2):
        c = coherence(G, s, t).coherent
        assert coherence(H, reflect_route_ud(s), reflect_route_ud(t)).coherent == c
        assert coherence(K, reflect_route_lr(G, s), reflect_route_lr(G, t)).coherent == c
