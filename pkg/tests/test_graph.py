import pytest
from hypothesis import given, strategies as st

from latframe.corpus import random_framed_graph
from latframe.errors import ParseError, ValidationError
from latframe.graph import (
    caracol,
    left_corners,
    make_graph,
    oruga,
    parse_framed_graph,
    reflect_lr,
    reflect_ud,
    relabel_edges,
    right_corners,
    same_framed_graph,
    serialize_framed_graph,
)

seeds = st.integers(min_value=0, max_value=10_000)

ORUGA2 = """\
vertices 3 base0
edge u1 0 1
edge d1 0 1
edge u2 1 2
edge d2 1 2
in 1: u1 d1
out 1: u2 d2
"""


def test_parse_oruga2():
    G = parse_framed_graph(ORUGA2)
    assert G == oruga(2)
    assert G.n == 3 and len(G.edges) == 4


def test_default_framing_is_declaration_order():
    G = parse_framed_graph("vertices 3\nedge b 1 2\nedge a 1 2\nedge c 2 3\n")
    assert G.in_order(2) == ("b", "a")


def test_comments_and_blank_lines():
    G = parse_framed_graph("# oruga\n\nvertices 2  # header\nedge x 1 2\n")
    assert [e.id for e in G.edges] == ["x"]


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("edge a 1 2\n", 1),
        ("vertices 3\nedge a 1 2\nedge b 2 x\n", 3),
        ("vertices 3\nedge a 1 2\nfoo\n", 3),
        ("vertices 3 base7\n", 1),
    ],
)
def test_syntax_errors_carry_line_numbers(text, lineno):
    with pytest.raises(ParseError) as exc:
        parse_framed_graph(text)
    assert exc.value.lineno == lineno


@pytest.mark.parametrize(
    "text",
    [
        "vertices 2\nedge a 2 1\n",  # tail >= head
        "vertices 2\nedge a 1 1\n",
        "vertices 3\nedge a 1 2\nedge a 2 3\n",  # duplicate id
        "vertices 3\nedge a 1 2\nedge b 2 3\nin 2: b\n",  # not a permutation
        "vertices 3\nedge a 1 2\n",  # isolated vertex
        "vertices 2\nedge a 1 5\n",
    ],
)
def test_validation_errors(text):
    with pytest.raises(ValidationError):
        parse_framed_graph(text)


def test_caracol_counts():
    G = caracol(3)
    assert G.n == 6 and len(G.edges) == 9
    assert G.clique_size == 5
    assert [c.apex for c in left_corners(G)] == [2, 3]
    G2 = caracol(2)
    assert len(G2.edges) == 6 and G2.clique_size == 3
    for v in G.internal_vertices:
        assert len(G.incoming(v)) <= 2 and len(G.outgoing(v)) <= 2


def test_oruga_corners():
    G = oruga(2)
    assert [(c.apex, c.lower, c.upper) for c in left_corners(G)] == [(1, "u1", "d1")]
    assert [(c.apex, c.lower, c.upper) for c in right_corners(G)] == [(1, "u2", "d2")]
    assert left_corners(oruga(1)) == ()
    assert len(left_corners(oruga(5))) == 4


def test_reflect_ud_reverses_orders():
    assert reflect_ud(oruga(2)).in_order(1) == ("d1", "u1")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_oruga_is_left_right_symmetric(n):
    m = {}
    for i in range(1, n + 1):
        m[f"u{i}"] = f"u{n + 1 - i}"
        m[f"d{i}"] = f"d{n + 1 - i}"
    assert same_framed_graph(relabel_edges(reflect_lr(oruga(n)), m), oruga(n))


@given(seeds)
def test_serialize_round_trip(seed):
    G = random_framed_graph(seed)
    text = serialize_framed_graph(G)
    assert parse_framed_graph(text) == G
    assert serialize_framed_graph(parse_framed_graph(text)) == text


@given(seeds)
def test_reflections_are_commuting_involutions(seed):
    G = random_framed_graph(seed)
    assert reflect_ud(reflect_ud(G)) == G
    assert reflect_lr(reflect_lr(G)) == G
    assert reflect_ud(reflect_lr(G)) == reflect_lr(reflect_ud(G))


@given(seeds)
def test_corner_count_formula(seed):
    G = random_framed_graph(seed)
    internal = G.internal_vertices
    assert len(left_corners(G)) == sum(len(G.incoming(v)) - 1 for v in internal)
    assert len(right_corners(G)) == sum(len(G.outgoing(v)) - 1 for v in internal)


def test_make_graph_rejects_bad_ids():
    with pytest.raises(ValidationError):
        make_graph(2, [("a b", 1, 2)])
