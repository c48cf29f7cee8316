"""Framed graphs: directed acyclic multigraphs with a total order on the incoming
and on the outgoing edges of every internal vertex.

Vertices are the integers ``base .. base + n - 1`` (``base`` is 0 or 1), so that
the classical families keep their usual labels (the oruga graph lives on
``0..n``).  Only the relative order of vertices matters to the algorithms.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import ParseError, ValidationError

EDGE_ID = re.compile(r"^[A-Za-z0-9_.]+$")


@dataclass(frozen=True, order=True)
class Edge:
    id: str
    tail: int
    head: int


@dataclass(frozen=True, order=True)
class LeftCorner:
    """Two framing-consecutive incoming edges ``lower < upper`` of ``apex``."""

    apex: int
    lower: str
    upper: str

    def __str__(self) -> str:
        return f"[{self.apex}:{self.lower}|{self.upper}>"


@dataclass(frozen=True, order=True)
class RightCorner:
    """Two framing-consecutive outgoing edges ``lower < upper`` of ``apex``."""

    apex: int
    lower: str
    upper: str

    def __str__(self) -> str:
        return f"<{self.lower}|{self.upper}:{self.apex}]"


@dataclass(frozen=True)
class FramedGraph:
    n: int
    edges: tuple[Edge, ...]
    in_orders: tuple[tuple[int, tuple[str, ...]], ...]
    out_orders: tuple[tuple[int, tuple[str, ...]], ...]
    base: int = 1

    # -- lookups ---------------------------------------------------------
    @property
    def vertices(self) -> range:
        return range(self.base, self.base + self.n)

    @cached_property
    def _edge_by_id(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def edge_index(self) -> dict[str, int]:
        """Declaration position of each edge; used as the canonical sort key."""
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def _incoming(self) -> dict[int, list[str]]:
        inc: dict[int, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.head].append(e.id)
        return inc

    @cached_property
    def _outgoing(self) -> dict[int, list[str]]:
        out: dict[int, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.tail].append(e.id)
        return out

    @cached_property
    def _in_order(self) -> dict[int, tuple[str, ...]]:
        return dict(self.in_orders)

    @cached_property
    def _out_order(self) -> dict[int, tuple[str, ...]]:
        return dict(self.out_orders)

    @cached_property
    def _in_pos(self) -> dict[int, dict[str, int]]:
        return {v: {e: i for i, e in enumerate(seq)} for v, seq in self.in_orders}

    @cached_property
    def _out_pos(self) -> dict[int, dict[str, int]]:
        return {v: {e: i for i, e in enumerate(seq)} for v, seq in self.out_orders}

    def edge(self, edge_id: str) -> Edge:
        return self._edge_by_id[edge_id]

    def has_edge(self, edge_id: str) -> bool:
        return edge_id in self._edge_by_id

    def incoming(self, v: int) -> list[str]:
        return self._incoming[v]

    def outgoing(self, v: int) -> list[str]:
        return self._outgoing[v]

    def is_source(self, v: int) -> bool:
        return not self._incoming[v]

    def is_sink(self, v: int) -> bool:
        return not self._outgoing[v]

    def is_internal(self, v: int) -> bool:
        return bool(self._incoming[v]) and bool(self._outgoing[v])

    @cached_property
    def sources(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if self.is_source(v))

    @cached_property
    def sinks(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if self.is_sink(v))

    @cached_property
    def internal_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if self.is_internal(v))

    def in_order(self, v: int) -> tuple[str, ...]:
        return self._in_order[v]

    def out_order(self, v: int) -> tuple[str, ...]:
        return self._out_order[v]

    def in_position(self, v: int, edge_id: str) -> int:
        return self._in_pos[v][edge_id]

    def out_position(self, v: int, edge_id: str) -> int:
        return self._out_pos[v][edge_id]

    @cached_property
    def sink_edges(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges if self.is_sink(e.head))

    @cached_property
    def clique_size(self) -> int:
        """|E| - |V| + #sources + #sinks, the common size of all maximal cliques."""
        return len(self.edges) - self.n + len(self.sources) + len(self.sinks)

    @cached_property
    def _hash(self) -> int:
        return hash((self.n, self.base, self.edges, self.in_orders, self.out_orders))

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FramedGraph(n={self.n}, base={self.base}, edges={len(self.edges)})"


def make_graph(
    n: int,
    edges: Iterable[tuple[str, int, int]],
    in_order: Mapping[int, Sequence[str]] | None = None,
    out_order: Mapping[int, Sequence[str]] | None = None,
    base: int = 1,
) -> FramedGraph:
    """Build and validate a framed graph.

    Internal vertices missing from ``in_order``/``out_order`` get the edge
    declaration order.
    """
    in_order = dict(in_order or {})
    out_order = dict(out_order or {})
    if n < 1:
        raise ValidationError("vertex count must be positive")
    if base not in (0, 1):
        raise ValidationError("base must be 0 or 1")
    vs = range(base, base + n)
    seen: set[str] = set()
    elist = []
    for eid, t, h in edges:
        if not EDGE_ID.match(eid):
            raise ValidationError(f"invalid edge id {eid!r}")
        if eid in seen:
            raise ValidationError(f"duplicate edge id {eid!r}")
        seen.add(eid)
        if t not in vs or h not in vs:
            raise ValidationError(f"edge {eid}: vertex out of range")
        if t >= h:
            raise ValidationError(f"edge {eid}: tail {t} >= head {h} (edges must go from a smaller to a larger vertex)")
        elist.append(Edge(eid, t, h))

    inc: dict[int, list[str]] = {v: [] for v in vs}
    out: dict[int, list[str]] = {v: [] for v in vs}
    for e in elist:
        inc[e.head].append(e.id)
        out[e.tail].append(e.id)
    for v in vs:
        if not inc[v] and not out[v]:
            raise ValidationError(f"vertex {v} is isolated")
    internal = [v for v in vs if inc[v] and out[v]]

    for name, given, incident in (("in", in_order, inc), ("out", out_order, out)):
        for v, seq in given.items():
            if v not in internal:
                raise ValidationError(f"framing '{name} {v}' given for a vertex that is not internal")
            if sorted(seq) != sorted(incident[v]) or len(set(seq)) != len(seq):
                raise ValidationError(
                    f"framing '{name} {v}' is not a permutation of the {name}coming edges of {v}"
                )

    ins = tuple((v, tuple(in_order.get(v, inc[v]))) for v in internal)
    outs = tuple((v, tuple(out_order.get(v, out[v]))) for v in internal)
    return FramedGraph(n=n, edges=tuple(elist), in_orders=ins, out_orders=outs, base=base)


# -- text format -------------------------------------------------------------

def parse_framed_graph(text: str) -> FramedGraph:
    n = None
    base = 1
    edges: list[tuple[str, int, int]] = []
    in_order: dict[int, list[str]] = {}
    out_order: dict[int, list[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        head = words[0]
        if n is None:
            if head != "vertices" or len(words) not in (2, 3):
                raise ParseError(lineno, "expected 'vertices <n> [base0|base1]' header")
            try:
                n = int(words[1])
            except ValueError:
                raise ParseError(lineno, f"bad vertex count {words[1]!r}") from None
            if len(words) == 3:
                if words[2] not in ("base0", "base1"):
                    raise ParseError(lineno, f"bad base {words[2]!r}")
                base = int(words[2][-1])
            continue
        if head == "edge":
            if len(words) != 4:
                raise ParseError(lineno, "expected 'edge <id> <tail> <head>'")
            try:
                edges.append((words[1], int(words[2]), int(words[3])))
            except ValueError:
                raise ParseError(lineno, "edge endpoints must be integers") from None
        elif head in ("in", "out"):
            m = re.match(r"^(in|out)\s+(-?\d+)\s*:(.*)$", line)
            if not m:
                raise ParseError(lineno, f"expected '{head} <v>: <id> ...'")
            v = int(m.group(2))
            target = in_order if head == "in" else out_order
            if v in target:
                raise ParseError(lineno, f"duplicate framing line for '{head} {v}'")
            target[v] = m.group(3).split()
        else:
            raise ParseError(lineno, f"unknown directive {head!r}")
    if n is None:
        raise ParseError(1, "missing 'vertices' header")
    return make_graph(n, edges, in_order, out_order, base=base)


def serialize_framed_graph(G: FramedGraph) -> str:
    lines = [f"vertices {G.n} base{G.base}"]
    lines += [f"edge {e.id} {e.tail} {e.head}" for e in G.edges]
    for v in G.internal_vertices:
        lines.append(f"in {v}: " + " ".join(G.in_order(v)))
        lines.append(f"out {v}: " + " ".join(G.out_order(v)))
    return "\n".join(lines) + "\n"


# -- reflections ---------------------------------------------------------------

def reflect_ud(G: FramedGraph) -> FramedGraph:
    """Reverse every framing order; the underlying graph is unchanged."""
    return FramedGraph(
        n=G.n,
        edges=G.edges,
        in_orders=tuple((v, seq[::-1]) for v, seq in G.in_orders),
        out_orders=tuple((v, seq[::-1]) for v, seq in G.out_orders),
        base=G.base,
    )


def lr_vertex(G: FramedGraph, v: int) -> int:
    return 2 * G.base + G.n - 1 - v


def reflect_lr(G: FramedGraph) -> FramedGraph:
    """Reverse all edges and renumber vertices so that tails stay smaller than heads."""
    f = lambda v: lr_vertex(G, v)  # noqa: E731
    edges = tuple(Edge(e.id, f(e.head), f(e.tail)) for e in G.edges)
    ins = tuple(sorted((f(v), seq) for v, seq in G.out_orders))
    outs = tuple(sorted((f(v), seq) for v, seq in G.in_orders))
    return FramedGraph(n=G.n, edges=edges, in_orders=ins, out_orders=outs, base=G.base)


def relabel_edges(G: FramedGraph, mapping: Mapping[str, str]) -> FramedGraph:
    """Rename edge ids; handy for testing framed-graph isomorphisms."""
    m = lambda e: mapping.get(e, e)  # noqa: E731
    edges = tuple(Edge(m(e.id), e.tail, e.head) for e in G.edges)
    return FramedGraph(
        n=G.n,
        edges=edges,
        in_orders=tuple((v, tuple(map(m, s))) for v, s in G.in_orders),
        out_orders=tuple((v, tuple(map(m, s))) for v, s in G.out_orders),
        base=G.base,
    )


def same_framed_graph(G: FramedGraph, H: FramedGraph) -> bool:
    """Equality up to edge declaration order."""
    return (
        G.n == H.n
        and G.base == H.base
        and sorted(G.edges) == sorted(H.edges)
        and G.in_orders == H.in_orders
        and G.out_orders == H.out_orders
    )


# -- families ------------------------------------------------------------------

def oruga(n: int) -> FramedGraph:
    """Two parallel edges ``u_i`` (smaller) and ``d_i`` from ``i-1`` to ``i``, on vertices ``0..n``."""
    if n < 1:
        raise ValueError("oruga(n) needs n >= 1")
    edges = []
    for i in range(1, n + 1):
        edges += [(f"u{i}", i - 1, i), (f"d{i}", i - 1, i)]
    ins = {i: [f"u{i}", f"d{i}"] for i in range(1, n)}
    outs = {i: [f"u{i + 1}", f"d{i + 1}"] for i in range(1, n)}
    return make_graph(n + 1, edges, ins, outs, base=0)


def caracol(n: int, framing: str = "tamari") -> FramedGraph:
    """Path ``0 -> 1 -> ... -> n+2`` plus fan edges ``(0, i)`` and ``(i, n+2)`` for ``2 <= i <= n``.

    With the default framing the path edges come first everywhere.  ``framing="reversed"``
    reverses every order, giving another (anti-isomorphic) lattice.
    """
    if n < 2:
        raise ValueError("caracol(n) needs n >= 2")
    sink = n + 2
    edges = [(f"p{i}", i, i + 1) for i in range(sink)]
    edges += [(f"a{i}", 0, i) for i in range(2, n + 1)]
    edges += [(f"b{i}", i, sink) for i in range(2, n + 1)]
    ins = {}
    outs = {}
    for v in range(1, n + 2):
        ins[v] = [f"p{v - 1}"] + ([f"a{v}"] if 2 <= v <= n else [])
        outs[v] = [f"p{v}"] + ([f"b{v}"] if 2 <= v <= n else [])
    G = make_graph(n + 3, edges, ins, outs, base=0)
    if framing == "reversed":
        return reflect_ud(G)
    if framing != "tamari":
        raise ValueError(f"unknown caracol framing {framing!r}")
    return G


# -- corners -------------------------------------------------------------------

@lru_cache(maxsize=256)
def left_corners(G: FramedGraph) -> tuple[LeftCorner, ...]:
    return tuple(
        LeftCorner(v, seq[k], seq[k + 1]) for v, seq in G.in_orders for k in range(len(seq) - 1)
    )


@lru_cache(maxsize=256)
def right_corners(G: FramedGraph) -> tuple[RightCorner, ...]:
    return tuple(
        RightCorner(v, seq[k], seq[k + 1]) for v, seq in G.out_orders for k in range(len(seq) - 1)
    )
