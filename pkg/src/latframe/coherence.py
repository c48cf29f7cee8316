"""Generalized routes and the order-theoretic notion of crossing between them.

A generalized route is ``left · path · right`` where each end is either a vertex
(a source on the left, a sink on the right) or a corner.  Comparisons at a vertex
``v`` read the route as a word of letters: going backwards from ``v`` for the
incoming preorder, forwards for the outgoing one.  Letters are edges, plus at
most one terminal corner, which sits strictly between its two edges.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Union

from .errors import InvariantError
from .graph import FramedGraph, LeftCorner, RightCorner, left_corners, lr_vertex, right_corners

IN, OUT = "in", "out"
Letter = Union[str, LeftCorner, RightCorner]


@dataclass(frozen=True)
class GRoute:
    left: Union[int, LeftCorner]
    path: tuple[str, ...]
    right: Union[int, RightCorner]
    vertices: tuple[int, ...]

    @property
    def kind(self) -> str:
        lc = isinstance(self.left, LeftCorner)
        rc = isinstance(self.right, RightCorner)
        return {(False, False): "route", (True, True): "brick", (True, False): "left", (False, True): "right"}[
            (lc, rc)
        ]

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    @cached_property
    def vset(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @cached_property
    def in_letter(self) -> dict[int, Letter]:
        d: dict[int, Letter] = {w: e for w, e in zip(self.vertices[1:], self.path)}
        if isinstance(self.left, LeftCorner):
            d[self.vertices[0]] = self.left
        return d

    @cached_property
    def out_letter(self) -> dict[int, Letter]:
        d: dict[int, Letter] = {w: e for w, e in zip(self.vertices, self.path)}
        if isinstance(self.right, RightCorner):
            d[self.vertices[-1]] = self.right
        return d

    def uses(self, edge_id: str) -> bool:
        return edge_id in self.path

    def __str__(self) -> str:
        parts = []
        if isinstance(self.left, LeftCorner):
            parts.append(str(self.left))
        if self.path:
            parts.append("-".join(self.path))
        if isinstance(self.right, RightCorner):
            parts.append(str(self.right))
        return "·".join(parts)


def groute(G: FramedGraph, left, path, right) -> GRoute:
    """Build a generalized path, checking that its pieces fit together."""
    path = tuple(path)
    if path:
        start = G.edge(path[0]).tail
        verts = [start]
        for e in path:
            edge = G.edge(e)
            if edge.tail != verts[-1]:
                raise ValueError(f"edges do not form a path at {e}")
            verts.append(edge.head)
    else:
        apex = left.apex if isinstance(left, LeftCorner) else left
        verts = [apex]
    lv = left.apex if isinstance(left, LeftCorner) else left
    rv = right.apex if isinstance(right, RightCorner) else right
    if lv != verts[0] or rv != verts[-1]:
        raise ValueError("ends do not match the path")
    if isinstance(left, LeftCorner) and (
        G.edge(left.lower).head != lv or G.edge(left.upper).head != lv
    ):
        raise ValueError(f"{left} is not a left corner at {lv}")
    if isinstance(right, RightCorner) and (
        G.edge(right.lower).tail != rv or G.edge(right.upper).tail != rv
    ):
        raise ValueError(f"{right} is not a right corner at {rv}")
    return GRoute(left, path, right, tuple(verts))


def route(G: FramedGraph, *edges: str) -> GRoute:
    """Plain source-to-sink route from its edge ids."""
    return groute(G, G.edge(edges[0]).tail, edges, G.edge(edges[-1]).head)


def is_generalized_route(G: FramedGraph, s: GRoute) -> bool:
    if isinstance(s.left, int) and not G.is_source(s.left):
        return False
    if isinstance(s.right, int) and not G.is_sink(s.right):
        return False
    return True


_LEFT = re.compile(r"^\[(-?\d+):([A-Za-z0-9_.]+)\|([A-Za-z0-9_.]+)>$")
_RIGHT = re.compile(r"^<([A-Za-z0-9_.]+)\|([A-Za-z0-9_.]+):(-?\d+)\]$")


def parse_groute(G: FramedGraph, text: str) -> GRoute:
    """Inverse of ``str(GRoute)``; ``*`` is accepted in place of ``·``."""
    pieces = [p.strip() for p in re.split(r"[·*]", text.strip()) if p.strip()]
    left = right = None
    edges: list[str] = []
    for k, piece in enumerate(pieces):
        if m := _LEFT.match(piece):
            if k != 0:
                raise ValueError(f"left corner must come first in {text!r}")
            left = LeftCorner(int(m.group(1)), m.group(2), m.group(3))
        elif m := _RIGHT.match(piece):
            if k != len(pieces) - 1:
                raise ValueError(f"right corner must come last in {text!r}")
            right = RightCorner(int(m.group(3)), m.group(1), m.group(2))
        else:
            edges += piece.split("-")
    for e in edges:
        if not G.has_edge(e):
            raise ValueError(f"unknown edge {e!r}")
    if left is None:
        if not edges:
            raise ValueError(f"empty route {text!r}")
        left = G.edge(edges[0]).tail
    if right is None:
        right = G.edge(edges[-1]).head if edges else left.apex
    return groute(G, left, edges, right)


# -- canonical ordering ----------------------------------------------------------

def _end_key(G: FramedGraph, end) -> tuple:
    if isinstance(end, LeftCorner):
        return (end.apex, 1, G.in_position(end.apex, end.lower))
    if isinstance(end, RightCorner):
        return (end.apex, 1, G.out_position(end.apex, end.lower))
    return (end, 0, 0)


def route_key(G: FramedGraph, s: GRoute) -> tuple:
    """Canonical sort key: edge declaration order first, then the ends."""
    return (tuple(G.edge_index[e] for e in s.path), _end_key(G, s.left), _end_key(G, s.right))


def sort_routes(G: FramedGraph, routes: Iterable[GRoute]) -> list[GRoute]:
    return sorted(routes, key=lambda s: route_key(G, s))


# -- letters and preorders ------------------------------------------------------

def _letter_key(G: FramedGraph, v: int, side: str, a: Letter) -> int:
    pos = G.in_position if side == IN else G.out_position
    if isinstance(a, str):
        return 2 * pos(v, a)
    want = LeftCorner if side == IN else RightCorner
    if not isinstance(a, want) or a.apex != v:
        raise ValueError(f"{a} is not a {side}coming corner at {v}")
    return 2 * pos(v, a.lower) + 1


def extended_letter_compare(G: FramedGraph, v: int, side: str, a: Letter, b: Letter) -> int:
    """Three-way comparison of two letters at ``v``; a corner sits just after its lower edge."""
    try:
        ka, kb = _letter_key(G, v, side, a), _letter_key(G, v, side, b)
    except KeyError as exc:
        raise ValueError(f"letter {exc} is not {side}coming at vertex {v}") from None
    return (ka > kb) - (ka < kb)


def cmp_preorder(G: FramedGraph, v: int, side: str, s: GRoute, t: GRoute) -> int:
    """Compare ``s`` and ``t`` in the incoming (``side='in'``) or outgoing preorder at ``v``."""
    if v not in s.vset or v not in t.vset:
        raise ValueError(f"both routes must pass through {v}")
    if side == IN:
        sl, tl = s.in_letter, t.in_letter
    else:
        sl, tl = s.out_letter, t.out_letter
    w = v
    while True:
        a = sl.get(w)
        b = tl.get(w)
        if a == b:
            if a is None or not isinstance(a, str):
                return 0
            e = G.edge(a)
            w = e.tail if side == IN else e.head
            continue
        if a is None or b is None:
            raise InvariantError(f"one word is a proper prefix of the other at {w}: {s} vs {t}")
        ka, kb = _letter_key(G, w, side, a), _letter_key(G, w, side, b)
        return -1 if ka < kb else 1


def is_clockwise_at(G: FramedGraph, s: GRoute, t: GRoute, v: int) -> bool:
    """``s`` is strictly below ``t`` coming in and strictly above it going out."""
    return cmp_preorder(G, v, IN, s, t) < 0 and cmp_preorder(G, v, OUT, s, t) > 0


def shared_internal(G: FramedGraph, s: GRoute, t: GRoute) -> list[int]:
    return sorted(v for v in s.vset & t.vset if G.is_internal(v))


@dataclass(frozen=True)
class Verdict:
    kind: str  # coherent | shared_left | shared_right | first_clockwise | second_clockwise
    witness: object = None

    @property
    def coherent(self) -> bool:
        return self.kind == "coherent"

    @property
    def weakly_coherent(self) -> bool:
        return self.kind in ("coherent", "shared_left", "shared_right")


def _clockwise_witness(G, s, t):
    for v in shared_internal(G, s, t):
        ci = cmp_preorder(G, v, IN, s, t)
        if ci == 0:
            continue
        co = cmp_preorder(G, v, OUT, s, t)
        if ci < 0 and co > 0:
            return Verdict("first_clockwise", v)
        if ci > 0 and co < 0:
            return Verdict("second_clockwise", v)
    return None


def coherence(G: FramedGraph, s: GRoute, t: GRoute) -> Verdict:
    if isinstance(s.left, LeftCorner) and s.left == t.left:
        return Verdict("shared_left", s.left)
    if isinstance(s.right, RightCorner) and s.right == t.right:
        return Verdict("shared_right", s.right)
    return _clockwise_witness(G, s, t) or Verdict("coherent")


def weakly_coherent(G: FramedGraph, s: GRoute, t: GRoute) -> bool:
    return _clockwise_witness(G, s, t) is None


def are_coherent(G: FramedGraph, s: GRoute, t: GRoute) -> bool:
    return coherence(G, s, t).coherent


def conflict_subroutes(G: FramedGraph, p: GRoute, q: GRoute) -> list[tuple[tuple[str, ...], int, int]]:
    """Maximal common subpaths around every vertex where one route is clockwise to the other."""
    found = []
    for v in shared_internal(G, p, q):
        if not (is_clockwise_at(G, p, q, v) or is_clockwise_at(G, q, p, v)):
            continue
        back: list[str] = []
        a = v
        while isinstance(p.in_letter.get(a), str) and p.in_letter.get(a) == q.in_letter.get(a):
            back.append(p.in_letter[a])
            a = G.edge(p.in_letter[a]).tail
        fwd: list[str] = []
        b = v
        while isinstance(p.out_letter.get(b), str) and p.out_letter.get(b) == q.out_letter.get(b):
            fwd.append(p.out_letter[b])
            b = G.edge(p.out_letter[b]).head
        sub = (tuple(back[::-1] + fwd), a, b)
        if sub not in found:
            found.append(sub)
    return found


# -- enumeration -----------------------------------------------------------------

def _paths_from(G: FramedGraph, v: int):
    """All (path, end vertex) pairs starting at v, including the empty path."""
    stack = [((), v)]
    while stack:
        path, w = stack.pop()
        yield path, w
        for e in G.outgoing(w):
            stack.append((path + (e,), G.edge(e).head))


@lru_cache(maxsize=128)
def enumerate_routes(G: FramedGraph) -> tuple[GRoute, ...]:
    out = []
    for s in G.sources:
        for path, w in _paths_from(G, s):
            if path and G.is_sink(w):
                out.append(groute(G, s, path, w))
    return tuple(sort_routes(G, out))


@lru_cache(maxsize=128)
def enumerate_bricks(G: FramedGraph) -> tuple[GRoute, ...]:
    rcs: dict[int, list[RightCorner]] = {}
    for c in right_corners(G):
        rcs.setdefault(c.apex, []).append(c)
    out = []
    for c in left_corners(G):
        for path, w in _paths_from(G, c.apex):
            for rc in rcs.get(w, ()):
                out.append(groute(G, c, path, rc))
    return tuple(sort_routes(G, out))


@lru_cache(maxsize=128)
def enumerate_left_cornered_routes(G: FramedGraph) -> tuple[GRoute, ...]:
    out = []
    for c in left_corners(G):
        for path, w in _paths_from(G, c.apex):
            if G.is_sink(w):
                out.append(groute(G, c, path, w))
    return tuple(sort_routes(G, out))


def left_cornered_routes_at(G: FramedGraph, c: LeftCorner) -> list[GRoute]:
    return [s for s in enumerate_left_cornered_routes(G) if s.left == c]


# -- transport through reflections ---------------------------------------------------

def _flip_corner(c):
    return type(c)(c.apex, c.upper, c.lower)


def reflect_route_ud(s: GRoute) -> GRoute:
    """The same generalized route read in the up-down reflected graph (corner edges swap roles)."""
    left = _flip_corner(s.left) if isinstance(s.left, LeftCorner) else s.left
    right = _flip_corner(s.right) if isinstance(s.right, RightCorner) else s.right
    return GRoute(left, s.path, right, s.vertices)


def reflect_route_lr(G: FramedGraph, s: GRoute) -> GRoute:
    """The reversed route in ``reflect_lr(G)``; ``G`` is the graph ``s`` lives in."""
    f = lambda v: lr_vertex(G, v)  # noqa: E731
    if isinstance(s.right, RightCorner):
        left = LeftCorner(f(s.right.apex), s.right.lower, s.right.upper)
    else:
        left = f(s.right)
    if isinstance(s.left, LeftCorner):
        right = RightCorner(f(s.left.apex), s.left.lower, s.left.upper)
    else:
        right = f(s.left)
    return GRoute(left, s.path[::-1], right, tuple(f(v) for v in reversed(s.vertices)))
