"""Cornering routes, left/right cubical coordinates and left-clockwise bricks."""
from __future__ import annotations

from functools import cmp_to_key, lru_cache
from typing import Optional

from .coherence import (
    IN,
    OUT,
    GRoute,
    cmp_preorder,
    enumerate_bricks,
    enumerate_left_cornered_routes,
    groute,
    is_clockwise_at,
    reflect_route_lr,
    sort_routes,
)
from .errors import InvariantError
from .graph import FramedGraph, LeftCorner, left_corners, lr_vertex, reflect_lr, right_corners


def clique_cmp(G: FramedGraph, v: int, p: GRoute, q: GRoute) -> int:
    """Total order on the routes of one clique through ``v``: incoming first, outgoing to break ties."""
    c = cmp_preorder(G, v, IN, p, q)
    return c if c else cmp_preorder(G, v, OUT, p, q)


def cornering_routes(G: FramedGraph, clique, c: LeftCorner) -> tuple[GRoute, GRoute]:
    """``(lower, upper)``: the largest clique route entering ``c`` by its lower edge
    and the smallest one entering by its upper edge."""
    v = c.apex
    key = cmp_to_key(lambda p, q: clique_cmp(G, v, p, q))
    through = sorted((r for r in clique if v in r.vset), key=key)
    lows = [r for r in through if r.in_letter[v] == c.lower]
    highs = [r for r in through if r.in_letter[v] == c.upper]
    if not lows or not highs:
        raise InvariantError(f"no clique route uses both sides of {c}")
    lower, upper = lows[-1], highs[0]
    i, j = through.index(lower), through.index(upper)
    if j != i + 1:
        raise InvariantError(f"cornering routes at {c} are not consecutive")
    k, m = lower.vertices.index(v), upper.vertices.index(v)
    if lower.path[k:] != upper.path[m:]:
        raise InvariantError(f"cornering routes at {c} differ after the corner")
    return lower, upper


def cornered_route(G: FramedGraph, clique, c: LeftCorner) -> GRoute:
    lower, _ = cornering_routes(G, clique, c)
    k = lower.vertices.index(c.apex)
    return groute(G, c, lower.path[k:], lower.end)


@lru_cache(maxsize=128)
def _coranks(G: FramedGraph) -> dict[LeftCorner, dict[GRoute, int]]:
    out = {}
    for c in left_corners(G):
        at = [s for s in enumerate_left_cornered_routes(G) if s.left == c]
        at.sort(key=cmp_to_key(lambda s, t: cmp_preorder(G, c.apex, OUT, s, t)))
        out[c] = {s: len(at) - 1 - i for i, s in enumerate(at)}
    return out


def ccl(G: FramedGraph, clique) -> tuple[int, ...]:
    """Left cubical coordinates, indexed like ``left_corners(G)``."""
    ranks = _coranks(G)
    return tuple(ranks[c][cornered_route(G, clique, c)] for c in left_corners(G))


def ccl_dict(G: FramedGraph, clique) -> dict[LeftCorner, int]:
    return dict(zip(left_corners(G), ccl(G, clique)))


def ccr(G: FramedGraph, clique) -> tuple[int, ...]:
    """Right cubical coordinates: corank of the right-cornered routes in the incoming order.

    Computed as the left coordinates of the left-right reflection and indexed like
    ``right_corners(G)``; these decrease along upward covers of ``G``.
    """
    H = reflect_lr(G)
    vals = ccl_dict(H, frozenset(reflect_route_lr(G, r) for r in clique))
    return tuple(vals[LeftCorner(lr_vertex(G, c.apex), c.lower, c.upper)] for c in right_corners(G))


def is_left_clockwise(G: FramedGraph, brick: GRoute, r: GRoute) -> bool:
    v = brick.left.apex
    return v in r.vset and is_clockwise_at(G, brick, r, v)


def left_clockwise_at(G: FramedGraph, clique, c: LeftCorner, check: bool = True) -> set[GRoute]:
    bricks = [b for b in enumerate_bricks(G) if b.left == c]
    found = {b for b in bricks if any(is_left_clockwise(G, b, r) for r in clique)}
    if check:
        sc = cornered_route(G, clique, c)
        _, upper = cornering_routes(G, clique, c)
        above = {b for b in bricks if cmp_preorder(G, c.apex, OUT, b, sc) > 0}
        via_upper = {b for b in bricks if is_left_clockwise(G, b, upper)}
        if not (found == above == via_upper):
            raise InvariantError(f"left-clockwise characterizations disagree at {c}")
        for b in found:
            for b2 in bricks:
                if cmp_preorder(G, c.apex, OUT, b2, b) > 0 and b2 not in found:
                    raise InvariantError(f"left-clockwise bricks at {c} are not an upper ideal")
        if len(found) != _coranks(G)[c][sc]:
            raise InvariantError(f"left-clockwise count differs from the coordinate at {c}")
    return found


def left_clockwise_bricks(G: FramedGraph, clique, check: bool = True) -> frozenset[GRoute]:
    out: set[GRoute] = set()
    for c in left_corners(G):
        out |= left_clockwise_at(G, clique, c, check)
    return frozenset(out)


def leq_by_coordinates(G: FramedGraph, a, b) -> bool:
    return all(x <= y for x, y in zip(ccl(G, a), ccl(G, b)))


def not_leq_witness(G: FramedGraph, a, b) -> Optional[tuple[GRoute, GRoute, int]]:
    """``(r, r2, v)`` with ``r`` in ``a``, ``r2`` in ``b`` and ``r2`` clockwise to ``r`` at the
    smallest possible ``v``; ``None`` exactly when ``a <= b``."""
    best = None
    for r in sort_routes(G, a):
        for r2 in sort_routes(G, b):
            for v in sorted(r.vset & r2.vset):
                if best is not None and v >= best[2]:
                    break
                if G.is_internal(v) and is_clockwise_at(G, r2, r, v):
                    best = (r, r2, v)
                    break
    return best
