"""Brick labels of covers and the two-step reconstruction of a clique from its bricks.

``phi_L`` grows one left-cornered route per left corner out of a brick clique;
``psi_L`` grows one route per left corner and per sink edge out of the resulting
left-cornered clique.  Together they invert ``down_bricks``.  The right-hand and
dual versions run the same code on a reflected graph.
"""
from __future__ import annotations

from functools import cmp_to_key
from typing import Mapping, Union

from .coherence import (
    IN,
    OUT,
    GRoute,
    _letter_key,
    cmp_preorder,
    enumerate_bricks,
    enumerate_left_cornered_routes,
    enumerate_routes,
    groute,
    are_coherent,
    reflect_route_lr,
    reflect_route_ud,
    weakly_coherent,
)
from .coords import cornered_route
from .errors import InvariantError
from .graph import FramedGraph, LeftCorner, left_corners, reflect_lr, reflect_ud
from .lattice import FramingLattice

BrickClique = frozenset  # of bricks
CorneredClique = Mapping  # corner -> cornered route


def _element(L: FramingLattice, x) -> int:
    return x if isinstance(x, int) else L.find(x)


def _check_brick_clique(G: FramedGraph, T) -> None:
    T = list(T)
    for i, s in enumerate(T):
        if s.kind != "brick":
            raise ValueError(f"{s} is not a brick")
        for t in T[i + 1 :]:
            if not are_coherent(G, s, t):
                raise InvariantError(f"bricks {s} and {t} are not coherent")


def down_bricks(L: FramingLattice, x) -> BrickClique:
    T = frozenset(lab for _, lab in L.lower_covers[_element(L, x)])
    _check_brick_clique(L.graph, T)
    return T


def up_bricks(L: FramingLattice, x) -> BrickClique:
    T = frozenset(lab for _, lab in L.upper_covers[_element(L, x)])
    _check_brick_clique(L.graph, T)
    return T


# -- first step -------------------------------------------------------------------

def phi_L(G: FramedGraph, T, c: LeftCorner) -> GRoute:
    """Largest left-cornered route from ``c`` that no brick of ``T`` forbids, built greedily."""
    path: list[str] = []
    v = c.apex
    while not G.is_sink(v):
        cur = groute(G, c, path, v)
        active = [t for t in T if v in t.vset and cmp_preorder(G, v, IN, cur, t) <= 0]
        for e in reversed(G.out_order(v)):
            k = _letter_key(G, v, OUT, e)
            if all(k <= _letter_key(G, v, OUT, t.out_letter[v]) for t in active):
                break
        else:
            raise InvariantError(f"no admissible outgoing edge at {v} growing from {c}")
        path.append(e)
        v = G.edge(e).head
    return groute(G, c, path, v)


def phi_L_all(G: FramedGraph, T) -> dict[LeftCorner, GRoute]:
    LT = {c: phi_L(G, T, c) for c in left_corners(G)}
    _check_cornered_clique(G, LT)
    return LT


def phi_L_brute(G: FramedGraph, T, c: LeftCorner) -> GRoute:
    """Oracle: maximum, in the outgoing order at the apex, over all left-cornered routes at ``c``
    weakly coherent with ``T`` and strictly below the brick of ``T`` cornered at ``c``."""
    own = [t for t in T if t.left == c]
    cands = [
        s
        for s in enumerate_left_cornered_routes(G)
        if s.left == c
        and all(weakly_coherent(G, s, t) for t in T)
        and all(cmp_preorder(G, c.apex, OUT, s, t) < 0 for t in own)
    ]
    if not cands:
        raise InvariantError(f"no admissible left-cornered route at {c}")
    return max(cands, key=cmp_to_key(lambda s, t: cmp_preorder(G, c.apex, OUT, s, t)))


def _check_cornered_clique(G: FramedGraph, LT) -> None:
    routes = list(LT.values())
    for i, s in enumerate(routes):
        for t in routes[i + 1 :]:
            if not are_coherent(G, s, t):
                raise InvariantError(f"cornered routes {s} and {t} are not coherent")


# -- second step ------------------------------------------------------------------

Seed = Union[LeftCorner, str]


def _seed_path(G: FramedGraph, LT, d: Seed) -> list[str]:
    if isinstance(d, LeftCorner):
        return [d.upper, *LT[d].path]
    if not G.is_sink(G.edge(d).head):
        raise ValueError(f"{d} is not a sink edge")
    return [d]


def psi_L(G: FramedGraph, LT, d: Seed) -> GRoute:
    """Smallest route, in the incoming order, that extends the seed of ``d`` coherently with ``LT``."""
    path = _seed_path(G, LT, d)
    end = G.edge(path[-1]).head
    v = G.edge(path[0]).tail
    while not G.is_source(v):
        cur = groute(G, v, path, end)
        active = [t for t in LT.values() if v in t.vset and cmp_preorder(G, v, OUT, cur, t) > 0]
        for e in G.in_order(v):
            k = _letter_key(G, v, IN, e)
            if all(k >= _letter_key(G, v, IN, t.in_letter[v]) for t in active):
                break
        else:
            raise InvariantError(f"no admissible incoming edge at {v} growing from {d}")
        path.insert(0, e)
        v = G.edge(e).tail
    return groute(G, v, path, end)


def psi_L_brute(G: FramedGraph, LT, d: Seed) -> GRoute:
    """Oracle: minimum in the incoming order among routes ending with the seed and coherent with ``LT``."""
    seed = tuple(_seed_path(G, LT, d))
    cands = [
        r
        for r in enumerate_routes(G)
        if r.path[len(r.path) - len(seed) :] == seed and all(are_coherent(G, r, t) for t in LT.values())
    ]
    if not cands:
        raise InvariantError(f"no coherent route extends the seed of {d}")
    v = G.edge(seed[0]).tail
    return min(cands, key=cmp_to_key(lambda p, q: cmp_preorder(G, v, IN, p, q)))


def seeds(G: FramedGraph) -> list[Seed]:
    return [*left_corners(G), *G.sink_edges]


def psi_L_all(G: FramedGraph, LT) -> frozenset[GRoute]:
    routes = [psi_L(G, LT, d) for d in seeds(G)]
    clique = frozenset(routes)
    if len(clique) != len(routes) or len(clique) != G.clique_size:
        raise InvariantError("second reconstruction produced repeated routes")
    rs = list(clique)
    for i, r in enumerate(rs):
        for q in rs[i + 1 :]:
            if not are_coherent(G, r, q):
                raise InvariantError(f"reconstructed routes {r} and {q} are not coherent")
    return clique


def reconstruct(G: FramedGraph, T) -> frozenset[GRoute]:
    """Clique whose lower covers are labelled by the brick clique ``T``."""
    return psi_L_all(G, phi_L_all(G, T))


def sigma_L(G: FramedGraph, clique) -> dict[LeftCorner, GRoute]:
    """Left-cornering map: the cornered route of each left corner."""
    return {c: cornered_route(G, clique, c) for c in left_corners(G)}


# -- dual and right variants --------------------------------------------------------

def up_reconstruct(G: FramedGraph, T) -> frozenset[GRoute]:
    """Clique whose upper covers are labelled by ``T``: reconstruction on the up-down reflection."""
    H = reflect_ud(G)
    return reconstruct(H, frozenset(reflect_route_ud(t) for t in T))


def phi_L_dual(G: FramedGraph, T) -> dict[LeftCorner, GRoute]:
    H = reflect_ud(G)
    LT = phi_L_all(H, frozenset(reflect_route_ud(t) for t in T))
    return {reflect_route_ud(s).left: reflect_route_ud(s) for s in LT.values()}


def psi_L_dual(G: FramedGraph, LT, d: Seed) -> GRoute:
    """Up-down dual of ``psi_L``: the same construction on the reflected framing."""
    H = reflect_ud(G)
    LTH = {reflect_route_ud(s).left: reflect_route_ud(s) for s in LT.values()}
    dd = LeftCorner(d.apex, d.upper, d.lower) if isinstance(d, LeftCorner) else d
    return psi_L(H, LTH, dd)


def psi_L_dual_all(G: FramedGraph, LT) -> frozenset[GRoute]:
    return frozenset(psi_L_dual(G, LT, d) for d in seeds(G))


def _rotated(G: FramedGraph) -> FramedGraph:
    return reflect_ud(reflect_lr(G))


def _to_rotated(G: FramedGraph, s: GRoute) -> GRoute:
    return reflect_route_ud(reflect_route_lr(G, s))


def _from_rotated(G: FramedGraph, s: GRoute) -> GRoute:
    return reflect_route_lr(G, reflect_route_ud(s))


def phi_R(G: FramedGraph, T) -> dict:
    """Right-cornered clique of the clique whose lower covers are labelled by ``T``."""
    H = _rotated(G)
    LT = phi_L_all(H, frozenset(_to_rotated(G, t) for t in T))
    out = {}
    for s in LT.values():
        r = _from_rotated(G, s)
        out[r.right] = r
    return out


def psi_R(G: FramedGraph, RT) -> frozenset[GRoute]:
    H = _rotated(G)
    LT = {}
    for s in RT.values():
        t = _to_rotated(G, s)
        LT[t.left] = t
    return frozenset(_from_rotated(G, r) for r in psi_L_all(H, LT))


def sigma_R(G: FramedGraph, clique) -> dict:
    H = _rotated(G)
    LT = sigma_L(H, frozenset(_to_rotated(G, r) for r in clique))
    out = {}
    for s in LT.values():
        r = _from_rotated(G, s)
        out[r.right] = r
    return out


# -- dynamics and complexes -----------------------------------------------------------

def rowmotion(L: FramingLattice, x) -> int:
    """Reconstruct from the upper-cover labels as if they labelled lower covers."""
    G = L.graph
    return L.find(reconstruct(G, up_bricks(L, x)))


def rowmotion_orbits(L: FramingLattice) -> list[list[int]]:
    perm = [rowmotion(L, x) for x in range(len(L))]
    if sorted(perm) != list(range(len(L))):
        raise InvariantError("rowmotion is not a bijection")
    seen: set[int] = set()
    orbits = []
    for x in range(len(L)):
        if x in seen:
            continue
        orbit = [x]
        seen.add(x)
        y = perm[x]
        while y != x:
            orbit.append(y)
            seen.add(y)
            y = perm[y]
        orbits.append(orbit)
    return orbits


def brick_coherence_graph(G: FramedGraph) -> tuple[tuple[GRoute, ...], list[set[int]]]:
    bricks = enumerate_bricks(G)
    nbrs: list[set[int]] = [set() for _ in bricks]
    for i in range(len(bricks)):
        for j in range(i + 1, len(bricks)):
            if are_coherent(G, bricks[i], bricks[j]):
                nbrs[i].add(j)
                nbrs[j].add(i)
    return bricks, nbrs


def brick_complex_faces(G: FramedGraph, up_to_size: int | None = None) -> list[BrickClique]:
    """All sets of pairwise coherent bricks of size at most ``up_to_size`` (all when ``None``)."""
    bricks, nbrs = brick_coherence_graph(G)
    faces: list[BrickClique] = []

    def grow(face: list[int], cands: list[int]):
        faces.append(frozenset(bricks[i] for i in face))
        if up_to_size is not None and len(face) >= up_to_size:
            return
        for k, i in enumerate(cands):
            grow(face + [i], [j for j in cands[k + 1 :] if j in nbrs[i]])

    grow([], list(range(len(bricks))))
    return faces
